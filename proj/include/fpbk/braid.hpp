#pragma once

#include <cstdlib>
#include <utility>
#include <string>
#include <vector>

#include "fpbk/basket.hpp"
#include "fpbk/errors.hpp"
#include "fpbk/planar_diagram.hpp"

namespace fpbk {

// Braid word on `strands` strands. Letter +i is sigma_i, -i its inverse.
// sigma_i is the crossing where strand i passes over strand i+1, strands
// running upwards.
struct Braid {
    int strands = 1;
    std::vector<int> word;

    void validate() const {
        if (strands < 1) throw ValidationError("braid needs at least one strand");
        for (int g : word)
            if (g == 0 || std::abs(g) >= strands)
                throw ValidationError("generator " + std::to_string(g) + " invalid on " + std::to_string(strands) +
                                      " strands");
    }

    int exponent_sum() const {
        int e = 0;
        for (int g : word) e += g > 0 ? 1 : -1;
        return e;
    }

    Braid inverse() const {
        Braid b{strands, {}};
        for (auto it = word.rbegin(); it != word.rend(); ++it) b.word.push_back(-*it);
        return b;
    }

    // "s1 s2^-1 s1"
    std::string to_string() const {
        if (word.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i) s += ' ';
            s += 's' + std::to_string(std::abs(word[i]));
            if (word[i] < 0) s += "^-1";
        }
        return s;
    }

    friend bool operator==(const Braid&, const Braid&) = default;
};

// Parses "1 -2 1", "1,-2,1" or "s1 s2^-1 s1".
inline Braid parse_braid(const std::string& text, int strands = 0) {
    Braid b;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        std::string t = tok;
        tok.clear();
        int sign = 1;
        if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
            sign = -1;
            t.resize(t.size() - 3);
        }
        if (!t.empty() && (t[0] == 's' || t[0] == 'S')) t = t.substr(1);
        std::size_t used = 0;
        int g = 0;
        try {
            g = std::stoi(t, &used);
        } catch (const std::exception&) {
            throw ParseError("bad braid letter '" + t + "'");
        }
        if (used != t.size() || g == 0) throw ParseError("bad braid letter '" + t + "'");
        b.word.push_back(sign * g);
    };
    for (char ch : text) {
        if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\n' || ch == '[' || ch == ']')
            flush();
        else
            tok += ch;
    }
    flush();
    int need = 1;
    for (int g : b.word) need = std::max(need, std::abs(g) + 1);
    b.strands = strands > 0 ? strands : need;
    b.validate();
    return b;
}

// Cancels adjacent inverse pairs.
inline Braid free_reduce(const Braid& b) {
    Braid r{b.strands, {}};
    for (int g : b.word) {
        if (!r.word.empty() && r.word.back() == -g)
            r.word.pop_back();
        else
            r.word.push_back(g);
    }
    return r;
}

// Band generator a_{i,j} = (s_{j-2} ... s_i)^{-1} s_{j-1} (s_{j-2} ... s_i), 1 <= i < j.
inline std::vector<int> band_generator(int i, int j) {
    if (i < 1 || j <= i) throw ValidationError("band generator needs 1 <= i < j");
    std::vector<int> w;
    for (int k = i; k <= j - 2; ++k) w.push_back(-k);
    w.push_back(j - 1);
    for (int k = j - 2; k >= i; --k) w.push_back(k);
    return w;
}

inline Braid band_generator(int i, int j, int k) {
    if (j > k) throw ValidationError("band generator a_{" + std::to_string(i) + "," + std::to_string(j) +
                                     "} needs at least " + std::to_string(j) + " strands");
    return Braid{k, band_generator(i, j)};
}

struct ClosureStats {
    int components = 0;
    int e = 0;
    int sl = 0;  // self-linking of the closure as a transverse link
};

inline ClosureStats closure_stats(const Braid& b) {
    b.validate();
    std::vector<int> perm(b.strands);
    for (int p = 0; p < b.strands; ++p) perm[p] = p;
    for (int g : b.word) std::swap(perm[std::abs(g) - 1], perm[std::abs(g)]);
    std::vector<char> seen(b.strands, 0);
    ClosureStats s;
    for (int p = 0; p < b.strands; ++p) {
        if (seen[p]) continue;
        ++s.components;
        for (int q = p; !seen[q]; q = perm[q]) seen[q] = 1;
    }
    s.e = b.exponent_sum();
    s.sl = s.e - b.strands;
    return s;
}

inline Braid mirror(const Braid& b) {
    Braid r{b.strands, {}};
    for (int g : b.word) r.word.push_back(-g);
    return r;
}

// (s_1 ... s_{q-1})^p on q strands.
inline Braid torus_braid(int p, int q) {
    if (q < 2 || p < q) throw ValidationError("torus braid needs p >= q > 1");
    Braid b{q, {}};
    for (int r = 0; r < p; ++r)
        for (int i = 1; i < q; ++i) b.word.push_back(i);
    return b;
}

// e + strands - 1 for a positive word of minimal braid index; the caller
// asserts minimality.
inline int positive_braid_fpbk(const Braid& b) {
    b.validate();
    for (int g : b.word)
        if (g < 0) throw ValidationError("positive_braid_fpbk needs a positive word");
    return b.exponent_sum() + b.strands - 1;
}

// Reads the code as a word in band generators: the first foot of band i
// contributes a_{1,i+1}, the second its inverse. The word is not reduced.
inline Braid basket_to_braid(const FlatBasketCode& code) {
    Braid b{code.bands() + 1, {}};
    for (int pos = 1; pos <= code.length(); ++pos) {
        const int l = code.label_at(pos);
        auto a = band_generator(1, l + 1);
        if (!code.first_foot(pos)) {
            std::vector<int> inv;
            for (auto it = a.rbegin(); it != a.rend(); ++it) inv.push_back(-*it);
            a = std::move(inv);
        }
        b.word.insert(b.word.end(), a.begin(), a.end());
    }
    return b;
}

// Diagram of the braid closure.
inline PlanarDiagram closure_diagram(const Braid& b) {
    b.validate();
    PlanarDiagram d;
    std::vector<int> cur(b.strands);
    for (int p = 0; p < b.strands; ++p) cur[p] = p;
    int next = b.strands;
    std::vector<char> touched(b.strands, 0);
    for (int g : b.word) {
        const int i = std::abs(g) - 1;
        const int a = cur[i], c = cur[i + 1];
        const int na = next++, nc = next++;
        Crossing x;
        if (g > 0) {
            x = {c, na, a, nc, 1};
        } else {
            x = {a, nc, c, na, -1};
        }
        d.crossings.push_back(x);
        cur[i] = na;
        cur[i + 1] = nc;
        touched[i] = touched[i + 1] = 1;
    }
    // Close up: the top edge at each position is the bottom edge there.
    std::vector<int> alias(next);
    for (int e = 0; e < next; ++e) alias[e] = e;
    for (int p = 0; p < b.strands; ++p) {
        if (!touched[p]) {
            ++d.free_loops;
            continue;
        }
        alias[cur[p]] = p;
    }
    for (auto& x : d.crossings)
        for (int* id : {&x.under_in, &x.under_out, &x.over_in, &x.over_out}) *id = alias[*id];
    return compact_edges(d);
}

}  // namespace fpbk
