#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "fpbk/errors.hpp"

namespace fpbk {

inline constexpr int kDefaultEnumerationLimit = 6;

// Cyclic word of length 2n in which every label 1..n occurs exactly twice.
// Labels are page indices; positions are feet along the binding, 1-based.
class FlatBasketCode {
public:
    FlatBasketCode() = default;

    explicit FlatBasketCode(std::vector<int> word) : word_(std::move(word)) {
        if (word_.empty() || word_.size() % 2 != 0)
            throw ValidationError("basket code must have positive even length");
        const int n = static_cast<int>(word_.size() / 2);
        feet_.assign(n, {0, 0});
        std::vector<int> seen(n, 0);
        for (std::size_t i = 0; i < word_.size(); ++i) {
            const int l = word_[i];
            if (l < 1 || l > n)
                throw ValidationError("label " + std::to_string(l) + " outside 1.." + std::to_string(n));
            if (seen[l - 1] == 2)
                throw ValidationError("label " + std::to_string(l) + " occurs more than twice");
            (seen[l - 1] == 0 ? feet_[l - 1].first : feet_[l - 1].second) = static_cast<int>(i) + 1;
            ++seen[l - 1];
        }
    }

    int bands() const { return static_cast<int>(feet_.size()); }
    int length() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }

    // Label at foot position pos (1-based).
    int label_at(int pos) const { return word_.at(pos - 1); }

    // Positions (k, k') of the two feet of a band, k < k'.
    std::pair<int, int> feet(int label) const { return feet_.at(label - 1); }

    bool first_foot(int pos) const { return feet(label_at(pos)).first == pos; }

    int euler_characteristic() const { return 1 - bands(); }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(word_[i]);
        }
        return s;
    }

    friend bool operator==(const FlatBasketCode& a, const FlatBasketCode& b) { return a.word_ == b.word_; }
    friend auto operator<=>(const FlatBasketCode& a, const FlatBasketCode& b) { return a.word_ <=> b.word_; }
    friend std::ostream& operator<<(std::ostream& os, const FlatBasketCode& c) { return os << '[' << c.to_string() << ']'; }

private:
    std::vector<int> word_;
    std::vector<std::pair<int, int>> feet_;
};

// Basket on an open book whose page S0 has Euler characteristic page_euler.
// One cyclic word per binding component; band labels 1..n appear twice
// across all words. Isotopy labels are opaque arc-class tokens.
struct ExtendedBasketCode {
    std::vector<std::vector<int>> words;
    std::vector<std::string> isotopy_labels;
    int page_euler = 1;

    int bands() const {
        std::size_t len = 0;
        for (const auto& w : words) len += w.size();
        return static_cast<int>(len / 2);
    }

    void validate() const {
        if (page_euler > 1) throw ValidationError("page Euler characteristic must be at most 1");
        const int n = bands();
        std::vector<int> count(n + 1, 0);
        std::size_t len = 0;
        for (const auto& w : words)
            for (int l : w) {
                ++len;
                if (l < 1 || l > n) throw ValidationError("label " + std::to_string(l) + " out of range");
                ++count[l];
            }
        if (len % 2 != 0) throw ValidationError("extended code has odd total length");
        for (int l = 1; l <= n; ++l)
            if (count[l] != 2) throw ValidationError("label " + std::to_string(l) + " does not occur twice");
        if (static_cast<int>(isotopy_labels.size()) != n)
            throw ValidationError("need one isotopy label per band");
    }
};

// Euler characteristic of F = S0 plus n bands.
inline int generalized_euler(const ExtendedBasketCode& code) {
    code.validate();
    return code.page_euler - code.bands();
}

namespace detail {

inline std::vector<int> renumber_first_occurrence(const std::vector<int>& w) {
    int maxl = 0;
    for (int l : w) maxl = std::max(maxl, l);
    std::vector<int> map(maxl + 1, 0);
    std::vector<int> out;
    out.reserve(w.size());
    int next = 1;
    for (int l : w) {
        if (!map[l]) map[l] = next++;
        out.push_back(map[l]);
    }
    return out;
}

// Renumbered rotation starting at r, compared against best in place.
inline bool rotation_less(const std::vector<int>& w, std::size_t r, const std::vector<int>& best,
                          std::vector<int>& scratch_map, std::vector<int>* out) {
    const std::size_t m = w.size();
    std::fill(scratch_map.begin(), scratch_map.end(), 0);
    int next = 1;
    bool decided = false;
    bool less = false;
    if (out) out->clear();
    for (std::size_t i = 0; i < m; ++i) {
        const int l = w[(r + i) % m];
        if (!scratch_map[l]) scratch_map[l] = next++;
        const int v = scratch_map[l];
        if (out) out->push_back(v);
        if (!decided && v != best[i]) {
            decided = true;
            less = v < best[i];
            if (!less && !out) return false;
        }
    }
    return less;
}

}  // namespace detail

enum class LabelMode {
    first_occurrence,  // renumber 1..n in order of first occurrence
    keep_page_order,   // compress labels to 1..n keeping their relative order
};

// Parses "1,2,1,2", "[1 2 1 2]" and similar. By default labels are
// renumbered by first occurrence, which may change the page order.
inline FlatBasketCode parse_code(std::string_view text, LabelMode mode = LabelMode::first_occurrence) {
    std::vector<int> raw;
    std::string cur;
    std::size_t start = 0;
    auto flush = [&] {
        if (cur.empty()) return;
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(cur, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        const std::string at = " at position " + std::to_string(start + 1);
        if (used != cur.size()) throw ParseError("not an integer: '" + cur + "'" + at);
        if (v < 1) throw ParseError("labels must be positive, got " + cur + at);
        raw.push_back(static_cast<int>(v));
        cur.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if ((ch >= '0' && ch <= '9') || ch == '-' || ch == '+') {
            if (cur.empty()) start = i;
            cur += ch;
        } else if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '[' || ch == ']' ||
                   ch == '(' || ch == ')') {
            flush();
        } else {
            throw ParseError(std::string("unexpected character '") + ch + "' at position " + std::to_string(i + 1));
        }
    }
    flush();
    if (raw.empty()) throw ParseError("empty basket code");
    if (raw.size() % 2 != 0) throw ValidationError("basket code has odd length " + std::to_string(raw.size()));
    std::vector<int> counts;
    for (int l : raw) {
        if (static_cast<std::size_t>(l) >= counts.size()) counts.resize(l + 1, 0);
        ++counts[l];
    }
    for (std::size_t l = 1; l < counts.size(); ++l)
        if (counts[l] != 0 && counts[l] != 2)
            throw ValidationError("label " + std::to_string(l) + " occurs " + std::to_string(counts[l]) +
                                  " times, expected 2");
    if (mode == LabelMode::first_occurrence) return FlatBasketCode(detail::renumber_first_occurrence(raw));
    std::vector<int> rank(counts.size(), 0);
    int next = 1;
    for (std::size_t l = 1; l < counts.size(); ++l)
        if (counts[l]) rank[l] = next++;
    for (int& l : raw) l = rank[l];
    return FlatBasketCode(std::move(raw));
}

// Lexicographically least renumbered rotation.
inline FlatBasketCode canonical_form(const FlatBasketCode& code) {
    const auto& w = code.word();
    std::vector<int> best = detail::renumber_first_occurrence(w);
    std::vector<int> map(code.bands() + 1, 0);
    std::vector<int> cand;
    for (std::size_t r = 1; r < w.size(); ++r)
        if (detail::rotation_less(w, r, best, map, &cand)) best = cand;
    return FlatBasketCode(std::move(best));
}

// Lexicographically least rotation with labels untouched.
inline FlatBasketCode canonical_rotation(const FlatBasketCode& code) {
    const auto& w = code.word();
    std::vector<int> best = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::vector<int> cand(w.begin() + r, w.end());
        cand.insert(cand.end(), w.begin(), w.begin() + r);
        if (cand < best) best = std::move(cand);
    }
    return FlatBasketCode(std::move(best));
}

inline FlatBasketCode rotate(const FlatBasketCode& code, int k) {
    const auto& w = code.word();
    const int m = code.length();
    std::vector<int> out(m);
    for (int i = 0; i < m; ++i) out[i] = w[((i + k) % m + m) % m];
    return FlatBasketCode(std::move(out));
}

inline bool is_canonical(const FlatBasketCode& code) {
    const auto& w = code.word();
    if (detail::renumber_first_occurrence(w) != w) return false;
    std::vector<int> map(code.bands() + 1, 0);
    for (std::size_t r = 1; r < w.size(); ++r)
        if (detail::rotation_less(w, r, w, map, nullptr)) return false;
    return true;
}

enum class Side { L, R };

struct FootEnd {
    int foot = 0;  // 1-based position
    Side side = Side::L;
    friend bool operator==(const FootEnd&, const FootEnd&) = default;
};

struct BoundaryTrace {
    int components = 0;
    int euler_characteristic = 0;
    // Each cycle lists the foot endpoints in the boundary orientation,
    // alternating binding arcs R_k -> L_{k+1} and band sides L -> R.
    std::vector<std::vector<FootEnd>> cycles;
};

// Traces the boundary of the band surface. Binding arcs join R_k to L_{k+1}
// cyclically; a band with feet k < k' joins R_k to L_{k'} on its inner side
// and L_k to R_{k'} on its outer side.
inline BoundaryTrace trace_boundary(const FlatBasketCode& code) {
    const int m = code.length();
    BoundaryTrace t;
    t.euler_characteristic = code.euler_characteristic();
    std::vector<char> seen(m + 1, 0);
    for (int start = 1; start <= m; ++start) {
        if (seen[start]) continue;
        std::vector<FootEnd> cyc;
        int k = start;
        while (!seen[k]) {
            seen[k] = 1;
            const int j = k % m + 1;
            cyc.push_back({k, Side::R});
            cyc.push_back({j, Side::L});
            auto [a, b] = code.feet(code.label_at(j));
            k = (j == a) ? b : a;
        }
        t.cycles.push_back(std::move(cyc));
    }
    t.components = static_cast<int>(t.cycles.size());
    return t;
}

// Calls fn(code) for every code with n bands, in lexicographic order of words.
// With canonical_only, only canonical representatives are produced. fn may
// return false to stop early. Returns the number of codes visited.
template <class Fn>
std::size_t for_each_code(int n, bool canonical_only, Fn&& fn, int limit = kDefaultEnumerationLimit) {
    if (n < 1) throw ValidationError("band count must be positive");
    if (n > limit)
        throw LimitError("enumeration of n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit));
    const int m = 2 * n;
    std::vector<int> w(m, 0);
    std::vector<int> count(n + 1, 0);
    std::size_t visited = 0;
    bool stop = false;
    std::vector<int> map(n + 1, 0);
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (stop) return;
        if (pos == m) {
            if (canonical_only) {
                for (int r = 1; r < m; ++r)
                    if (detail::rotation_less(w, r, w, map, nullptr)) return;
            }
            ++visited;
            if constexpr (std::is_same_v<std::invoke_result_t<Fn, const FlatBasketCode&>, bool>) {
                if (!fn(FlatBasketCode(w))) stop = true;
            } else {
                fn(FlatBasketCode(w));
            }
            return;
        }
        const int top = canonical_only ? std::min(n, used + 1) : n;
        for (int l = 1; l <= top; ++l) {
            if (count[l] == 2) continue;
            w[pos] = l;
            ++count[l];
            rec(pos + 1, std::max(used, l));
            --count[l];
            if (stop) return;
        }
    };
    rec(0, 0);
    return visited;
}

inline std::vector<FlatBasketCode> enumerate_codes(int n, bool canonical_only, int limit = kDefaultEnumerationLimit) {
    std::vector<FlatBasketCode> out;
    for_each_code(n, canonical_only, [&](const FlatBasketCode& c) { out.push_back(c); }, limit);
    return out;
}

}  // namespace fpbk
