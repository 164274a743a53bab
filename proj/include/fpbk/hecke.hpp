#pragma once

// HOMFLYPT of braid closures through the Hecke algebra and its Markov trace.
// Cost grows with strands! rather than with crossings, so long basket braids
// on few strands stay cheap.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "fpbk/braid.hpp"
#include "fpbk/errors.hpp"
#include "fpbk/laurent.hpp"

namespace fpbk {

inline constexpr int kMaxHeckeStrands = 8;

namespace hecke {

// One-line notation, 4 bits per position; positions past the strand count hold
// their own index, so S_{s-1} embeds in S_s unchanged.
using Perm = std::uint64_t;
using Element = std::unordered_map<Perm, LaurentPoly2>;

inline int at(Perm p, int j) { return static_cast<int>((p >> (4 * j)) & 15); }

inline Perm identity() {
    Perm p = 0;
    for (int j = 0; j < 16; ++j) p |= static_cast<Perm>(j) << (4 * j);
    return p;
}

inline Perm set(Perm p, int j, int v) {
    p &= ~(static_cast<Perm>(15) << (4 * j));
    return p | (static_cast<Perm>(v) << (4 * j));
}

inline Perm swap_positions(Perm p, int i) { return set(set(p, i, at(p, i + 1)), i + 1, at(p, i)); }

inline int position_of(Perm p, int v) {
    for (int j = 0; j < 16; ++j)
        if (at(p, j) == v) return j;
    return -1;
}

inline Perm swap_values(Perm p, int i) {
    const int a = position_of(p, i), b = position_of(p, i + 1);
    return set(set(p, a, i + 1), b, i);
}

inline void add(Element& e, Perm p, const LaurentPoly2& c) {
    if (c.is_zero()) return;
    auto [it, ins] = e.try_emplace(p, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

// g_i T_w, with g_i^2 = v^-2 + v^-1 z g_i.
inline Element left_mul(const Element& e, int i) {
    Element r;
    for (const auto& [w, c] : e) {
        const Perm sw = swap_values(w, i);
        if (position_of(w, i) < position_of(w, i + 1)) {
            add(r, sw, c);
        } else {
            add(r, sw, c.times_monomial(1, -2, 0));
            add(r, w, c.times_monomial(1, -1, 1));
        }
    }
    return r;
}

// T_w g_i or T_w g_i^-1, with g_i^-1 = v^2 g_i - v z.
inline Element right_mul(const Element& e, int i, bool inverse) {
    Element r;
    for (const auto& [w, c] : e) {
        const Perm sw = swap_positions(w, i);
        const bool up = at(w, i) < at(w, i + 1);
        if (!inverse && up) {
            add(r, sw, c);
        } else if (!inverse) {
            add(r, sw, c.times_monomial(1, -2, 0));
            add(r, w, c.times_monomial(1, -1, 1));
        } else if (up) {
            add(r, sw, c.times_monomial(1, 2, 0));
            add(r, w, c.times_monomial(-1, 1, 1));
        } else {
            add(r, sw, c);
        }
    }
    return r;
}

// HOMFLYPT of the closure of the positive permutation braid of w on s strands.
class Trace {
public:
    const LaurentPoly2& of(int s, Perm w) {
        const Perm key = (w << 4) ^ static_cast<Perm>(s);
        if (auto it = memo_.find(key); it != memo_.end() && it->second.first == w) return it->second.second;
        LaurentPoly2 r;
        if (s == 1) {
            r = LaurentPoly2::one();
        } else if (at(w, s - 1) == s - 1) {
            r = LaurentPoly2::delta() * of(s - 1, w);
        } else {
            // w = u c with c = g_{s-2} ... g_k; cycle g_{s-3} ... g_k to the front
            // and drop g_{s-2} by a positive stabilisation.
            const int k = position_of(w, s - 1);
            Perm u = w;
            for (int j = k; j < s - 1; ++j) u = set(u, j, at(w, j + 1));
            u = set(u, s - 1, s - 1);
            Element y{{u, LaurentPoly2::one()}};
            for (int i = k; i <= s - 3; ++i) y = left_mul(y, i);
            for (const auto& [p, c] : y) r += c * of(s - 1, p);
        }
        return memo_.insert_or_assign(key, std::make_pair(w, std::move(r))).first->second.second;
    }

private:
    std::unordered_map<Perm, std::pair<Perm, LaurentPoly2>> memo_;
};

}  // namespace hecke

// Same normalisation as the diagram engine: v P(L+) - v^-1 P(L-) = z P(L0),
// with sigma_i a positive crossing.
inline LaurentPoly2 homflypt(const Braid& b) {
    b.validate();
    if (b.strands > kMaxHeckeStrands)
        throw LimitError("braid has " + std::to_string(b.strands) + " strands, limit is " +
                         std::to_string(kMaxHeckeStrands));
    thread_local hecke::Trace trace;
    hecke::Element e{{hecke::identity(), LaurentPoly2::one()}};
    for (int g : b.word) e = hecke::right_mul(e, std::abs(g) - 1, g < 0);
    LaurentPoly2 p;
    for (const auto& [w, c] : e) p += c * trace.of(b.strands, w);
    return p;
}

}  // namespace fpbk
