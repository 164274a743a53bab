#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpbk/errors.hpp"

namespace fpbk {

using Coeff = std::int64_t;

namespace detail {

inline Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw LimitError("polynomial coefficient overflow");
    return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw LimitError("polynomial coefficient overflow");
    return r;
}

inline std::string monomial_text(Coeff c, const std::vector<std::pair<char, int>>& vars, bool first) {
    std::string s;
    const bool neg = c < 0;
    const Coeff a = neg ? -c : c;
    if (first)
        s += neg ? "-" : "";
    else
        s += neg ? " - " : " + ";
    std::string body;
    for (auto [name, e] : vars) {
        if (e == 0) continue;
        if (!body.empty()) body += ' ';
        body += name;
        if (e != 1) body += '^' + std::to_string(e);
    }
    if (body.empty())
        s += std::to_string(a);
    else if (a != 1)
        s += std::to_string(a) + body;
    else
        s += body;
    return s;
}

}  // namespace detail

// Exact Laurent polynomial in one variable.
class LaurentPoly1 {
public:
    LaurentPoly1() = default;
    static LaurentPoly1 monomial(Coeff c, int e) {
        LaurentPoly1 p;
        if (c) p.terms_[e] = c;
        return p;
    }

    const std::map<int, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }
    int min_degree() const { return terms_.begin()->first; }
    int max_degree() const { return terms_.rbegin()->first; }

    LaurentPoly1& operator+=(const LaurentPoly1& o) {
        for (auto [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly1& operator-=(const LaurentPoly1& o) {
        for (auto [e, c] : o.terms_) add_term(e, detail::checked_mul(c, -1));
        return *this;
    }
    friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) { return a += b; }
    friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) { return a -= b; }
    friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
        LaurentPoly1 r;
        for (auto [ea, ca] : a.terms_)
            for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, detail::checked_mul(ca, cb));
        return r;
    }
    LaurentPoly1 shifted(int k) const {
        LaurentPoly1 r;
        for (auto [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }
    LaurentPoly1 scaled(Coeff k) const {
        LaurentPoly1 r;
        if (k == 0) return r;
        for (auto [e, c] : terms_) r.terms_[e] = detail::checked_mul(c, k);
        return r;
    }
    // p(x) -> p(x^{-1})
    LaurentPoly1 inverted() const {
        LaurentPoly1 r;
        for (auto [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }
    friend bool operator==(const LaurentPoly1&, const LaurentPoly1&) = default;

    // Terms in descending exponent order, e.g. "t^2 - t + 1".
    std::string to_string(char var = 't') const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            s += detail::monomial_text(it->second, {{var, it->first}}, first);
            first = false;
        }
        return s;
    }

private:
    void add_term(int e, Coeff c) {
        if (!c) return;
        auto [it, ins] = terms_.try_emplace(e, c);
        if (!ins) {
            it->second = detail::checked_add(it->second, c);
            if (!it->second) terms_.erase(it);
        }
    }
    std::map<int, Coeff> terms_;
};

// Exact Laurent polynomial in v and z.
class LaurentPoly2 {
public:
    using Key = std::pair<int, int>;  // (v exponent, z exponent)

    LaurentPoly2() = default;
    static LaurentPoly2 monomial(Coeff c, int ev, int ez) {
        LaurentPoly2 p;
        if (c) p.terms_[{ev, ez}] = c;
        return p;
    }
    static LaurentPoly2 one() { return monomial(1, 0, 0); }
    // (v - v^{-1}) z^{-1}, the value on the two-component unlink.
    static LaurentPoly2 delta() { return monomial(1, 1, -1) + monomial(-1, -1, -1); }

    const std::map<Key, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(int ev, int ez) const {
        auto it = terms_.find({ev, ez});
        return it == terms_.end() ? 0 : it->second;
    }

    LaurentPoly2& operator+=(const LaurentPoly2& o) {
        for (auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LaurentPoly2& operator-=(const LaurentPoly2& o) {
        for (auto& [k, c] : o.terms_) add_term(k, detail::checked_mul(c, -1));
        return *this;
    }
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 r;
        for (auto& [ka, ca] : a.terms_)
            for (auto& [kb, cb] : b.terms_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, detail::checked_mul(ca, cb));
        return r;
    }
    LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }

    // Multiplies by c v^ev z^ez.
    LaurentPoly2 times_monomial(Coeff c, int ev, int ez) const {
        LaurentPoly2 r;
        if (c == 0) return r;
        for (auto& [k, x] : terms_) r.terms_[{k.first + ev, k.second + ez}] = detail::checked_mul(x, c);
        return r;
    }

    LaurentPoly2 pow(int k) const {
        LaurentPoly2 r = one();
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    // v -> -v^{-1}; the value on the mirror image.
    LaurentPoly2 mirrored() const {
        LaurentPoly2 r;
        for (auto& [k, c] : terms_) r.terms_[{-k.first, k.second}] = (k.first % 2) ? -c : c;
        return r;
    }

    std::optional<int> max_v_degree() const {
        if (terms_.empty()) return std::nullopt;
        int m = terms_.begin()->first.first;
        for (auto& [k, c] : terms_) m = std::max(m, k.first);
        return m;
    }
    std::optional<int> min_v_degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first.first;
    }

    // Sum of coefficients at v = 1, as a polynomial in z.
    LaurentPoly1 at_v_one() const {
        LaurentPoly1 r;
        for (auto& [k, c] : terms_) r += LaurentPoly1::monomial(c, k.second);
        return r;
    }

    friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

    // Canonical text: ascending z exponent, then descending v exponent,
    // e.g. "-v^4 + 2v^2 + v^2 z^2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Key, Coeff>> t(terms_.begin(), terms_.end());
        std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
            if (a.first.second != b.first.second) return a.first.second < b.first.second;
            return a.first.first > b.first.first;
        });
        std::string s;
        bool first = true;
        for (auto& [k, c] : t) {
            s += detail::monomial_text(c, {{'v', k.first}, {'z', k.second}}, first);
            first = false;
        }
        return s;
    }

private:
    void add_term(Key k, Coeff c) {
        if (!c) return;
        auto [it, ins] = terms_.try_emplace(k, c);
        if (!ins) {
            it->second = detail::checked_add(it->second, c);
            if (!it->second) terms_.erase(it);
        }
    }
    std::map<Key, Coeff> terms_;
};

}  // namespace fpbk
