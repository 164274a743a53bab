#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fpbk/errors.hpp"
#include "fpbk/laurent.hpp"
#include "fpbk/planar_diagram.hpp"

namespace fpbk {

// CLI default; library calls take the larger bound so n <= 5 braids fit.
inline constexpr int kDefaultCrossingLimit = 24;
inline constexpr int kLibraryCrossingLimit = 64;

// HOMFLYPT polynomial normalised by v P(L+) - v^{-1} P(L-) = z P(L0) and
// P(unknot) = 1.
class HomflyEngine {
public:
    explicit HomflyEngine(int crossing_limit = kLibraryCrossingLimit) : limit_(crossing_limit) {}

    LaurentPoly2 evaluate(const PlanarDiagram& d) {
        d.validate();
        if (d.crossing_count() > limit_)
            throw LimitError("diagram has " + std::to_string(d.crossing_count()) + " crossings, limit is " +
                             std::to_string(limit_));
        if (d.crossing_count() == 0) return LaurentPoly2::delta().pow(std::max(d.free_loops, 1) - 1);
        State s = from_diagram(d);
        LaurentPoly2 p = eval(std::move(s));
        return p * LaurentPoly2::delta().pow(d.free_loops);
    }

    std::size_t memo_size() const { return memo_.size(); }

private:
    // A pass is 2*crossing + 1 for over, 2*crossing for under.
    struct State {
        std::vector<std::vector<int>> comps;
        std::vector<int> sign;  // by crossing id
    };

    static State from_diagram(const PlanarDiagram& d) {
        const int e = d.edge_count();
        std::vector<int> head_pass(e, -1), next(e, -1);
        for (int x = 0; x < d.crossing_count(); ++x) {
            const auto& c = d.crossings[x];
            head_pass[c.under_in] = 2 * x;
            head_pass[c.over_in] = 2 * x + 1;
            next[c.under_in] = c.under_out;
            next[c.over_in] = c.over_out;
        }
        State s;
        for (const auto& c : d.crossings) s.sign.push_back(c.sign);
        std::vector<char> seen(e, 0);
        for (int start = 0; start < e; ++start) {
            if (seen[start]) continue;
            std::vector<int> comp;
            for (int x = start; !seen[x]; x = next[x]) {
                seen[x] = 1;
                comp.push_back(head_pass[x]);
            }
            s.comps.push_back(std::move(comp));
        }
        return s;
    }

    static void remove_kinks(State& s) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto& comp : s.comps) {
                const std::size_t m = comp.size();
                for (std::size_t i = 0; i < m && m >= 2; ++i) {
                    const std::size_t j = (i + 1) % m;
                    if (comp[i] / 2 == comp[j] / 2) {
                        if (j > i) {
                            comp.erase(comp.begin() + i, comp.begin() + i + 2);
                        } else {
                            comp.pop_back();
                            comp.erase(comp.begin());
                        }
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    static int crossing_total(const State& s) {
        std::size_t passes = 0;
        for (const auto& c : s.comps) passes += c.size();
        return static_cast<int>(passes / 2);
    }

    // Groups of components joined by crossings, in order of first component.
    static std::vector<std::vector<int>> pieces(const State& s) {
        const int k = static_cast<int>(s.comps.size());
        std::vector<int> parent(k);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        std::unordered_map<int, int> owner;
        for (int ci = 0; ci < k; ++ci)
            for (int p : s.comps[ci]) {
                auto [it, ins] = owner.try_emplace(p / 2, ci);
                if (!ins) {
                    const int a = find(it->second), b = find(ci);
                    if (a != b) parent[std::max(a, b)] = std::min(a, b);
                }
            }
        std::vector<std::vector<int>> groups;
        std::vector<int> slot(k, -1);
        for (int ci = 0; ci < k; ++ci) {
            const int r = find(ci);
            if (slot[r] < 0) {
                slot[r] = static_cast<int>(groups.size());
                groups.emplace_back();
            }
            groups[slot[r]].push_back(ci);
        }
        return groups;
    }

    // Relabels crossings by first appearance and encodes the state.
    static std::string canonicalize(State& s) {
        std::unordered_map<int, int> relabel;
        std::vector<int> sign;
        std::string key;
        for (auto& comp : s.comps) {
            key.push_back('|');
            for (int& p : comp) {
                auto [it, ins] = relabel.try_emplace(p / 2, static_cast<int>(relabel.size()));
                if (ins) sign.push_back(s.sign[p / 2]);
                p = 2 * it->second + (p & 1);
                const int code = p;
                key.push_back(static_cast<char>(code & 0x7f));
                key.push_back(static_cast<char>((code >> 7) & 0x7f));
            }
        }
        key.push_back('#');
        for (int g : sign) key.push_back(g > 0 ? '+' : '-');
        s.sign = std::move(sign);
        return key;
    }

    LaurentPoly2 eval(State s) {
        remove_kinks(s);
        if (crossing_total(s) == 0) return LaurentPoly2::delta().pow(static_cast<int>(s.comps.size()) - 1);

        auto groups = pieces(s);
        if (groups.size() > 1) {
            LaurentPoly2 r = LaurentPoly2::delta().pow(static_cast<int>(groups.size()) - 1);
            for (const auto& g : groups) {
                State sub;
                sub.sign = s.sign;
                for (int ci : g) sub.comps.push_back(s.comps[ci]);
                r *= eval(std::move(sub));
            }
            return r;
        }

        const std::string key = canonicalize(s);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        LaurentPoly2 result = skein(s);
        memo_.emplace(key, result);
        return result;
    }

    LaurentPoly2 skein(const State& s) {
        std::vector<char> met(s.sign.size(), 0);
        int bad = -1;
        for (const auto& comp : s.comps) {
            for (int p : comp) {
                if (met[p / 2]) continue;
                met[p / 2] = 1;
                if (!(p & 1)) {
                    bad = p / 2;
                    break;
                }
            }
            if (bad >= 0) break;
        }
        if (bad < 0) return LaurentPoly2::delta().pow(static_cast<int>(s.comps.size()) - 1);

        State switched = s;
        for (auto& comp : switched.comps)
            for (int& p : comp)
                if (p / 2 == bad) p ^= 1;
        switched.sign[bad] = -s.sign[bad];

        State smoothed = smooth(s, bad);
        const int g = s.sign[bad];
        // g = +1: P(L+) = v^{-2} P(L-) + v^{-1} z P(L0)
        // g = -1: P(L-) = v^{2} P(L+) - v z P(L0)
        LaurentPoly2 a = eval(std::move(switched)).times_monomial(1, -2 * g, 0);
        LaurentPoly2 b = eval(std::move(smoothed)).times_monomial(g, -g, 1);
        return a + b;
    }

    static State smooth(const State& s, int x) {
        int ci = -1, i = -1, cj = -1, j = -1;
        for (int c = 0; c < static_cast<int>(s.comps.size()); ++c)
            for (int p = 0; p < static_cast<int>(s.comps[c].size()); ++p)
                if (s.comps[c][p] / 2 == x) {
                    if (ci < 0) {
                        ci = c;
                        i = p;
                    } else {
                        cj = c;
                        j = p;
                    }
                }
        State r;
        r.sign = s.sign;
        const auto& A = s.comps[ci];
        if (ci == cj) {
            std::vector<int> outer(A.begin(), A.begin() + i);
            outer.insert(outer.end(), A.begin() + j + 1, A.end());
            std::vector<int> inner(A.begin() + i + 1, A.begin() + j);
            for (int c = 0; c < static_cast<int>(s.comps.size()); ++c) {
                if (c == ci) {
                    r.comps.push_back(std::move(outer));
                    r.comps.push_back(std::move(inner));
                } else {
                    r.comps.push_back(s.comps[c]);
                }
            }
        } else {
            const auto& B = s.comps[cj];
            std::vector<int> merged(A.begin(), A.begin() + i);
            merged.insert(merged.end(), B.begin() + j + 1, B.end());
            merged.insert(merged.end(), B.begin(), B.begin() + j);
            merged.insert(merged.end(), A.begin() + i + 1, A.end());
            for (int c = 0; c < static_cast<int>(s.comps.size()); ++c) {
                if (c == ci)
                    r.comps.push_back(std::move(merged));
                else if (c != cj)
                    r.comps.push_back(s.comps[c]);
            }
        }
        return r;
    }

    int limit_;
    std::unordered_map<std::string, LaurentPoly2> memo_;
};

inline LaurentPoly2 homflypt(const PlanarDiagram& d, int crossing_limit = kLibraryCrossingLimit) {
    HomflyEngine engine(crossing_limit);
    return engine.evaluate(d);
}

struct AlexanderPolynomial {
    LaurentPoly1 poly;  // in t, lowest exponent 0, positive constant term
    bool is_zero = false;
    int degree = -1;    // breadth in t; -1 when zero
    bool monic = false;
};

// Conway-normalised Alexander polynomial from P(v=1, z = t^{1/2} - t^{-1/2}).
inline AlexanderPolynomial alexander_from_homfly(const LaurentPoly2& p) {
    const LaurentPoly1 conway = p.at_v_one();
    const LaurentPoly1 s_minus = LaurentPoly1::monomial(1, 1) - LaurentPoly1::monomial(1, -1);
    LaurentPoly1 in_s;
    for (auto [e, c] : conway.terms()) {
        if (e < 0) throw ValidationError("Conway polynomial has a negative power");
        LaurentPoly1 term = LaurentPoly1::monomial(c, 0);
        for (int k = 0; k < e; ++k) term = term * s_minus;
        in_s += term;
    }
    AlexanderPolynomial a;
    if (in_s.is_zero()) {
        a.is_zero = true;
        return a;
    }
    const int lo = in_s.min_degree();
    LaurentPoly1 t;
    for (auto [e, c] : in_s.terms()) t += LaurentPoly1::monomial(c, (e - lo) / 2);
    if (t.coeff(0) < 0) t = t.scaled(-1);
    a.poly = t;
    a.degree = t.max_degree();
    const Coeff top = t.coeff(t.max_degree());
    a.monic = top == 1 || top == -1;
    return a;
}

inline AlexanderPolynomial alexander(const PlanarDiagram& d, int crossing_limit = kLibraryCrossingLimit) {
    return alexander_from_homfly(homflypt(d, crossing_limit));
}

}  // namespace fpbk
