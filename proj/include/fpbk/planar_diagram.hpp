#pragma once

#include <array>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "fpbk/errors.hpp"

namespace fpbk {

// Oriented crossing. The under strand runs under_in -> under_out and the over
// strand over_in -> over_out. sign is +1 when the over strand crosses the
// under strand from its right to its left.
struct Crossing {
    int under_in = 0;
    int under_out = 0;
    int over_in = 0;
    int over_out = 0;
    int sign = 1;
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Oriented link diagram. Edges are numbered 0..edge_count()-1 and each edge
// is the outgoing end of exactly one crossing and the incoming end of
// exactly one crossing. Crossingless unknotted circles are kept as a count.
struct PlanarDiagram {
    std::vector<Crossing> crossings;
    int free_loops = 0;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int edge_count() const { return 2 * crossing_count(); }

    int writhe() const {
        int w = 0;
        for (const auto& c : crossings) w += c.sign;
        return w;
    }

    void validate() const {
        const int e = edge_count();
        std::vector<int> ins(e, 0), outs(e, 0);
        auto check = [&](int id) {
            if (id < 0 || id >= e) throw ValidationError("edge id " + std::to_string(id) + " out of range");
        };
        for (const auto& c : crossings) {
            if (c.sign != 1 && c.sign != -1) throw ValidationError("crossing sign must be +1 or -1");
            for (int id : {c.under_in, c.under_out, c.over_in, c.over_out}) check(id);
            ++ins[c.under_in];
            ++ins[c.over_in];
            ++outs[c.under_out];
            ++outs[c.over_out];
        }
        for (int i = 0; i < e; ++i)
            if (ins[i] != 1 || outs[i] != 1)
                throw ValidationError("edge " + std::to_string(i) + " is not used once in and once out");
        if (free_loops < 0) throw ValidationError("negative free loop count");
    }

    // Edge following each edge along the orientation.
    std::vector<int> successor() const {
        std::vector<int> next(edge_count(), -1);
        for (const auto& c : crossings) {
            next[c.under_in] = c.under_out;
            next[c.over_in] = c.over_out;
        }
        return next;
    }

    int components() const {
        const auto next = successor();
        std::vector<char> seen(next.size(), 0);
        int comps = free_loops;
        for (std::size_t e = 0; e < next.size(); ++e) {
            if (seen[e]) continue;
            ++comps;
            for (int x = static_cast<int>(e); !seen[x]; x = next[x]) seen[x] = 1;
        }
        return comps;
    }
};

// Renumbers edges to 0..E-1 in order of first use and validates.
inline PlanarDiagram compact_edges(PlanarDiagram d) {
    int maxid = -1;
    for (const auto& c : d.crossings)
        for (int id : {c.under_in, c.under_out, c.over_in, c.over_out}) maxid = std::max(maxid, id);
    std::vector<int> map(maxid + 1, -1);
    int next = 0;
    for (auto& c : d.crossings)
        for (int* id : {&c.under_in, &c.under_out, &c.over_in, &c.over_out}) {
            if (map[*id] < 0) map[*id] = next++;
            *id = map[*id];
        }
    d.validate();
    return d;
}

// Reads a KnotTheory-style PD code: X[i,j,k,l] lists the incoming under edge
// first and the others counterclockwise. Edge labels must increase along
// each component, wrapping at its largest label.
inline PlanarDiagram from_pd_code(const std::vector<std::array<int, 4>>& code) {
    // Under strands run x0 -> x2. Over strands are oriented so that every edge
    // ends up with one head and one tail, propagating from the under strands.
    std::map<int, int> heads, tails;
    for (const auto& x : code) {
        ++heads[x[0]];
        ++tails[x[2]];
    }
    std::vector<int> dir(code.size(), 0);  // +1: x3 -> x1, -1: x1 -> x3
    auto orient = [&](std::size_t i, int d) {
        dir[i] = d;
        const auto& x = code[i];
        ++heads[d > 0 ? x[3] : x[1]];
        ++tails[d > 0 ? x[1] : x[3]];
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < code.size(); ++i) {
            if (dir[i]) continue;
            const auto& x = code[i];
            if (heads[x[1]] || tails[x[3]]) {
                orient(i, 1);
                changed = true;
            } else if (tails[x[1]] || heads[x[3]]) {
                orient(i, -1);
                changed = true;
            }
        }
        if (!changed)
            for (std::size_t i = 0; i < code.size(); ++i)
                if (!dir[i]) {
                    orient(i, code[i][1] == code[i][3] + 1 ? 1 : -1);
                    changed = true;
                    break;
                }
    }
    PlanarDiagram d;
    for (std::size_t i = 0; i < code.size(); ++i) {
        const auto& x = code[i];
        Crossing c;
        c.under_in = x[0];
        c.under_out = x[2];
        c.over_in = dir[i] > 0 ? x[3] : x[1];
        c.over_out = dir[i] > 0 ? x[1] : x[3];
        c.sign = dir[i];
        d.crossings.push_back(c);
    }
    return compact_edges(d);
}

}  // namespace fpbk
