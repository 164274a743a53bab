#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "fpbk/basket.hpp"
#include "fpbk/braid.hpp"
#include "fpbk/errors.hpp"
#include "fpbk/planar_diagram.hpp"

namespace fpbk {

// Oriented arc in page slot `page` joining binding points from -> to.
struct Arc {
    int page = 0;
    int from = 0;
    int to = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
};

// Arcs in distinct pages of the trivial open book, one per slot, with
// binding points 0..size-1 in binding order. Every binding point is the
// head of one arc and the tail of one arc.
struct ArcPresentation {
    int size = 0;
    std::vector<Arc> arcs;  // indexed by page slot

    void validate() const {
        if (static_cast<int>(arcs.size()) != size) throw ValidationError("arc presentation needs one arc per page");
        std::vector<int> heads(size, 0), tails(size, 0);
        for (int p = 0; p < size; ++p) {
            const Arc& a = arcs[p];
            if (a.page != p) throw ValidationError("arc page slots must be 0..size-1 in order");
            if (a.from < 0 || a.from >= size || a.to < 0 || a.to >= size)
                throw ValidationError("arc endpoint out of range");
            ++tails[a.from];
            ++heads[a.to];
        }
        for (int r = 0; r < size; ++r)
            if (heads[r] != 1 || tails[r] != 1)
                throw ValidationError("binding point " + std::to_string(r) + " is not met by exactly two arc ends");
    }
};

// Grid diagram on size x size cells. Column c carries a vertical segment
// from row vert[c][0] to row vert[c][1]; row r carries a horizontal segment
// from column hor[r][0] to column hor[r][1]. Verticals pass over
// horizontals. A column whose vertical has equal ends, joined to a
// zero-length horizontal, is a point component: a split unknot.
struct GridDiagram {
    int size = 0;
    std::vector<std::array<int, 2>> vert;
    std::vector<std::array<int, 2>> hor;
    std::vector<int> column_band;  // band label per column, 0 when unknown
    int flipped_column = -1;

    void validate() const {
        if (size < 1) throw ValidationError("grid size must be positive");
        if (static_cast<int>(vert.size()) != size || static_cast<int>(hor.size()) != size)
            throw ValidationError("grid needs one vertical per column and one horizontal per row");
        for (int c = 0; c < size; ++c)
            for (int r : vert[c])
                if (r < 0 || r >= size) throw ValidationError("vertical endpoint out of range");
        for (int r = 0; r < size; ++r)
            for (int c : hor[r])
                if (c < 0 || c >= size) throw ValidationError("horizontal endpoint out of range");
        for (int c = 0; c < size; ++c) {
            const auto [r0, r1] = vert[c];
            if (hor[r1][0] != c) throw ValidationError("row " + std::to_string(r1) + " does not start at column " +
                                                       std::to_string(c));
            if (hor[r0][1] != c)
                throw ValidationError("row " + std::to_string(r0) + " does not end at column " + std::to_string(c));
            const bool vpoint = r0 == r1;
            const bool hpoint = hor[r1][0] == hor[r1][1];
            if (vpoint != hpoint) throw ValidationError("degenerate segment at column " + std::to_string(c));
        }
        if (!column_band.empty() && static_cast<int>(column_band.size()) != size)
            throw ValidationError("column band map has wrong size");
    }

    bool is_point(int col) const { return vert[col][0] == vert[col][1]; }

    int point_components() const {
        int p = 0;
        for (int c = 0; c < size; ++c) p += is_point(c);
        return p;
    }

    bool leftward(int row) const { return hor[row][1] < hor[row][0]; }

    // Number of right-to-left horizontal segments.
    int leftward_count() const {
        int h = 0;
        for (int r = 0; r < size; ++r) h += leftward(r);
        return h;
    }

    bool crosses(int col, int row) const {
        const auto [a, b] = std::minmax(vert[col][0], vert[col][1]);
        const auto [c, d] = std::minmax(hor[row][0], hor[row][1]);
        return a < row && row < b && c < col && col < d;
    }

    int writhe() const {
        int w = 0;
        for (int c = 0; c < size; ++c)
            for (int r = 0; r < size; ++r)
                if (crosses(c, r)) w += crossing_sign(c, r);
        return w;
    }

    int crossing_sign(int col, int row) const {
        const int vd = vert[col][1] > vert[col][0] ? 1 : -1;
        const int hd = hor[row][1] > hor[row][0] ? 1 : -1;
        return -vd * hd;
    }

    int components() const {
        std::vector<char> seen(size, 0);
        int k = 0;
        for (int c = 0; c < size; ++c) {
            if (seen[c]) continue;
            ++k;
            for (int x = c; !seen[x]; x = hor[vert[x][1]][1]) seen[x] = 1;
        }
        return k;
    }
};

// Binding point j is the collapsed binding arc from R_j to L_{j+1}
// (point 0 is the arc from R_{2n} to L_1). Band l occupies page slots
// 2(l-1) for its inner side and 2(l-1)+1 for its outer side.
inline ArcPresentation to_arc_presentation(const FlatBasketCode& code) {
    const int n = code.bands();
    const int m = 2 * n;
    ArcPresentation ap;
    ap.size = m;
    ap.arcs.resize(m);
    for (int l = 1; l <= n; ++l) {
        auto [k, k2] = code.feet(l);
        const int ci = 2 * (l - 1), co = ci + 1;
        ap.arcs[ci] = {ci, (k2 - 1) % m, k % m};
        ap.arcs[co] = {co, (k - 1) % m, k2 % m};
    }
    ap.validate();
    return ap;
}

// Grid of the arc presentation with binding point 0 at the bottom row.
// The outer side of the band whose second foot is the last foot ends at
// row 0; that column is recorded as flipped.
inline GridDiagram to_grid(const FlatBasketCode& code) {
    const int n = code.bands();
    const int m = 2 * n;
    const ArcPresentation ap = to_arc_presentation(code);
    GridDiagram g;
    g.size = m;
    g.vert.resize(m);
    g.hor.resize(m);
    g.column_band.resize(m);
    // side[pos][0] = column of L_pos, side[pos][1] = column of R_pos
    std::vector<std::array<int, 2>> side(m + 1);
    for (int l = 1; l <= n; ++l) {
        auto [k, k2] = code.feet(l);
        const int ci = 2 * (l - 1), co = ci + 1;
        side[k] = {co, ci};
        side[k2] = {ci, co};
        g.column_band[ci] = g.column_band[co] = l;
    }
    for (const Arc& a : ap.arcs) g.vert[a.page] = {a.from, a.to};
    for (int j = 0; j < m; ++j) {
        const int a = j == 0 ? m : j;
        g.hor[j] = {side[a][1], side[j + 1][0]};
    }
    g.flipped_column = 2 * (code.label_at(m) - 1) + 1;
    g.validate();
    return g;
}

// Per-band census of the four horizontal segments met by the band's two
// verticals. Type A..E has 0..4 of them running left to right (a
// zero-length segment counts as left to right).
struct BandCensus {
    std::array<int, 5> counts{};  // A, B, C, D, E
    std::vector<int> type_of_band;  // 0..4 per band label, index 0 unused

    int A() const { return counts[0]; }
    int B() const { return counts[1]; }
    int C() const { return counts[2]; }
    int D() const { return counts[3]; }
    int E() const { return counts[4]; }
};

inline BandCensus classify_bands(const GridDiagram& g) {
    g.validate();
    if (g.column_band.empty()) throw ValidationError("grid carries no band structure");
    int n = 0;
    for (int l : g.column_band) n = std::max(n, l);
    std::vector<std::vector<int>> cols(n + 1);
    for (int c = 0; c < g.size; ++c) {
        if (g.column_band[c] < 1) throw ValidationError("column " + std::to_string(c) + " has no band");
        cols[g.column_band[c]].push_back(c);
    }
    BandCensus bc;
    bc.type_of_band.assign(n + 1, -1);
    for (int l = 1; l <= n; ++l) {
        if (cols[l].size() != 2)
            throw ValidationError("band " + std::to_string(l) + " does not own exactly two columns");
        int k = 0;
        for (int c : cols[l])
            for (int r : g.vert[c]) k += g.hor[r][1] >= g.hor[r][0];
        bc.type_of_band[l] = k;
        ++bc.counts[k];
    }
    return bc;
}

// Thurston-Bennequin and rotation numbers as exact halves.
struct LegendrianInvariants {
    int tb2 = 0;   // 2 tb
    int rot2 = 0;  // 2 rot
    int writhe = 0;
    int cusps = 0;
    int up_cusps = 0;
    int down_cusps = 0;

    bool integral() const { return tb2 % 2 == 0 && rot2 % 2 == 0; }
    int tb() const { return tb2 / 2; }
    int rot() const { return rot2 / 2; }
    int sl() const { return tb() - rot(); }
};

// Counts from the census: tb = -B/2 - C - 3D/2 - 2E, rot = A + B/2 - D/2 - E + 1.
inline LegendrianInvariants census_invariants(const BandCensus& c) {
    LegendrianInvariants r;
    r.tb2 = -c.B() - 2 * c.C() - 3 * c.D() - 4 * c.E();
    r.rot2 = 2 * c.A() + c.B() - c.D() - 2 * c.E() + 2;
    return r;
}

// Legendrian front of the grid rotated 45 degrees counterclockwise: the
// north-west and south-east corners are cusps. A point component is a
// standard unknot with two cusps.
inline LegendrianInvariants corner_invariants(const GridDiagram& g) {
    g.validate();
    LegendrianInvariants r;
    r.writhe = g.writhe();
    for (int c = 0; c < g.size; ++c) {
        const auto [r0, r1] = g.vert[c];
        if (r0 == r1) {
            r.cusps += 2;
            ++r.up_cusps;
            ++r.down_cusps;
            continue;
        }
        const int vd = r1 > r0 ? 1 : -1;
        const int hi = std::max(r0, r1);
        for (int end : {r0, r1}) {
            const auto [c0, c1] = g.hor[end];
            const int other = c0 == c ? c1 : c0;
            const int ext = other > c ? 1 : -1;
            const bool top = end == hi;
            if (!((top && ext == 1) || (!top && ext == -1))) continue;
            ++r.cusps;
            // direction of travel through the corner, in rotated height
            int dz;
            if (end == r1)
                dz = vd + ext;
            else
                dz = -ext + vd;
            (dz > 0 ? r.up_cusps : r.down_cusps) += 1;
        }
    }
    r.tb2 = 2 * r.writhe - r.cusps;
    r.rot2 = r.down_cusps - r.up_cusps;
    return r;
}

// Diagram with verticals over horizontals. Point components become free loops.
inline PlanarDiagram grid_diagram_pd(const GridDiagram& g) {
    g.validate();
    PlanarDiagram d;
    std::vector<int> id(g.size * g.size, -1);
    for (int c = 0; c < g.size; ++c)
        for (int r = 0; r < g.size; ++r)
            if (g.crosses(c, r)) {
                id[c * g.size + r] = static_cast<int>(d.crossings.size());
                d.crossings.push_back({-1, -1, -1, -1, g.crossing_sign(c, r)});
            }
    std::vector<char> seen(g.size, 0);
    int next_edge = 0;
    for (int start = 0; start < g.size; ++start) {
        if (seen[start]) continue;
        if (g.is_point(start)) {
            seen[start] = 1;
            ++d.free_loops;
            continue;
        }
        std::vector<std::pair<int, bool>> passes;  // crossing, over
        for (int c = start; !seen[c]; c = g.hor[g.vert[c][1]][1]) {
            seen[c] = 1;
            const auto [r0, r1] = g.vert[c];
            const int dr = r1 > r0 ? 1 : -1;
            for (int r = r0 + dr; r != r1; r += dr)
                if (id[c * g.size + r] >= 0) passes.push_back({id[c * g.size + r], true});
            const auto [c0, c1] = g.hor[r1];
            const int dc = c1 > c0 ? 1 : -1;
            for (int x = c0 + dc; x != c1; x += dc)
                if (id[x * g.size + r1] >= 0) passes.push_back({id[x * g.size + r1], false});
        }
        const int k = static_cast<int>(passes.size());
        if (k == 0) {
            ++d.free_loops;
            continue;
        }
        for (int i = 0; i < k; ++i) {
            Crossing& x = d.crossings[passes[i].first];
            const int in = next_edge + i;
            const int out = next_edge + (i + 1) % k;
            if (passes[i].second) {
                x.over_in = in;
                x.over_out = out;
            } else {
                x.under_in = in;
                x.under_out = out;
            }
        }
        next_edge += k;
    }
    d.validate();
    return d;
}

// Braid from the grid: each right-to-left horizontal is replaced by its
// complement running under everything around the back, so every strand
// runs left to right. Strand positions count down from the top row. Point
// components become extra trivial strands.
inline Braid grid_to_braid(const GridDiagram& g) {
    g.validate();
    std::vector<int> active;  // rows, descending
    for (int r = 0; r < g.size; ++r)
        if (g.leftward(r)) active.push_back(r);
    std::sort(active.rbegin(), active.rend());
    Braid b;
    for (int c = 0; c < g.size; ++c) {
        if (g.is_point(c)) continue;
        const auto [r0, r1] = g.vert[c];
        auto it = std::find(active.begin(), active.end(), r0);
        const int p = static_cast<int>(it - active.begin()) + 1;
        active.erase(it);
        auto pos = std::lower_bound(active.begin(), active.end(), r1, std::greater<int>());
        const int q = static_cast<int>(pos - active.begin()) + 1;
        active.insert(pos, r1);
        if (q > p)
            for (int i = p; i < q; ++i) b.word.push_back(i);
        else
            for (int i = p - 1; i >= q; --i) b.word.push_back(-i);
    }
    b.strands = static_cast<int>(active.size()) + g.point_components();
    if (b.strands == 0) b.strands = 1;
    b.validate();
    return b;
}

}  // namespace fpbk
