#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "fpbk/basket.hpp"
#include "fpbk/errors.hpp"
#include "fpbk/planar_diagram.hpp"

namespace fpbk {

// Point in surface coordinates: u runs along the attaching edge of the
// disk, w away from it (w < 0 inside the disk). The front plane is
// x = u - w, z = u + w.
struct FrontPoint {
    int u = 0;
    int w = 0;
    int x() const { return u - w; }
    int z() const { return u + w; }
    friend bool operator==(const FrontPoint&, const FrontPoint&) = default;
};

struct FrontCusp {
    FrontPoint at;
    bool right = false;
    bool up = false;
};

struct FrontCrossing {
    FrontPoint at;
    int over_band = 0;   // band owning the leg in front
    int under_band = 0;  // band owning the parallel part behind
    int sign = 0;
};

// Legendrian front of the boundary of a basket. Band i is drawn as a leg
// from each foot perpendicular to the attaching edge, joined by a part
// parallel to it at height 2i (inner side) or 2i+1 (outer side). Legs pass
// in front of parallel parts. The outer side at foot 1 continues the
// lower-left edge of the disk, so that corner carries no cusp.
struct FrontData {
    int n = 0;
    std::vector<std::vector<FrontPoint>> components;  // closed polylines
    std::vector<FrontCusp> cusps;
    std::vector<FrontCrossing> crossings;
    int right_cusps = 0;
    int left_cusps = 0;
    int up_right_cusps = 0;
    int down_right_cusps = 0;
    int up_left_cusps = 0;
    int down_left_cusps = 0;
    int writhe = 0;
};

namespace detail {

inline int foot_left(int k) { return 2 * k - 2; }
inline int foot_right(int k) { return 2 * k - 1; }

struct FrontSegment {
    FrontPoint a, b;
    int comp = 0;
    int band = 0;  // 0 for the disk boundary
    bool vertical() const { return a.u == b.u; }
};

inline std::vector<FrontSegment> front_segments(const FrontData& f, const std::vector<std::vector<int>>& seg_band) {
    std::vector<FrontSegment> segs;
    for (std::size_t c = 0; c < f.components.size(); ++c) {
        const auto& pl = f.components[c];
        for (std::size_t i = 0; i < pl.size(); ++i) {
            const FrontPoint a = pl[i], b = pl[(i + 1) % pl.size()];
            if (a == b) continue;
            segs.push_back({a, b, static_cast<int>(c), seg_band[c][i]});
        }
    }
    return segs;
}

inline int sgn(int x) { return (x > 0) - (x < 0); }

}  // namespace detail

inline FrontData build_front(const FlatBasketCode& code) {
    const int n = code.bands();
    if (n < 1) throw ValidationError("front needs at least one band");
    const int m = 2 * n;
    const int top = 2 * m;  // u of the upper corner of the disk
    FrontData f;
    f.n = n;
    const BoundaryTrace trace = trace_boundary(code);
    std::vector<std::vector<int>> seg_band;
    for (const auto& cyc : trace.cycles) {
        std::vector<FrontPoint> pl;
        std::vector<int> bands;
        for (std::size_t i = 0; i < cyc.size(); i += 2) {
            const int k = cyc[i].foot;
            const int j = cyc[i + 1].foot;
            // binding arc R_k -> L_j
            pl.push_back({detail::foot_right(k), 0});
            bands.push_back(0);
            if (k == m) {
                for (FrontPoint p : {FrontPoint{top, 0}, FrontPoint{top, -top}, FrontPoint{0, -top}}) {
                    pl.push_back(p);
                    bands.push_back(0);
                }
            }
            // band side L_j -> R_x
            const int l = code.label_at(j);
            auto [a, b] = code.feet(l);
            const int h = j == a ? 2 * l + 1 : 2 * l;
            const int x = j == a ? b : a;
            pl.push_back({detail::foot_left(j), 0});
            bands.push_back(l);
            pl.push_back({detail::foot_left(j), h});
            bands.push_back(l);
            pl.push_back({detail::foot_right(x), h});
            bands.push_back(l);
        }
        f.components.push_back(std::move(pl));
        seg_band.push_back(std::move(bands));
    }
    // cusps: turning points of x
    for (const auto& pl : f.components) {
        const std::size_t s = pl.size();
        for (std::size_t i = 0; i < s; ++i) {
            const FrontPoint p = pl[(i + s - 1) % s], q = pl[i], r = pl[(i + 1) % s];
            const int dxi = detail::sgn(q.x() - p.x()), dxo = detail::sgn(r.x() - q.x());
            const int dzi = detail::sgn(q.z() - p.z()), dzo = detail::sgn(r.z() - q.z());
            if (dxi == 0 || dxo == 0 || dxi == dxo) continue;
            FrontCusp c{q, dxi > 0, dzi + dzo > 0};
            f.cusps.push_back(c);
            if (c.right) {
                ++f.right_cusps;
                (c.up ? f.up_right_cusps : f.down_right_cusps) += 1;
            } else {
                ++f.left_cusps;
                (c.up ? f.up_left_cusps : f.down_left_cusps) += 1;
            }
        }
    }
    // crossings: legs (constant u) in front of parallel parts (constant w > 0)
    const auto segs = detail::front_segments(f, seg_band);
    for (const auto& leg : segs) {
        if (!leg.vertical() || leg.band == 0) continue;
        const auto [w0, w1] = std::minmax(leg.a.w, leg.b.w);
        for (const auto& par : segs) {
            if (par.vertical() || par.band == 0 || par.a.w <= 0) continue;
            const auto [u0, u1] = std::minmax(par.a.u, par.b.u);
            const int u = leg.a.u, w = par.a.w;
            if (!(u0 < u && u < u1 && w0 < w && w < w1)) continue;
            const int ou = 0, ow = detail::sgn(leg.b.w - leg.a.w);
            const int uu = detail::sgn(par.b.u - par.a.u), uw = 0;
            const int sign = detail::sgn(ou * uw - ow * uu);
            f.crossings.push_back({{u, w}, leg.band, par.band, sign});
            f.writhe += sign;
        }
    }
    return f;
}

inline int tb_front(const FrontData& f) { return f.writhe - f.right_cusps; }

inline int rot_front(const FrontData& f) {
    const int down = f.down_right_cusps + f.down_left_cusps;
    const int up = f.up_right_cusps + f.up_left_cusps;
    return (down - up) / 2;
}

inline int sl_front(const FrontData& f) { return tb_front(f) - rot_front(f); }

// Diagram of the front with legs over parallel parts.
inline PlanarDiagram front_diagram_pd(const FrontData& f) {
    PlanarDiagram d;
    std::vector<std::vector<std::pair<int, bool>>> passes(f.components.size());
    for (std::size_t x = 0; x < f.crossings.size(); ++x) d.crossings.push_back({-1, -1, -1, -1, f.crossings[x].sign});
    for (std::size_t c = 0; c < f.components.size(); ++c) {
        const auto& pl = f.components[c];
        const std::size_t s = pl.size();
        for (std::size_t i = 0; i < s; ++i) {
            const FrontPoint a = pl[i], b = pl[(i + 1) % s];
            if (a == b) continue;
            std::vector<std::pair<int, int>> on;  // distance along, crossing id
            for (std::size_t x = 0; x < f.crossings.size(); ++x) {
                const FrontPoint p = f.crossings[x].at;
                const bool vert = a.u == b.u;
                if (vert && p.u == a.u && std::min(a.w, b.w) < p.w && p.w < std::max(a.w, b.w))
                    on.push_back({std::abs(p.w - a.w), static_cast<int>(x)});
                if (!vert && p.w == a.w && std::min(a.u, b.u) < p.u && p.u < std::max(a.u, b.u))
                    on.push_back({std::abs(p.u - a.u), static_cast<int>(x)});
            }
            std::sort(on.begin(), on.end());
            for (auto [dist, x] : on) passes[c].push_back({x, a.u == b.u});
        }
    }
    int next_edge = 0;
    for (auto& ps : passes) {
        const int k = static_cast<int>(ps.size());
        if (k == 0) {
            ++d.free_loops;
            continue;
        }
        for (int i = 0; i < k; ++i) {
            Crossing& x = d.crossings[ps[i].first];
            const int in = next_edge + i, out = next_edge + (i + 1) % k;
            if (ps[i].second) {
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

}  // namespace fpbk
