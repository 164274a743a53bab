#pragma once

#include <map>
#include <string>
#include <vector>

#include "fpbk/basket.hpp"
#include "fpbk/braid.hpp"
#include "fpbk/front.hpp"
#include "fpbk/grid.hpp"
#include "fpbk/hecke.hpp"
#include "fpbk/homfly.hpp"

namespace fpbk {

struct VerifyOptions {
    int homfly_max_bands = 0;  // cross-route HOMFLYPT and MFW checks for n up to this
    int crossing_limit = kLibraryCrossingLimit;
};

struct CheckTally {
    long pass = 0;
    long fail = 0;
    std::vector<std::string> first_failures;
};

using VerifySummary = std::map<std::string, CheckTally>;

// Runs the per-code invariant suite and adds the outcomes to `out`.
inline void verify_code(const FlatBasketCode& code, const VerifyOptions& opt, VerifySummary& out) {
    const int n = code.bands();
    auto record = [&](const std::string& name, bool ok) {
        auto& t = out[name];
        if (ok) {
            ++t.pass;
            return;
        }
        ++t.fail;
        if (t.first_failures.size() < 5) t.first_failures.push_back(code.to_string());
    };

    const FrontData f = build_front(code);
    const int tbf = tb_front(f), rotf = rot_front(f), slf = sl_front(f);
    record("front_closed_form", tbf == -2 * n && rotf == 1 - n && slf == -n - 1);

    const GridDiagram g = to_grid(code);
    const BandCensus bc = classify_bands(g);
    const LegendrianInvariants cen = census_invariants(bc);
    const LegendrianInvariants cor = corner_invariants(g);
    const int H = g.leftward_count();
    const Braid bb = basket_to_braid(code);
    const ClosureStats bs = closure_stats(bb);
    const Braid gb = grid_to_braid(g);
    const ClosureStats gs = closure_stats(gb);
    record("sl_tri_route", slf == -n - 1 && cen.integral() && cen.sl() == -n - 1 && bs.sl == -n - 1 &&
                               gs.sl == -n - 1);

    const int A = bc.A(), B = bc.B(), C = bc.C(), D = bc.D(), E = bc.E();
    record("census_identities", A + B + C + D + E == n && 2 * H == 4 * A + 3 * B + 2 * C + D &&
                                    H == n + cen.rot() - 1 && cen.tb() == H - 2 * n && cen.tb2 == cor.tb2 &&
                                    cen.rot2 == cor.rot2);

    const int comps = trace_boundary(code).components;
    record("component_agreement", comps == g.components() && comps == bs.components && comps == gs.components);
    record("parity", (n - (comps - 1)) % 2 == 0);

    if (n <= opt.homfly_max_bands) {
        const LaurentPoly2 pb = homflypt(bb);
        const LaurentPoly2 pg = homflypt(grid_diagram_pd(g), opt.crossing_limit);
        record("homfly_braid_eq_grid", pb == pg);
        record("mfw_maxdeg_le_n", pb.max_v_degree().value_or(0) <= n);
    }
}

inline VerifySummary verify_all(int n, const VerifyOptions& opt, int limit = kDefaultEnumerationLimit) {
    VerifySummary out;
    for_each_code(n, true, [&](const FlatBasketCode& c) { verify_code(c, opt, out); }, limit);
    return out;
}

inline bool all_passed(const VerifySummary& s) {
    for (const auto& [k, t] : s)
        if (t.fail) return false;
    return true;
}

}  // namespace fpbk
