// Walks one basket code through every representation, then bounds a few table knots.

#include <iostream>

#include "fpbk/fpbk.hpp"

int main(int argc, char** argv) {
    using namespace fpbk;
    const FlatBasketCode code = parse_code(argc > 1 ? argv[1] : "1,2,3,1,2,3");
    const int n = code.bands();
    const auto boundary = trace_boundary(code);
    std::cout << "code " << code << ": " << n << " bands, " << boundary.components << " boundary component(s), chi "
              << boundary.euler_characteristic << "\n\n";

    const FrontData f = build_front(code);
    std::cout << "front: tb " << tb_front(f) << ", rot " << rot_front(f) << ", sl " << sl_front(f) << '\n';

    const GridDiagram g = to_grid(code);
    const auto cen = census_invariants(classify_bands(g));
    std::cout << "grid of size " << g.size << ": tb " << cen.tb() << ", rot " << cen.rot() << '\n'
              << grid_ascii(g) << '\n';

    const Braid b = basket_to_braid(code);
    std::cout << "braid " << free_reduce(b).to_string() << " on " << b.strands << " strands, sl " << closure_stats(b).sl << '\n';

    const LaurentPoly2 P = homflypt(b);
    std::cout << "HOMFLYPT " << P.to_string() << '\n';
    if (boundary.components == 1) std::cout << "Alexander " << alexander_from_homfly(P).poly.to_string() << '\n';

    const auto recs = load_knot_csv(FPBK_DEFAULT_DATA);
    std::cout << '\n';
    for (const char* name : {"3_1", "5_2", "8_20", "9_34"}) {
        const BoundReport r = best_bound(find_record(recs, name));
        std::cout << name << ": best lower bound " << r.best << (r.determined ? " (determined)" : " (open)") << '\n';
    }
    std::cout << "T(5,3) needs " << torus_fpbk(5, 3) << " bands\n";
}
