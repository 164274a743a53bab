#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fpbk/fpbk.hpp"
#include "fpbk/json.hpp"

#ifndef FPBK_DEFAULT_DATA
#define FPBK_DEFAULT_DATA "data/knots_le9.csv"
#endif

using namespace fpbk;

namespace {

enum Exit { kOk = 0, kUsage = 1, kValidation = 2, kLimit = 3, kAudit = 4 };

struct CliConfig {
    std::string data_path = FPBK_DEFAULT_DATA;
    int crossing_limit = kDefaultCrossingLimit;
    int enumeration_limit = kDefaultEnumerationLimit;
    std::string format = "text";
    bool keep_page_order = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FlatBasketCode read_code(const std::string& text, const CliConfig& cfg) {
    if (text.find_first_not_of(" \t\n,[]") == std::string::npos) throw UsageError("a basket code is required");
    return parse_code(text, cfg.keep_page_order ? LabelMode::keep_page_order : LabelMode::first_occurrence);
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string signed_word(const Braid& b) {
    std::string s = "[";
    for (std::size_t i = 0; i < b.word.size(); ++i) s += (i ? "," : "") + std::to_string(b.word[i]);
    return s + "] on " + std::to_string(b.strands) + " strands";
}

int cmd_info(const std::string& text, const CliConfig& cfg) {
    const FlatBasketCode code = read_code(text, cfg);
    const int n = code.bands();
    const BoundaryTrace tr = trace_boundary(code);
    const FrontData f = build_front(code);
    const GridDiagram g = to_grid(code);
    const BandCensus bc = classify_bands(g);
    const LegendrianInvariants cor = corner_invariants(g);
    const LegendrianInvariants cen = census_invariants(bc);
    const Braid bb = basket_to_braid(code);
    const ClosureStats bs = closure_stats(bb);
    const bool parity_ok = (n - (tr.components - 1)) % 2 == 0;
    std::optional<LaurentPoly2> P;
    std::string homfly_note;
    try {
        P = homflypt(bb);
    } catch (const LimitError& e) {
        homfly_note = e.what();
    }

    if (cfg.format == "json") {
        json j{{"code", code},
               {"bands", n},
               {"euler_characteristic", code.euler_characteristic()},
               {"components", tr.components},
               {"parity_ok", parity_ok},
               {"front", {{"tb", tb_front(f)}, {"rot", rot_front(f)}, {"sl", sl_front(f)}}},
               {"grid", {{"tb", cor.tb()}, {"rot", cor.rot()}, {"sl", cor.sl()}}},
               {"census",
                {{"A", bc.A()}, {"B", bc.B()}, {"C", bc.C()}, {"D", bc.D()}, {"E", bc.E()}, {"H", g.leftward_count()},
                 {"tb", cen.tb()}, {"rot", cen.rot()}, {"sl", cen.sl()}}},
               {"braid", {{"strands", bb.strands}, {"e", bs.e}, {"sl", bs.sl}}}};
        if (P) {
            j["homflypt"] = *P;
            if (tr.components == 1) j["alexander"] = alexander_from_homfly(*P);
        } else {
            j["homflypt"] = nullptr;
            j["homflypt_note"] = homfly_note;
        }
        print_json(j);
        return kOk;
    }
    if (cfg.format == "svg") {
        std::cout << front_svg(f);
        return kOk;
    }
    std::cout << "code        " << code << '\n'
              << "bands       " << n << '\n'
              << "euler       " << code.euler_characteristic() << '\n'
              << "components  " << tr.components << '\n'
              << "parity      " << (parity_ok ? "ok" : "FAILED") << " (n = " << n << ", |L| - 1 = " << tr.components - 1
              << ")\n"
              << "front       tb " << tb_front(f) << "  rot " << rot_front(f) << "  sl " << sl_front(f) << '\n'
              << "grid        tb " << cor.tb() << "  rot " << cor.rot() << "  sl " << cor.sl() << '\n'
              << "census      A " << bc.A() << "  B " << bc.B() << "  C " << bc.C() << "  D " << bc.D() << "  E "
              << bc.E() << "  H " << g.leftward_count() << "  sl " << cen.sl() << '\n'
              << "braid       " << bb.strands << " strands  e " << bs.e << "  sl " << bs.sl << '\n';
    if (P) {
        std::cout << "homflypt    " << P->to_string() << '\n';
        if (tr.components == 1) std::cout << "alexander   " << alexander_from_homfly(*P).poly.to_string() << '\n';
    } else {
        std::cout << "homflypt    skipped: " << homfly_note << '\n';
    }
    return kOk;
}

int cmd_convert(const std::string& text, const std::string& target, const CliConfig& cfg) {
    const FlatBasketCode code = read_code(text, cfg);
    const bool js = cfg.format == "json", svg = cfg.format == "svg";
    if (svg && target != "grid" && target != "front") throw UsageError("svg output exists for grid and front only");
    if (target == "braid") {
        const Braid b = basket_to_braid(code);
        if (js)
            print_json(b);
        else
            std::cout << signed_word(b) << '\n';
    } else if (target == "grid") {
        const GridDiagram g = to_grid(code);
        if (js)
            print_json(g);
        else if (svg)
            std::cout << grid_svg(g);
        else
            std::cout << grid_ascii(g);
    } else if (target == "arc") {
        const ArcPresentation a = to_arc_presentation(code);
        if (js) {
            print_json(a);
        } else {
            for (std::size_t i = 0; i < a.arcs.size(); ++i)
                std::cout << "page " << a.arcs[i].page << ": " << a.arcs[i].from << " -> " << a.arcs[i].to << '\n';
        }
    } else if (target == "pd") {
        const PlanarDiagram d = grid_diagram_pd(to_grid(code));
        if (js) {
            print_json(d);
        } else {
            for (const auto& x : d.crossings)
                std::cout << "X under " << x.under_in << "->" << x.under_out << " over " << x.over_in << "->"
                          << x.over_out << " sign " << std::showpos << x.sign << std::noshowpos << '\n';
            if (d.free_loops) std::cout << "free loops " << d.free_loops << '\n';
        }
    } else if (target == "front") {
        const FrontData f = build_front(code);
        if (svg) {
            std::cout << front_svg(f);
        } else if (js) {
            json comps = json::array();
            for (const auto& pl : f.components) {
                json c = json::array();
                for (const auto& p : pl) c.push_back({p.x(), p.z()});
                comps.push_back(c);
            }
            print_json({{"components", comps},
                        {"right_cusps", f.right_cusps},
                        {"left_cusps", f.left_cusps},
                        {"crossings", f.crossings.size()},
                        {"writhe", f.writhe}});
        } else {
            std::cout << "components " << f.components.size() << "  cusps " << f.right_cusps + f.left_cusps
                      << "  crossings " << f.crossings.size() << "  writhe " << f.writhe << '\n';
        }
    } else {
        throw UsageError("unknown target '" + target + "'");
    }
    return kOk;
}

std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

std::string tags(const std::set<std::string>& s) {
    std::string out;
    for (const auto& t : s) out += (out.empty() ? "" : ",") + t;
    return out.empty() ? "-" : out;
}

bool looks_like_code(const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789, []\t") == std::string::npos &&
           s.find_first_of(", ") != std::string::npos;
}

int cmd_bounds(const std::string& what, const CliConfig& cfg) {
    if (!looks_like_code(what)) {
        const auto recs = load_knot_csv(cfg.data_path);
        const BoundReport r = best_bound(find_record(recs, what));
        if (cfg.format == "json") {
            print_json(r);
            return kOk;
        }
        std::cout << "knot        " << r.name << '\n';
        for (auto [f, v] : r.raw)
            std::cout << std::left << std::setw(12) << family_tag(f) << v << " (lifted " << r.lifted.at(f) << ")\n";
        std::cout << "best        " << r.best << '\n'
                  << "known       " << opt_text(r.known_lo);
        if (r.known_hi && r.known_lo != r.known_hi) std::cout << "--" << *r.known_hi;
        std::cout << '\n' << "determined  " << (r.determined ? "yes" : "no") << '\n' << "witnesses   ";
        for (std::size_t i = 0; i < r.witnesses.size(); ++i) std::cout << (i ? "," : "") << family_tag(r.witnesses[i]);
        std::cout << '\n' << "daggers     " << tags(r.daggers) << '\n';
        return kOk;
    }
    const FlatBasketCode code = read_code(what, cfg);
    const int comps = trace_boundary(code).components;
    std::optional<int> mfw;
    std::optional<int> mfw_lifted;
    try {
        const LaurentPoly2 P = homflypt(basket_to_braid(code));
        mfw = std::max(P.max_v_degree().value_or(0), -P.min_v_degree().value_or(0));
        mfw_lifted = parity_lift(*mfw, comps);
    } catch (const LimitError&) {
    }
    const int upper = code.bands();
    if (cfg.format == "json") {
        print_json({{"code", code},
                    {"components", comps},
                    {"upper", upper},
                    {"mfw_lower", mfw ? json(*mfw) : json(nullptr)},
                    {"lower", mfw_lifted ? json(*mfw_lifted) : json(parity_lift(0, comps))}});
        return kOk;
    }
    std::cout << "code        " << code << '\n'
              << "components  " << comps << '\n'
              << "upper       " << upper << " (witness: this basket)\n"
              << "mfw         " << opt_text(mfw) << '\n'
              << "lower       " << (mfw_lifted ? *mfw_lifted : parity_lift(0, comps)) << " (parity lifted)\n";
    return kOk;
}

int cmd_table(const std::string& path, const CliConfig& cfg) {
    const TableReport t = reproduce_tables(path.empty() ? cfg.data_path : path);
    if (cfg.format == "json") {
        print_json(t);
        return t.ok() ? kOk : kAudit;
    }
    auto lifted = [](const BoundReport& r, BoundFamily f) {
        auto it = r.lifted.find(f);
        return it == r.lifted.end() ? std::string("-") : std::to_string(it->second);
    };
    std::cout << std::left << std::setw(6) << "knot" << std::right << std::setw(4) << "g" << std::setw(4) << "a"
              << std::setw(4) << "b" << std::setw(4) << "TB" << std::setw(4) << "SL" << " |" << std::setw(4) << "g+"
              << std::setw(4) << "hn" << std::setw(4) << "a/2" << std::setw(5) << "TBb" << std::setw(4) << "SL-"
              << " |" << std::setw(5) << "best" << std::setw(7) << "fpbk" << "  det  daggers\n";
    for (const auto& row : t.rows) {
        const auto& k = row.record;
        const auto& r = row.report;
        std::string known = opt_text(k.fpbk_lo);
        if (!k.exact()) known += "-" + opt_text(k.fpbk_hi);
        std::cout << std::left << std::setw(6) << k.name << std::right << std::setw(4) << opt_text(k.genus)
                  << std::setw(4) << opt_text(k.arc_index) << std::setw(4) << opt_text(k.braid_index) << std::setw(4)
                  << opt_text(k.TB) << std::setw(4) << opt_text(k.SL) << " |" << std::setw(4)
                  << lifted(r, BoundFamily::genus_strong) << std::setw(4) << lifted(r, BoundFamily::hn)
                  << std::setw(4) << lifted(r, BoundFamily::arc) << std::setw(5) << lifted(r, BoundFamily::tb_braid)
                  << std::setw(4) << lifted(r, BoundFamily::sl) << " |" << std::setw(5) << r.best << std::setw(7)
                  << known << "  " << (r.determined ? "yes" : "no ") << "  " << tags(r.daggers);
        if (r.daggers != k.table_daggers) std::cout << "  (table: " << tags(k.table_daggers) << ")";
        std::cout << '\n';
    }
    std::cout << "\nrows " << t.rows.size() << ", undetermined " << t.undetermined.size() << ":";
    for (const auto& u : t.undetermined) std::cout << ' ' << u;
    std::cout << "\n\ndiff against ingested fpbk:\n";
    int diffs = 0;
    for (const auto& row : t.rows)
        if (!row.report.determined) {
            ++diffs;
            std::cout << "  " << row.record.name << ": computed " << row.report.best << ", table "
                      << opt_text(row.record.fpbk_lo)
                      << (row.record.exact() ? "" : "--" + opt_text(row.record.fpbk_hi)) << '\n';
        }
    if (!diffs) std::cout << "  none\n";
    std::cout << "\naudit:\n";
    for (const auto& f : t.findings)
        std::cout << "  " << (f.blocking ? "MISMATCH " : "note     ") << std::left << std::setw(6)
                  << (f.knot.empty() ? "-" : f.knot) << " [" << f.kind << "] " << f.message << '\n';
    if (t.findings.empty()) std::cout << "  none\n";
    std::cout << "\nstatus " << (t.ok() ? "ok" : "audit mismatch") << '\n';
    return t.ok() ? kOk : kAudit;
}

int cmd_enumerate(int n, bool verify, int homfly_bands, const CliConfig& cfg) {
    if (n < 1) throw UsageError("n must be positive");
    if (n > cfg.enumeration_limit)
        throw LimitError("n=" + std::to_string(n) + " exceeds enumeration limit " +
                         std::to_string(cfg.enumeration_limit));
    const auto codes = enumerate_codes(n, true, cfg.enumeration_limit);
    VerifySummary summary;
    if (verify) {
        VerifyOptions opt{homfly_bands, cfg.crossing_limit};
        for (const auto& c : codes) verify_code(c, opt, summary);
    }
    if (cfg.format == "json") {
        json j{{"n", n}, {"count", codes.size()}, {"codes", json::array()}};
        for (const auto& c : codes) j["codes"].push_back(c.word());
        if (verify) {
            json v = json::object();
            for (const auto& [k, t] : summary)
                v[k] = {{"pass", t.pass}, {"fail", t.fail}, {"first_failures", t.first_failures}};
            j["verify"] = v;
            j["ok"] = all_passed(summary);
        }
        print_json(j);
    } else {
        for (const auto& c : codes) std::cout << c.to_string() << '\n';
        std::cout << codes.size() << " classes\n";
        if (verify) {
            for (const auto& [k, t] : summary) {
                std::cout << std::left << std::setw(22) << k << " pass " << t.pass << "  fail " << t.fail;
                for (const auto& ff : t.first_failures) std::cout << "  [" << ff << "]";
                std::cout << '\n';
            }
            std::cout << (all_passed(summary) ? "all checks pass" : "CHECKS FAILED") << '\n';
        }
    }
    return verify && !all_passed(summary) ? kValidation : kOk;
}

int cmd_poly(const std::string& code_text, const std::string& braid_text, const std::string& pd_path,
             const CliConfig& cfg) {
    const int given = !code_text.empty() + !braid_text.empty() + !pd_path.empty();
    if (given != 1) throw UsageError("give exactly one of a code, --braid or --pd");
    LaurentPoly2 P;
    int comps = 0;
    if (!code_text.empty() || !braid_text.empty()) {
        const Braid b = code_text.empty() ? parse_braid(braid_text) : basket_to_braid(read_code(code_text, cfg));
        P = homflypt(b);
        comps = closure_stats(b).components;
    } else {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (pd_path != "-") {
            file.open(pd_path);
            if (!file) throw ParseError("cannot open " + pd_path);
            in = &file;
        }
        PlanarDiagram d;
        try {
            d = json::parse(*in).get<PlanarDiagram>();
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad planar diagram JSON: ") + e.what());
        }
        P = homflypt(d, cfg.crossing_limit);
        comps = d.components();
    }
    if (cfg.format == "json") {
        json j{{"components", comps}, {"homflypt", P}};
        j["maxdeg_v"] = P.max_v_degree() ? json(*P.max_v_degree()) : json(nullptr);
        if (comps == 1) j["alexander"] = alexander_from_homfly(P);
        print_json(j);
        return kOk;
    }
    std::cout << "components  " << comps << '\n' << "homflypt    " << P.to_string() << '\n';
    if (P.max_v_degree()) std::cout << "maxdeg_v    " << *P.max_v_degree() << '\n';
    if (comps == 1) {
        const AlexanderPolynomial a = alexander_from_homfly(P);
        std::cout << "alexander   " << a.poly.to_string() << "  (degree " << a.degree << ", "
                  << (a.monic ? "monic" : "not monic") << ")\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flat plumbing basket toolkit"};
    app.fallthrough();
    app.require_subcommand(1);
    CliConfig cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "svg"}))
        ->envname("FPBK_FORMAT");
    app.add_option("--data", cfg.data_path, "Knot table CSV")->envname("FPBK_DATA");
    app.add_option("--limit-crossings", cfg.crossing_limit, "Crossing limit for diagram HOMFLYPT (PD input, grid checks)")
        ->check(CLI::PositiveNumber)
        ->envname("FPBK_LIMIT_CROSSINGS");
    app.add_option("--limit-enum", cfg.enumeration_limit, "Largest n for enumeration")
        ->check(CLI::PositiveNumber)
        ->envname("FPBK_LIMIT_ENUM");
    app.add_flag("--keep-page-order", cfg.keep_page_order, "Keep code labels as page order instead of renumbering")
        ->envname("FPBK_KEEP_PAGE_ORDER");

    std::string code_text, target, name, csv_path, braid_text, pd_path;
    int n = 0, homfly_bands = 4;
    bool verify = false;

    auto* info = app.add_subcommand("info", "Invariants of a basket code");
    info->add_option("code", code_text, "Basket code, e.g. 1,2,1,2")->required();
    auto* convert = app.add_subcommand("convert", "Convert a basket code");
    convert->add_option("code", code_text)->required();
    convert->add_option("--to", target, "braid, grid, arc, pd or front")
        ->required()
        ->check(CLI::IsMember({"braid", "grid", "arc", "pd", "front"}));
    auto* bounds = app.add_subcommand("bounds", "Lower bounds for a tabulated knot or a code");
    bounds->add_option("target", name, "Knot name such as 3_1, or a basket code")->required();
    auto* table = app.add_subcommand("table", "Regenerate the knot table with audit");
    table->add_option("csv", csv_path, "Knot table CSV (defaults to --data)");
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate canonical codes with n bands");
    enumerate->add_option("n", n)->required();
    enumerate->add_flag("--verify", verify, "Run the invariant suite on every code");
    enumerate->add_option("--homfly-bands", homfly_bands, "Cross-route HOMFLYPT checks up to this n");
    auto* poly = app.add_subcommand("poly", "HOMFLYPT and Alexander polynomials");
    poly->add_option("code", code_text, "Basket code");
    poly->add_option("--braid", braid_text, "Braid word such as 's1 s2^-1' or '1 -2'");
    poly->add_option("--pd", pd_path, "Planar diagram JSON file ('-' for stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*info) return cmd_info(code_text, cfg);
        if (*convert) return cmd_convert(code_text, target, cfg);
        if (*bounds) return cmd_bounds(name, cfg);
        if (*table) return cmd_table(csv_path, cfg);
        if (*enumerate) return cmd_enumerate(n, verify, homfly_bands, cfg);
        if (*poly) return cmd_poly(code_text, braid_text, pd_path, cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const LimitError& e) {
        std::cerr << "limit exceeded: " << e.what() << '\n';
        return kLimit;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kValidation;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kValidation;
    }
    return kUsage;
}
