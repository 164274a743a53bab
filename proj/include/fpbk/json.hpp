#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fpbk/basket.hpp"
#include "fpbk/bounds.hpp"
#include "fpbk/braid.hpp"
#include "fpbk/errors.hpp"
#include "fpbk/grid.hpp"
#include "fpbk/homfly.hpp"
#include "fpbk/laurent.hpp"
#include "fpbk/planar_diagram.hpp"

namespace fpbk {

using nlohmann::json;

inline void to_json(json& j, const FlatBasketCode& c) { j = json{{"bands", c.bands()}, {"word", c.word()}}; }

inline void from_json(const json& j, FlatBasketCode& c) { c = FlatBasketCode(j.at("word").get<std::vector<int>>()); }

inline void to_json(json& j, const Braid& b) { j = json{{"strands", b.strands}, {"word", b.word}}; }

inline void from_json(const json& j, Braid& b) {
    b.strands = j.at("strands").get<int>();
    b.word = j.at("word").get<std::vector<int>>();
    b.validate();
}

inline void to_json(json& j, const ArcPresentation& a) {
    json arcs = json::array();
    for (const auto& x : a.arcs) arcs.push_back({{"page", x.page}, {"from", x.from}, {"to", x.to}});
    j = json{{"size", a.size}, {"arcs", arcs}};
}

// x[c] is the row where column c's vertical starts, o[c] where it ends.
inline void to_json(json& j, const GridDiagram& g) {
    std::vector<int> x, o;
    for (const auto& v : g.vert) {
        x.push_back(v[0]);
        o.push_back(v[1]);
    }
    j = json{{"size", g.size}, {"x", x}, {"o", o}, {"vert", g.vert}, {"hor", g.hor}, {"flipped_column", g.flipped_column}};
    if (!g.column_band.empty()) j["column_band"] = g.column_band;
}

inline void to_json(json& j, const Crossing& c) {
    j = json{{"under_in", c.under_in},
             {"under_out", c.under_out},
             {"over_in", c.over_in},
             {"over_out", c.over_out},
             {"sign", c.sign}};
}

inline void from_json(const json& j, Crossing& c) {
    c.under_in = j.at("under_in").get<int>();
    c.under_out = j.at("under_out").get<int>();
    c.over_in = j.at("over_in").get<int>();
    c.over_out = j.at("over_out").get<int>();
    c.sign = j.at("sign").get<int>();
    if (c.sign != 1 && c.sign != -1) throw ValidationError("crossing sign must be +1 or -1");
}

inline void to_json(json& j, const PlanarDiagram& d) {
    j = json{{"crossings", d.crossings}, {"free_loops", d.free_loops}};
}

inline void from_json(const json& j, PlanarDiagram& d) {
    d.crossings = j.at("crossings").get<std::vector<Crossing>>();
    d.free_loops = j.value("free_loops", 0);
    d.validate();
}

inline void to_json(json& j, const LaurentPoly2& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms()) terms.push_back({{"v", k.first}, {"z", k.second}, {"c", c}});
    j = json{{"text", p.to_string()}, {"terms", terms}};
}

inline void to_json(json& j, const LaurentPoly1& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"t", e}, {"c", c}});
    j = json{{"text", p.to_string()}, {"terms", terms}};
}

inline void to_json(json& j, const AlexanderPolynomial& a) {
    j = json{{"poly", a.poly}, {"degree", a.degree}, {"monic", a.monic}, {"zero", a.is_zero}};
}

inline void to_json(json& j, const BoundReport& r) {
    json raw = json::object(), lifted = json::object(), wit = json::array();
    for (auto [f, v] : r.raw) raw[family_tag(f)] = v;
    for (auto [f, v] : r.lifted) lifted[family_tag(f)] = v;
    for (auto f : r.witnesses) wit.push_back(family_tag(f));
    j = json{{"name", r.name},         {"raw", raw},
             {"lifted", lifted},       {"best", r.best},
             {"determined", r.determined}, {"witnesses", wit},
             {"daggers", r.daggers}};
    j["known_lo"] = r.known_lo ? json(*r.known_lo) : json(nullptr);
    j["known_hi"] = r.known_hi ? json(*r.known_hi) : json(nullptr);
}

inline void to_json(json& j, const AuditFinding& f) {
    j = json{{"knot", f.knot}, {"kind", f.kind}, {"message", f.message}, {"blocking", f.blocking}};
}

inline void to_json(json& j, const TableReport& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row = r.report;
        row["table_daggers"] = r.record.table_daggers;
        row["missing_daggers"] = r.missing_daggers;
        row["extra_daggers"] = r.extra_daggers;
        row["provenance"] = r.record.provenance;
        rows.push_back(row);
    }
    j = json{{"rows", rows}, {"undetermined", t.undetermined}, {"findings", t.findings}, {"ok", t.ok()}};
}

}  // namespace fpbk
