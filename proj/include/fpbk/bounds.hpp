#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fpbk/errors.hpp"

namespace fpbk {

struct KnotRecord {
    std::string name;
    int crossings = 0;
    int components = 1;
    std::optional<int> genus;
    std::optional<bool> monic;
    std::optional<int> alex_deg;
    std::optional<int> arc_index;
    std::optional<int> braid_index;
    std::optional<int> TB;  // max{-tb(K), -tb(mirror K)}
    std::optional<int> SL;  // max{-sl(K), -sl(mirror K)}
    std::optional<int> fpbk_lo;
    std::optional<int> fpbk_hi;
    std::optional<bool> alternating;
    std::optional<int> homfly_span;  // max{maxdeg_v P, -mindeg_v P}, when known
    std::string provenance;
    std::set<std::string> table_daggers;
    std::string table_mark;

    std::optional<int> chi() const {
        if (!genus) return std::nullopt;
        return 2 - 2 * *genus - components;
    }
    bool exact() const { return fpbk_lo && fpbk_hi && *fpbk_lo == *fpbk_hi; }
    bool nontrivial() const { return crossings > 0; }
};

namespace detail {

template <class T>
const T& need(const std::optional<T>& f, const KnotRecord& r, const char* field) {
    if (!f) throw ValidationError(r.name + ": missing field " + field);
    return *f;
}

inline int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

}  // namespace detail

// Least value >= bound in 2Z + components - 1.
inline int parity_lift(int bound, int components) {
    const int want = ((components - 1) % 2 + 2) % 2;
    bound = std::max(bound, 0);
    return ((bound % 2) == want) ? bound : bound + 1;
}

inline int bound_sl(const KnotRecord& r) { return detail::need(r.SL, r, "SL") - 1; }

inline int bound_tb_braid(const KnotRecord& r) {
    return detail::ceil_half(detail::need(r.TB, r, "TB") + detail::need(r.braid_index, r, "braid_index"));
}

inline int bound_arc(const KnotRecord& r) { return detail::ceil_half(detail::need(r.arc_index, r, "alpha")); }

inline std::optional<int> bound_alternating(const KnotRecord& r) {
    if (!detail::need(r.alternating, r, "alternating")) return std::nullopt;
    return detail::ceil_half(r.crossings + 2);
}

struct GenusBounds {
    int weak = 0;
    std::optional<int> strong;  // only for nontrivial links
};

inline GenusBounds bound_genus(const KnotRecord& r) {
    if (!r.genus) throw ValidationError(r.name + ": missing field g");
    const int chi = *r.chi();
    GenusBounds g{-chi + 1, std::nullopt};
    if (r.nontrivial()) g.strong = -chi + 3;
    return g;
}

inline std::optional<int> bound_hn(const KnotRecord& r) {
    if (detail::need(r.monic, r, "monic")) return std::nullopt;
    return detail::need(r.alex_deg, r, "alex_deg") + 4;
}

enum class BoundFamily { sl, tb_braid, arc, alternating, genus_weak, genus_strong, hn, homfly };

inline const char* family_tag(BoundFamily f) {
    switch (f) {
        case BoundFamily::sl: return "sl";
        case BoundFamily::tb_braid: return "b";
        case BoundFamily::arc: return "alpha";
        case BoundFamily::alternating: return "alt";
        case BoundFamily::genus_weak: return "g_weak";
        case BoundFamily::genus_strong: return "g";
        case BoundFamily::hn: return "hn";
        case BoundFamily::homfly: return "mfw";
    }
    return "?";
}

// Families that carry a dagger column in the tables.
inline bool dagger_family(BoundFamily f) {
    return f == BoundFamily::sl || f == BoundFamily::tb_braid || f == BoundFamily::arc ||
           f == BoundFamily::genus_strong || f == BoundFamily::hn;
}

struct BoundReport {
    std::string name;
    std::map<BoundFamily, int> raw;
    std::map<BoundFamily, int> lifted;
    int best = 0;
    std::optional<int> known_lo;
    std::optional<int> known_hi;
    bool determined = false;
    std::vector<BoundFamily> witnesses;
    std::set<std::string> daggers;
};

inline BoundReport best_bound(const KnotRecord& r) {
    BoundReport rep;
    rep.name = r.name;
    rep.known_lo = r.fpbk_lo;
    rep.known_hi = r.fpbk_hi;
    rep.raw[BoundFamily::sl] = bound_sl(r);
    rep.raw[BoundFamily::tb_braid] = bound_tb_braid(r);
    rep.raw[BoundFamily::arc] = bound_arc(r);
    if (auto a = bound_alternating(r)) rep.raw[BoundFamily::alternating] = *a;
    const GenusBounds g = bound_genus(r);
    rep.raw[BoundFamily::genus_weak] = g.weak;
    if (g.strong) rep.raw[BoundFamily::genus_strong] = *g.strong;
    if (auto h = bound_hn(r)) rep.raw[BoundFamily::hn] = *h;
    if (r.homfly_span) rep.raw[BoundFamily::homfly] = *r.homfly_span;
    for (auto [f, v] : rep.raw) {
        rep.lifted[f] = parity_lift(v, r.components);
        rep.best = std::max(rep.best, rep.lifted[f]);
    }
    rep.best = parity_lift(rep.best, r.components);
    for (auto [f, v] : rep.lifted)
        if (v == rep.best) rep.witnesses.push_back(f);
    rep.determined = r.exact() && rep.best == *r.fpbk_lo;
    if (r.exact())
        for (auto [f, v] : rep.lifted)
            if (dagger_family(f) && v == *r.fpbk_lo) rep.daggers.insert(family_tag(f));
    return rep;
}

inline int torus_fpbk(int p, int q) {
    if (q < 2 || p < q) throw ValidationError("torus_fpbk needs p >= q > 1");
    return p * q - p + q - 1;
}

// A summand of a connected sum. The record's name denotes the chirality with
// -sl = SL; the mirror then has -sl = 2b - SL.
struct Summand {
    KnotRecord record;
    bool mirrored = false;
};

inline int minus_slbar(const Summand& s) {
    const int SL = detail::need(s.record.SL, s.record, "SL");
    if (!s.mirrored) return SL;
    return 2 * detail::need(s.record.braid_index, s.record, "braid_index") - SL;
}

// Sum of fpbk when every summand has fpbk = -sl - 1; otherwise absent.
inline std::optional<int> connected_sum_fpbk(const std::vector<Summand>& parts) {
    int total = 0;
    for (const auto& s : parts) {
        if (!s.record.exact()) throw ValidationError(s.record.name + ": needs an exact fpbk value");
        const int f = *s.record.fpbk_lo;
        if (f != minus_slbar(s) - 1) return std::nullopt;
        total += f;
    }
    return total;
}

struct OpenBookBounds {
    std::optional<int> lower;  // absent: no information
    int upper = 0;
};

// slbar absent means +infinity (loose links).
inline OpenBookBounds general_openbook_bounds(std::optional<int> slbar, int chi_page, int fpbk_disk) {
    if (chi_page > 1) throw ValidationError("page Euler characteristic must be <= 1");
    OpenBookBounds b;
    if (slbar) b.lower = -*slbar - chi_page;
    b.upper = fpbk_disk + 1 - chi_page;
    return b;
}

// ---- dataset ----

inline const std::array<const char*, 13>& csv_required_columns() {
    static const std::array<const char*, 13> cols{"name",        "c",  "g",  "monic",   "alex_deg",
                                                  "alpha",       "braid_index", "TB", "SL", "fpbk_lo",
                                                  "fpbk_hi",     "alternating", "provenance"};
    return cols;
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::optional<int> csv_int(const std::string& s, int line, const char* col) {
    if (s.empty()) return std::nullopt;
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size()) throw ParseError("line " + std::to_string(line) + ": column " + col + ": bad integer '" + s + "'");
    return v;
}

inline std::optional<bool> csv_flag(const std::string& s, int line, const char* col) {
    if (s.empty()) return std::nullopt;
    if (s == "yes" || s == "true" || s == "1") return true;
    if (s == "no" || s == "false" || s == "0") return false;
    throw ParseError("line " + std::to_string(line) + ": column " + col + ": expected yes/no, got '" + s + "'");
}

}  // namespace detail

inline std::vector<KnotRecord> parse_knot_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty knot table");
    const auto header = detail::split_csv_line(line);
    const auto& req = csv_required_columns();
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
    for (const char* c : req)
        if (!col.count(c)) throw ParseError(std::string("schema mismatch: missing column ") + c);
    std::vector<KnotRecord> out;
    std::set<std::string> seen;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != header.size())
            throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(header.size()) +
                             " fields, got " + std::to_string(f.size()));
        auto get = [&](const char* c) -> const std::string& { return f[col.at(c)]; };
        auto opt = [&](const char* c) -> std::string { return col.count(c) ? f[col.at(c)] : std::string(); };
        KnotRecord r;
        r.name = get("name");
        if (r.name.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty name");
        if (!seen.insert(r.name).second) throw ValidationError("duplicate knot " + r.name);
        r.crossings = detail::csv_int(get("c"), lineno, "c").value_or(0);
        r.genus = detail::csv_int(get("g"), lineno, "g");
        r.monic = detail::csv_flag(get("monic"), lineno, "monic");
        r.alex_deg = detail::csv_int(get("alex_deg"), lineno, "alex_deg");
        r.arc_index = detail::csv_int(get("alpha"), lineno, "alpha");
        r.braid_index = detail::csv_int(get("braid_index"), lineno, "braid_index");
        r.TB = detail::csv_int(get("TB"), lineno, "TB");
        r.SL = detail::csv_int(get("SL"), lineno, "SL");
        r.fpbk_lo = detail::csv_int(get("fpbk_lo"), lineno, "fpbk_lo");
        r.fpbk_hi = detail::csv_int(get("fpbk_hi"), lineno, "fpbk_hi");
        r.alternating = detail::csv_flag(get("alternating"), lineno, "alternating");
        r.provenance = get("provenance");
        if (r.provenance != "PAPER-TABLE" && r.provenance != "EXTERNAL")
            throw ParseError("line " + std::to_string(lineno) + ": unknown provenance '" + r.provenance + "'");
        if (col.count("components")) r.components = detail::csv_int(opt("components"), lineno, "components").value_or(1);
        std::stringstream ds(opt("table_daggers"));
        for (std::string t; std::getline(ds, t, ';');)
            if (!t.empty()) r.table_daggers.insert(t);
        r.table_mark = opt("table_mark");
        if (r.fpbk_lo && r.fpbk_hi && *r.fpbk_lo > *r.fpbk_hi)
            throw ValidationError(r.name + ": fpbk_lo > fpbk_hi");
        for (auto v : {r.fpbk_lo, r.fpbk_hi})
            if (v && parity_lift(*v, r.components) != *v)
                throw ValidationError(r.name + ": fpbk value " + std::to_string(*v) + " has the wrong parity");
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<KnotRecord> load_knot_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_knot_csv(in);
}

inline const KnotRecord& find_record(const std::vector<KnotRecord>& recs, const std::string& name) {
    for (const auto& r : recs)
        if (r.name == name) return r;
    throw ValidationError("unknown knot " + name);
}

// ---- table reproduction ----

struct AuditFinding {
    std::string knot;  // empty for table-wide findings
    std::string kind;
    std::string message;
    bool blocking = false;  // a soundness violation or a determination mismatch
};

struct TableRow {
    KnotRecord record;
    BoundReport report;
    std::set<std::string> missing_daggers;  // in the table, not reproduced
    std::set<std::string> extra_daggers;    // reproduced, not in the table
};

struct TableReport {
    std::vector<TableRow> rows;
    std::vector<std::string> undetermined;
    std::vector<AuditFinding> findings;
    bool ok() const {
        return std::none_of(findings.begin(), findings.end(), [](const AuditFinding& f) { return f.blocking; });
    }
};

namespace detail {

inline std::string set_text(const std::set<std::string>& s) {
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : ",") + x;
    return out.empty() ? "-" : out;
}

inline const TableRow* row_named(const TableReport& t, const std::string& name) {
    for (const auto& r : t.rows)
        if (r.record.name == name) return &r;
    return nullptr;
}

}  // namespace detail

inline TableReport reproduce_tables(const std::vector<KnotRecord>& recs) {
    TableReport t;
    for (const auto& r : recs) {
        TableRow row{r, best_bound(r), {}, {}};
        for (const auto& d : r.table_daggers)
            if (!row.report.daggers.count(d)) row.missing_daggers.insert(d);
        for (const auto& d : row.report.daggers)
            if (!r.table_daggers.count(d)) row.extra_daggers.insert(d);
        t.rows.push_back(std::move(row));
    }
    std::sort(t.rows.begin(), t.rows.end(), [](const TableRow& a, const TableRow& b) {
        if (a.record.crossings != b.record.crossings) return a.record.crossings < b.record.crossings;
        auto idx = [](const std::string& s) {
            auto p = s.find('_');
            return p == std::string::npos ? 0 : std::atoi(s.c_str() + p + 1);
        };
        if (idx(a.record.name) != idx(b.record.name)) return idx(a.record.name) < idx(b.record.name);
        return a.record.name < b.record.name;
    });

    for (const auto& row : t.rows) {
        const auto& r = row.record;
        const auto& rep = row.report;
        if (r.fpbk_hi)
            for (auto [f, v] : rep.lifted)
                if (v > *r.fpbk_hi)
                    t.findings.push_back({r.name, "soundness",
                                          std::string(family_tag(f)) + " bound " + std::to_string(v) +
                                              " exceeds known fpbk " + std::to_string(*r.fpbk_hi),
                                          true});
        if (!rep.determined) t.undetermined.push_back(r.name);
        if (r.exact() && !rep.determined) {
            const bool table_claims = !r.table_daggers.empty();
            t.findings.push_back({r.name, "determination",
                                  "best bound " + std::to_string(rep.best) + " below known fpbk " +
                                      std::to_string(*r.fpbk_lo) +
                                      (table_claims ? " although the table marks it determined" : ""),
                                  table_claims});
        }
        if (!r.exact() && !r.table_daggers.empty())
            t.findings.push_back({r.name, "dagger",
                                  "range row carries daggers " + detail::set_text(r.table_daggers), false});
        if (r.exact() && (!row.missing_daggers.empty() || !row.extra_daggers.empty()))
            t.findings.push_back({r.name, "dagger",
                                  "table daggers " + detail::set_text(r.table_daggers) + ", recomputed " +
                                      detail::set_text(rep.daggers),
                                  false});
        if (r.genus && r.alex_deg && *r.alex_deg != 2 * *r.genus)
            t.findings.push_back({r.name, "prose", "deg Delta " + std::to_string(*r.alex_deg) + " differs from 2g",
                                  false});
        if (r.provenance == "EXTERNAL" && rep.determined)
            t.findings.push_back({r.name, "provenance",
                                  "value attributed to an external source is already forced by the " +
                                      detail::set_text(rep.daggers) + " bound(s)",
                                  false});
    }

    // Prose claim: for these knots the SL bound beats the TB+b bound.
    for (const char* k : {"8_13", "9_49"}) {
        const TableRow* row = detail::row_named(t, k);
        if (!row) continue;
        const int sl = row->report.raw.at(BoundFamily::sl);
        const int tbb = row->report.raw.at(BoundFamily::tb_braid);
        if (sl <= tbb)
            t.findings.push_back({k, "prose",
                                  "claimed SL bound beats TB+b bound, but SL-1 = " + std::to_string(sl) +
                                      " and ceil((TB+b)/2) = " + std::to_string(tbb),
                                  false});
    }
    // Prose claim: all but six knots are determined.
    if (t.rows.size() == 84 && t.undetermined.size() != 6)
        t.findings.push_back({"", "prose",
                              std::to_string(t.undetermined.size()) + " knots undetermined, expected 6", true});
    return t;
}

inline TableReport reproduce_tables(const std::string& csv_path) { return reproduce_tables(load_knot_csv(csv_path)); }

}  // namespace fpbk
