#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "swapopt/distribution.hpp"
#include "swapopt/optimality.hpp"
#include "swapopt/permutohedron.hpp"
#include "swapopt/rational.hpp"
#include "swapopt/stats.hpp"
#include "swapopt/structure.hpp"

namespace swapopt {

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Number rendering
// ---------------------------------------------------------------------------

/// Fixed-point rendering at `decimals` places, rounding half away from zero,
/// with trailing zeros (and a bare trailing point) stripped: 3/2 -> "1.5",
/// 1 -> "1", 769/1000 at 2 -> "0.77".
inline std::string format_fixed(const Rational& r, int decimals) {
    const bool negative = r < 0;
    Rational a = negative ? -r : r;
    BigInt scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    Rational scaled = a * Rational(scale);
    BigInt whole = numerator(scaled) / denominator(scaled);
    Rational frac = scaled - Rational(whole);
    if (frac >= Rational(1, 2)) ++whole;  // half away from zero
    std::string digits = whole.str();
    while (static_cast<int>(digits.size()) <= decimals) digits.insert(digits.begin(), '0');
    std::string out = digits.substr(0, digits.size() - static_cast<std::size_t>(decimals));
    if (decimals > 0) {
        std::string frac_part = digits.substr(digits.size() - static_cast<std::size_t>(decimals));
        while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
        if (!frac_part.empty()) out += "." + frac_part;
    }
    if (negative && out != "0") out.insert(out.begin(), '-');
    return out;
}

/// Rendering at `sig` significant digits (round half away from zero):
/// 1/30 -> "0.033", 1/10 -> "0.1", 1/60 -> "0.017".
inline std::string format_significant(const Rational& r, int sig = 2) {
    if (r == 0) return "0";
    Rational a = r < 0 ? -r : r;
    int exponent = 0;  // floor(log10(a))
    Rational probe = 1;
    if (a >= 1) {
        while (probe * 10 <= a) { probe *= 10; ++exponent; }
    } else {
        while (probe > a) { probe /= 10; --exponent; }
    }
    int decimals = sig - 1 - exponent;
    if (decimals >= 0) return format_fixed(r, decimals);
    // round to a multiple of 10^-decimals
    BigInt q = 1;
    for (int i = 0; i < -decimals; ++i) q *= 10;
    Rational scaled = r / Rational(q);
    const bool negative = r < 0;
    Rational mag = negative ? -scaled : scaled;
    BigInt whole = numerator(mag) / denominator(mag);
    if (mag - Rational(whole) >= Rational(1, 2)) ++whole;
    whole *= q;
    return (negative ? "-" : "") + whole.str();
}

inline nlohmann::json rational_to_json(const Rational& r) {
    return {{"num", numerator(r).str()}, {"den", denominator(r).str()}, {"float", to_double(r)}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
    return Rational(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
}

// ---------------------------------------------------------------------------
// CSV ingestion
// ---------------------------------------------------------------------------

struct CsvSchema {
    int n = 3;
    std::string alphabet = "SOV";
    // Column names to group by; empty means every column before `order`.
    std::vector<std::string> group_by;
};

struct GroupedDistribution {
    std::vector<std::string> keys;  // group-by values, in column order
    std::string key_string;         // keys joined with '/'
    long long total = 0;
    std::map<std::string, long long> counts;  // order label -> count
};

namespace detail {

inline std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    auto end = s.find_last_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    return s.substr(begin, end - begin + 1);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

}  // namespace detail

/// Parse a CSV of (group keys..., order, count) rows into one count table
/// per distinct group-key tuple, ordered lexicographically by keys.
inline std::vector<GroupedDistribution> ingest_csv(std::istream& in, const CsvSchema& schema) {
    std::string line;
    if (!std::getline(in, line)) throw DataError("empty input: missing header");
    std::vector<std::string> header = detail::split_csv_line(line);
    auto order_it = std::find(header.begin(), header.end(), "order");
    auto count_it = std::find(header.begin(), header.end(), "count");
    if (order_it == header.end() || count_it == header.end())
        throw DataError("header must contain `order` and `count` columns");
    const std::size_t order_col = static_cast<std::size_t>(order_it - header.begin());
    const std::size_t count_col = static_cast<std::size_t>(count_it - header.begin());
    if (count_col != order_col + 1 || count_col != header.size() - 1)
        throw DataError("columns must be: group keys, then `order`, then `count`");

    std::vector<std::size_t> key_cols;
    if (schema.group_by.empty()) {
        for (std::size_t c = 0; c < order_col; ++c) key_cols.push_back(c);
    } else {
        for (const auto& name : schema.group_by) {
            auto it = std::find(header.begin(), header.end(), name);
            if (it == header.end() || static_cast<std::size_t>(it - header.begin()) >= order_col)
                throw DataError("unknown group-by column `" + name + "`");
            key_cols.push_back(static_cast<std::size_t>(it - header.begin()));
        }
    }

    std::map<std::vector<std::string>, GroupedDistribution> groups;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (detail::trim(line).empty()) continue;
        std::vector<std::string> fields = detail::split_csv_line(line);
        if (fields.size() != header.size())
            throw DataError("row " + std::to_string(row) + ": expected " +
                            std::to_string(header.size()) + " fields, got " +
                            std::to_string(fields.size()));
        std::vector<std::string> keys;
        for (std::size_t c : key_cols) keys.push_back(fields[c]);
        const std::string& order = fields[order_col];
        // validates length and symbols against the alphabet
        try {
            Permutation::from_label(order, schema.alphabet);
        } catch (const std::invalid_argument& e) {
            throw DataError("row " + std::to_string(row) + ": " + e.what());
        }
        long long count = 0;
        try {
            std::size_t consumed = 0;
            count = std::stoll(fields[count_col], &consumed);
            if (consumed != fields[count_col].size()) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw DataError("row " + std::to_string(row) + ": invalid count `" + fields[count_col] + "`");
        }
        if (count < 0) throw DataError("row " + std::to_string(row) + ": negative count");

        auto& g = groups[keys];
        if (g.counts.empty()) {
            g.keys = keys;
            std::string joined;
            for (std::size_t i = 0; i < keys.size(); ++i)
                joined += (i ? "/" : "") + keys[i];
            g.key_string = joined.empty() ? "(all)" : joined;
        }
        if (!g.counts.emplace(order, count).second)
            throw DataError("row " + std::to_string(row) + ": duplicate order `" + order +
                            "` in group " + g.key_string);
        g.total += count;
    }
    std::vector<GroupedDistribution> out;
    for (auto& [keys, g] : groups) {
        if (g.total == 0)
            throw DataError("group " + g.key_string + ": all counts are zero");
        out.push_back(std::move(g));
    }
    return out;
}

inline std::vector<GroupedDistribution> ingest_csv_file(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open `" + path + "`");
    return ingest_csv(in, schema);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct ReportRow {
    GroupedDistribution group;
    SwapReport report;
    StructureFlags flags;
    Rational pi_o;
    Rational p_o_of_m;
};

struct ReportOptions {
    int precision = 2;
    long long enumeration_cap = kDefaultEnumerationCap;
    bool verify_bruteforce = true;
};

inline ReportRow analyze_group(const Permutohedron& p, const GroupedDistribution& g,
                               const std::string& alphabet, const ReportOptions& opts = {}) {
    OrderDistribution d = OrderDistribution::from_labeled_counts(p, g.counts, alphabet);
    ReportRow row;
    row.group = g;
    AnalyzeOptions aopts;
    aopts.enumeration_cap = opts.enumeration_cap;
    aopts.verify_bruteforce = opts.verify_bruteforce;
    row.report = analyze(p, d, aopts);
    row.flags = detect_structures(p, d);
    row.pi_o = pi_optimal_numeric(p, d, opts.enumeration_cap);
    row.p_o_of_m = p.n() == 3 ? p_optimal_given_m(row.report.m) : Rational(0);
    return row;
}

inline std::string omega_to_string(const OmegaResult& o, int precision) {
    return o.defined() ? format_fixed(*o.value, precision) : std::string("undefined");
}

/// One line per group: F m S_bar pi_o p_o(m) <d>_min <d> <d>_r <d>_max Omega flags.
inline std::string render_table(const std::vector<ReportRow>& rows, const ReportOptions& opts = {}) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"group", "F", "m", "S_bar", "pi_o", "p_o(m)", "<d>_min", "<d>", "<d>_r",
                     "<d>_max", "Omega", "contig", "adj", "radiation"});
    for (const auto& r : rows) {
        const auto& rep = r.report;
        cells.push_back({
            r.group.key_string,
            std::to_string(r.group.total),
            std::to_string(rep.m),
            format_fixed(rep.S_bar, opts.precision),
            format_significant(r.pi_o),
            format_significant(r.p_o_of_m),
            format_fixed(rep.avg_d_min, opts.precision),
            format_fixed(rep.avg_d, opts.precision),
            format_fixed(rep.avg_d_random, opts.precision),
            format_fixed(rep.avg_d_max_global, opts.precision),
            omega_to_string(rep.omega, opts.precision),
            r.flags.contiguous ? "yes" : "no",
            r.flags.adjacency_top2 ? (*r.flags.adjacency_top2 ? "yes" : "no") : "-",
            rep.n == 3 ? (r.flags.radiation ? "yes" : "no") : "-",
        });
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            if (c + 1 < row.size()) out += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

inline nlohmann::json report_row_to_json(const ReportRow& r) {
    const auto& rep = r.report;
    nlohmann::json j;
    j["group"] = r.group.keys;
    j["F"] = r.group.total;
    j["m"] = rep.m;
    j["S"] = rational_to_json(rep.S);
    j["S_bar"] = rational_to_json(rep.S_bar);
    j["pi_o"] = rational_to_json(r.pi_o);
    j["p_o_of_m"] = rational_to_json(r.p_o_of_m);
    j["avg_d"] = rational_to_json(rep.avg_d);
    j["avg_d_random"] = rational_to_json(rep.avg_d_random);
    j["avg_d_min"] = rational_to_json(rep.avg_d_min);
    j["avg_d_max"] = rational_to_json(rep.avg_d_max_global);
    if (rep.omega.defined())
        j["omega"] = rational_to_json(*rep.omega.value);
    else
        j["omega"] = nullptr;
    j["optimal"] = rep.optimal;
    nlohmann::json mass = nlohmann::json::array();
    for (const auto& q : rep.dist_mass) mass.push_back(rational_to_json(q));
    j["distance_mass"] = mass;
    j["bounds"] = {rational_to_json(rep.d_bounds.first), rational_to_json(rep.d_bounds.second)};
    j["flags"] = {
        {"contiguous", r.flags.contiguous},
        {"adjacency_top2",
         r.flags.adjacency_top2 ? nlohmann::json(*r.flags.adjacency_top2) : nlohmann::json(nullptr)},
        {"radiation", r.flags.radiation},
    };
    return j;
}

// ---------------------------------------------------------------------------
// Ensemble rendering
// ---------------------------------------------------------------------------

inline TrialRecord trial_from_report(const ReportRow& r) {
    TrialRecord t;
    t.label = r.group.key_string;
    t.m = r.report.m;
    t.pi_o = r.pi_o;
    t.is_optimal = r.report.optimal;
    t.is_contiguous = r.flags.contiguous;
    t.avg_d = r.report.avg_d;
    t.avg_d_random = r.report.avg_d_random;
    return t;
}

inline std::string render_ensemble(const EnsembleResult& e) {
    std::ostringstream out;
    out << "T = " << e.T << "\n";
    out << "B (optimal trials) = " << e.B << "\n";
    out << "C (contiguous trials) = " << e.C << "\n";
    out << "P_o = " << format_significant(e.p_optimal) << "  (exact "
        << to_string(e.p_optimal) << ")\n";
    out << "P_c = " << format_significant(e.p_contiguous) << "  (exact "
        << to_string(e.p_contiguous) << ")\n";
    if (e.wilcoxon) {
        out << "Wilcoxon V = " << to_string(e.wilcoxon->V) << ", P_W = "
            << format_significant(e.wilcoxon->p) << "  (exact "
            << to_string(e.wilcoxon->p) << ")\n";
    } else {
        out << "Wilcoxon: undefined (no non-zero differences)\n";
    }
    out << "T(m):";
    for (const auto& [m, t] : e.T_of_m) out << " m=" << m << ":" << t;
    out << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

/// Undirected DOT of the permutohedron, vertices labeled with order strings.
/// Output is byte-stable: nodes and edges are emitted in sorted order.
inline std::string permutohedron_to_dot(const Permutohedron& p, const std::string& alphabet) {
    std::ostringstream out;
    out << "graph permutohedron {\n";
    for (int v = 0; v < p.num_vertices(); ++v)
        out << "  v" << v << " [label=\"" << p.vertex(v).to_label(alphabet) << "\"];\n";
    for (int u = 0; u < p.num_vertices(); ++u)
        for (int v : p.neighbors(u))
            if (u < v) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

/// Directed DOT of a Hasse diagram; tie groups of size > 1 are connected
/// with dashed undirected edges labeled "tie".
inline std::string hasse_to_dot(const HasseDiagram& h, const Permutohedron& p,
                                const std::string& alphabet) {
    std::ostringstream out;
    out << "digraph hasse {\n";
    for (int v = 0; v < p.num_vertices(); ++v)
        out << "  v" << v << " [label=\"" << p.vertex(v).to_label(alphabet) << " ("
            << to_string(h.values[static_cast<std::size_t>(v)]) << ")\"];\n";
    for (const auto& group : h.tie_groups)
        for (std::size_t i = 0; i + 1 < group.size(); ++i)
            out << "  v" << group[i] << " -> v" << group[i + 1]
                << " [dir=none, style=dashed, label=\"tie\"];\n";
    for (const auto& [gu, gv] : h.arcs)
        out << "  v" << h.tie_groups[static_cast<std::size_t>(gu)].front() << " -> v"
            << h.tie_groups[static_cast<std::size_t>(gv)].front() << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace swapopt
