// Command-line front end: per-group analysis reports, ensemble-level chance
// tests, and DOT/JSON export for order distributions over the permutohedron.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swapopt/io.hpp"
#include "swapopt/stats.hpp"
#include "swapopt/structure.hpp"

namespace {

struct CommonArgs {
    std::string csv_path;
    int n = 3;
    std::string alphabet = "SOV";
    std::vector<std::string> group_by;
    std::string format = "table";
    int precision = 2;
    long long enum_cap = swapopt::kDefaultEnumerationCap;
    std::string verify = "on";
};

void add_common(CLI::App* cmd, CommonArgs& a, bool needs_csv) {
    if (needs_csv)
        cmd->add_option("csv", a.csv_path, "input CSV (group keys..., order, count)")->required();
    cmd->add_option("--n", a.n, "sequence length (permutohedron order)")->default_val(3);
    cmd->add_option("--alphabet", a.alphabet, "constituent alphabet, e.g. SOV")->default_val("SOV");
    cmd->add_option("--group-by", a.group_by, "group-key column names (default: all columns before `order`)");
    cmd->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->default_val("table");
    cmd->add_option("--precision", a.precision, "decimal places in table output")->default_val(2);
    cmd->add_option("--enum-cap", a.enum_cap, "max number of shufflings to enumerate")
        ->default_val(swapopt::kDefaultEnumerationCap);
    cmd->add_option("--verify-bruteforce", a.verify, "cross-check closed forms against enumeration")
        ->check(CLI::IsMember({"on", "off"}))
        ->default_val("on");
}

std::vector<swapopt::ReportRow> analyze_all(const CommonArgs& a, const swapopt::Permutohedron& p) {
    swapopt::CsvSchema schema;
    schema.n = a.n;
    schema.alphabet = a.alphabet;
    schema.group_by = a.group_by;
    swapopt::ReportOptions opts;
    opts.precision = a.precision;
    opts.enumeration_cap = a.enum_cap;
    opts.verify_bruteforce = (a.verify == "on");
    std::vector<swapopt::ReportRow> rows;
    for (const auto& g : swapopt::ingest_csv_file(a.csv_path, schema))
        rows.push_back(swapopt::analyze_group(p, g, a.alphabet, opts));
    return rows;
}

int run_analyze(const CommonArgs& a) {
    swapopt::Permutohedron p(a.n);
    auto rows = analyze_all(a, p);
    if (a.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : rows) out.push_back(swapopt::report_row_to_json(r));
        std::cout << out.dump(2) << "\n";
    } else {
        swapopt::ReportOptions opts;
        opts.precision = a.precision;
        std::cout << swapopt::render_table(rows, opts);
    }
    return 0;
}

int run_ensemble_cmd(const CommonArgs& a, const std::vector<std::string>& filters) {
    swapopt::Permutohedron p(a.n);
    auto rows = analyze_all(a, p);
    if (!filters.empty()) {
        std::vector<swapopt::ReportRow> kept;
        for (const auto& r : rows) {
            bool match = true;
            for (const auto& f : filters)
                if (std::find(r.group.keys.begin(), r.group.keys.end(), f) == r.group.keys.end())
                    match = false;
            if (match) kept.push_back(r);
        }
        rows = std::move(kept);
        if (rows.empty()) throw swapopt::DataError("no group matches the filter");
    }
    std::vector<swapopt::TrialRecord> trials;
    for (const auto& r : rows) trials.push_back(swapopt::trial_from_report(r));
    swapopt::EnsembleResult e = swapopt::run_ensemble(trials);
    if (a.format == "json") {
        nlohmann::json j;
        j["T"] = e.T;
        j["B"] = e.B;
        j["C"] = e.C;
        j["p_optimal"] = swapopt::rational_to_json(e.p_optimal);
        j["p_contiguous"] = swapopt::rational_to_json(e.p_contiguous);
        if (e.wilcoxon) {
            j["wilcoxon"] = {{"V", swapopt::rational_to_json(e.wilcoxon->V)},
                             {"p", swapopt::rational_to_json(e.wilcoxon->p)},
                             {"effective_pairs", e.wilcoxon->effective_pairs}};
        } else {
            j["wilcoxon"] = nullptr;
        }
        for (const auto& [m, t] : e.T_of_m) j["T_of_m"][std::to_string(m)] = t;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << swapopt::render_ensemble(e);
    }
    return 0;
}

int run_export(const CommonArgs& a, const std::string& what, const std::string& group,
               const std::string& out_path) {
    swapopt::Permutohedron p(a.n);
    std::string dot;
    if (what == "permutohedron") {
        dot = swapopt::permutohedron_to_dot(p, a.alphabet);
    } else {
        swapopt::CsvSchema schema;
        schema.n = a.n;
        schema.alphabet = a.alphabet;
        schema.group_by = a.group_by;
        auto groups = swapopt::ingest_csv_file(a.csv_path, schema);
        const swapopt::GroupedDistribution* chosen = nullptr;
        for (const auto& g : groups)
            if (group.empty() || g.key_string == group) { chosen = &g; break; }
        if (!chosen) throw swapopt::DataError("no group named `" + group + "`");
        swapopt::OrderDistribution d =
            swapopt::OrderDistribution::from_labeled_counts(p, chosen->counts, a.alphabet);
        dot = swapopt::hasse_to_dot(swapopt::hasse(d.probs(), p), p, a.alphabet);
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << dot;
    } else {
        std::ofstream out(out_path);
        if (!out) throw swapopt::DataError("cannot write `" + out_path + "`");
        out << dot;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Swap-distance optimality of word order distributions"};
    app.require_subcommand(1);

    CommonArgs analyze_args, ensemble_args, export_args;
    std::vector<std::string> filters;
    std::string export_what = "permutohedron", export_group, export_out;

    CLI::App* analyze = app.add_subcommand("analyze", "per-group optimality report");
    add_common(analyze, analyze_args, true);

    CLI::App* ensemble = app.add_subcommand("ensemble", "ensemble-level chance tests");
    add_common(ensemble, ensemble_args, true);
    ensemble->add_option("--filter", filters, "keep only groups whose keys contain this value (repeatable)");

    CLI::App* exp = app.add_subcommand("export", "DOT export (permutohedron or Hasse diagram)");
    exp->add_option("--what", export_what, "what to export")
        ->check(CLI::IsMember({"permutohedron", "hasse"}))
        ->default_val("permutohedron");
    exp->add_option("--csv", export_args.csv_path, "input CSV (required for hasse)");
    exp->add_option("--group", export_group, "group key string to export (default: first group)");
    exp->add_option("--out", export_out, "output path (default: stdout)");
    exp->add_option("--n", export_args.n, "sequence length")->default_val(3);
    exp->add_option("--alphabet", export_args.alphabet, "constituent alphabet")->default_val("SOV");
    exp->add_option("--group-by", export_args.group_by, "group-key column names");

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return run_analyze(analyze_args);
        if (ensemble->parsed()) return run_ensemble_cmd(ensemble_args, filters);
        if (exp->parsed()) {
            if (export_what == "hasse" && export_args.csv_path.empty())
                throw CLI::ValidationError("--csv is required with --what hasse");
            return run_export(export_args, export_what, export_group, export_out);
        }
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const swapopt::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const swapopt::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
