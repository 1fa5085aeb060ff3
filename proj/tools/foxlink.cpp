// Command-line front end: determinants, coloring counts, minimum palettes,
// lift/reduce, and the verification harness over the bundled link table.
//
// Exit codes: 0 success, 1 usage error, 2 parse/validation error,
// 3 inconsistency detected by `verify` or `scan`.

#include <CLI11.hpp>

#include <foxlink/foxlink.hpp>
#include <foxlink/json_io.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace {

using namespace foxlink;
using nlohmann::json;

struct GlobalOptions {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_pd(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text.compare(pos, 3, "PD[") == 0;
}

struct DiagramSource {
    std::string file;
    std::string table;
    bool pd = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("input", file, "diagram file (text format, or PD[...] code)");
        cmd->add_option("--table", table, "bundled diagram by name (see `table`)");
        cmd->add_flag("--pd", pd, "force PD-code parsing of the input file");
    }

    Diagram load() const {
        if (file.empty() == table.empty())
            throw std::invalid_argument("need exactly one diagram source: a file or --table");
        if (!table.empty()) {
            const LinkTableEntry* entry = find_entry(table);
            if (!entry) throw std::invalid_argument("unknown table entry: " + table);
            return entry->diagram;
        }
        const std::string text = read_file(file);
        return (pd || looks_like_pd(text)) ? import_pd_code(text) : parse_diagram(text);
    }
};

Coloring load_coloring(const std::string& path) {
    return json::parse(read_file(path)).get<Coloring>();
}

void emit(const GlobalOptions& g, const json& report, const std::string& text) {
    if (g.json())
        std::cout << report.dump(2) << '\n';
    else
        std::cout << text;
}

std::string join_values(const std::vector<std::int64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

std::string describe(const Prediction& p) {
    switch (p.verdict) {
        case Prediction::Verdict::no_nontrivial: return "no non-trivial colorings";
        case Prediction::Verdict::exact: return "exactly " + std::to_string(p.value);
        case Prediction::Verdict::at_least: return "at least " + std::to_string(p.value);
    }
    return "?";
}

int cmd_det(const GlobalOptions& g, const DiagramSource& src) {
    const Diagram d = src.load();
    const IntMatrix m = coloring_matrix(d);
    const SNFResult snf = smith_normal_form(m);
    const Int det = link_determinant(m);

    json factors = json::array();
    for (const Int& f : snf.factors) factors.push_back(int_to_string(f));
    const json report = {{"name", d.name},
                         {"arcs", d.arcs},
                         {"crossings", d.crossings.size()},
                         {"free_loops", d.free_loops},
                         {"coloring_matrix", m},
                         {"invariant_factors", factors},
                         {"determinant", int_to_string(det)}};

    std::ostringstream text;
    text << "link:              " << d.name << '\n'
         << "arcs:              " << d.arcs << '\n'
         << "crossings:         " << d.crossings.size() << '\n'
         << "free loops:        " << d.free_loops << '\n'
         << "invariant factors:";
    for (const Int& f : snf.factors) text << ' ' << f;
    text << '\n' << "determinant:       " << det << '\n';
    emit(g, report, text.str());
    return 0;
}

int cmd_count(const GlobalOptions& g, const DiagramSource& src, std::int64_t r) {
    const Diagram d = src.load();
    const SolutionModule sol = solve_homogeneous_mod(coloring_matrix(d), r);

    json orders = json::array();
    for (std::int64_t o : sol.orders) orders.push_back(o);
    const json report = {{"name", d.name},
                         {"r", r},
                         {"cardinality", int_to_string(sol.cardinality)},
                         {"rank_free", sol.rank_free},
                         {"generator_orders", orders}};

    std::ostringstream text;
    text << "link:             " << d.name << '\n'
         << "r:                " << r << '\n'
         << "colorings:        " << sol.cardinality << '\n'
         << "free rank:        " << sol.rank_free << '\n'
         << "generator orders: " << join_values(sol.orders) << '\n';
    emit(g, report, text.str());
    return 0;
}

int cmd_mincol(const GlobalOptions& g, const DiagramSource& src, std::int64_t r,
               bool brute_force) {
    const Diagram d = src.load();
    const Int det = link_determinant(coloring_matrix(d));
    const auto mode = brute_force ? PaletteSearch::brute_force : PaletteSearch::prime_reduction;
    const auto mp = min_palette_diagram(d, r, mode);

    json report = {{"name", d.name},
                   {"r", r},
                   {"det", int_to_string(det)},
                   {"route", brute_force ? "brute-force" : "prime-reduction"}};
    std::ostringstream text;
    text << "link: " << d.name << "\nr:    " << r << "\ndet:  " << det << '\n';
    if (det != 0) {
        const Prediction pred = predicted_min_colors(r, det);
        report["prediction"] = pred;
        text << "prediction: " << describe(pred) << " (lcpd " << pred.lcpd << ")\n";
    } else {
        report["prediction"] = nullptr;
        text << "prediction: unavailable (null determinant)\n";
    }
    if (mp) {
        const Coloring witness = translate_min_to_zero(mp->witness);
        report["min_colors"] = mp->colors;
        report["witness"] = witness;
        text << "min colors: " << mp->colors << '\n'
             << "witness (mod " << witness.modulus << "): " << join_values(witness.values)
             << '\n';
    } else {
        report["min_colors"] = nullptr;
        report["witness"] = nullptr;
        text << "min colors: none (no non-trivial colorings)\n";
    }
    emit(g, report, text.str());
    return 0;
}

int cmd_lift(const GlobalOptions& g, const DiagramSource& src, const std::string& coloring_path,
             std::int64_t r) {
    const Diagram d = src.load();
    const Coloring input = load_coloring(coloring_path);
    const Coloring output = lift_coloring(input, r, d);
    const bool valid = is_valid_coloring(d, output);

    const json report = {{"name", d.name},
                         {"input", input},
                         {"r", r},
                         {"output", output},
                         {"valid", valid},
                         {"nontrivial", !is_trivial(output)}};
    std::ostringstream text;
    text << "link:   " << d.name << '\n'
         << "input  (mod " << input.modulus << "): " << join_values(input.values) << '\n'
         << "output (mod " << output.modulus << "): " << join_values(output.values) << '\n'
         << "valid:  " << (valid ? "yes" : "no") << '\n';
    emit(g, report, text.str());
    return 0;
}

int cmd_reduce(const GlobalOptions& g, const DiagramSource& src,
               const std::string& coloring_path) {
    const Diagram d = src.load();
    const Coloring input = load_coloring(coloring_path);
    const ReduceResult res = reduce_coloring(input, d);
    const bool valid = is_valid_coloring(d, res.coloring);

    const json report = {{"name", d.name},
                         {"input", input},
                         {"g", res.color_gcd},
                         {"p", res.prime},
                         {"output", res.coloring},
                         {"valid", valid},
                         {"nontrivial", !is_trivial(res.coloring)}};
    std::ostringstream text;
    text << "link:   " << d.name << '\n'
         << "input  (mod " << input.modulus << "): " << join_values(input.values) << '\n'
         << "g:      " << res.color_gcd << '\n'
         << "p:      " << res.prime << '\n'
         << "output (mod " << res.prime << "): " << join_values(res.coloring.values) << '\n'
         << "valid:  " << (valid ? "yes" : "no") << '\n';
    emit(g, report, text.str());
    return 0;
}

std::vector<const LinkTableEntry*> select_entries(const std::vector<std::string>& tables,
                                                  bool all) {
    if (all == !tables.empty())
        throw std::invalid_argument("select diagrams with either --table or --all");
    std::vector<const LinkTableEntry*> out;
    if (all) {
        for (const auto& e : builtin_table()) out.push_back(&e);
        return out;
    }
    for (const auto& name : tables) {
        const LinkTableEntry* entry = find_entry(name);
        if (!entry) throw std::invalid_argument("unknown table entry: " + name);
        out.push_back(entry);
    }
    return out;
}

std::vector<std::int64_t> moduli_from(std::optional<std::int64_t> r,
                                      std::optional<std::int64_t> r_max) {
    if (r && r_max) throw std::invalid_argument("--r and --r-max are mutually exclusive");
    std::vector<std::int64_t> rs;
    if (r) {
        rs.push_back(*r);
    } else {
        const std::int64_t hi = r_max.value_or(15);
        for (std::int64_t v = 2; v <= hi; ++v) rs.push_back(v);
    }
    return rs;
}

int cmd_verify(const GlobalOptions& g, const std::vector<std::string>& tables, bool all,
               std::optional<std::int64_t> r, std::optional<std::int64_t> r_max) {
    const auto entries = select_entries(tables, all);
    const auto rs = moduli_from(r, r_max);

    VerifyReport report;
    for (const LinkTableEntry* entry : entries) {
        const Int det = link_determinant(coloring_matrix(entry->diagram));
        if (det == 0) {
            std::cerr << "warning: skipping " << entry->diagram.name
                      << " (null determinant)\n";
            continue;
        }
        for (const VerifyRecord& rec : verify_link(*entry, rs).records)
            report.records.push_back(rec);
    }
    std::sort(report.records.begin(), report.records.end(),
              [](const VerifyRecord& a, const VerifyRecord& b) {
                  return std::tie(a.link, a.r) < std::tie(b.link, b.r);
              });

    std::ostringstream text;
    text << "# " << kVerifyHypothesis << '\n';
    text << std::left << std::setw(12) << "link" << std::setw(5) << "r" << std::setw(6)
         << "det" << std::setw(6) << "lcpd" << std::setw(26) << "prediction" << std::setw(7)
         << "n_rD" << std::setw(14) << "status" << "note" << '\n';
    for (const auto& rec : report.records) {
        text << std::left << std::setw(12) << rec.link << std::setw(5) << rec.r << std::setw(6)
             << rec.det.str() << std::setw(6) << rec.prediction.lcpd.str() << std::setw(26)
             << describe(rec.prediction) << std::setw(7)
             << (rec.min_colors ? std::to_string(*rec.min_colors) : "-") << std::setw(14)
             << to_string(rec.status) << rec.note << '\n';
    }
    text << (report.all_consistent() ? "all records consistent\n"
                                     : "INCONSISTENT RECORDS FOUND\n");
    emit(g, json(report), text.str());
    return report.all_consistent() ? 0 : 3;
}

int cmd_scan(const GlobalOptions& g, const std::vector<std::string>& tables, bool all,
             std::int64_t r_max) {
    const auto selected = select_entries(tables, all);
    std::vector<LinkTableEntry> entries;
    for (const LinkTableEntry* e : selected) {
        if (link_determinant(coloring_matrix(e->diagram)) == 0) {
            std::cerr << "warning: skipping " << e->diagram.name << " (null determinant)\n";
            continue;
        }
        entries.push_back(*e);
    }
    const ScanReport report = conjecture_scan(entries, r_max);

    std::ostringstream text;
    for (const auto& group : report.groups) {
        text << "lcpd " << group.lcpd << ": "
             << (group.exact ? "group value " : "group bound >= ") << group.proven_low
             << ", best computed upper bound "
             << (group.best_upper ? std::to_string(*group.best_upper) : std::string("-"))
             << (group.flagged ? "  [FLAGGED: " + group.note + "]" : "") << '\n';
        for (const auto& rec : group.records)
            text << "  " << std::left << std::setw(12) << rec.link << " r=" << std::setw(4)
                 << rec.r << " n_rD="
                 << (rec.min_colors ? std::to_string(*rec.min_colors) : std::string("-"))
                 << '\n';
    }
    text << "summary: " << report.summary << "; "
         << (report.consistent ? "bounds consistent" : "BOUND CONTRADICTION FOUND") << '\n';
    emit(g, json(report), text.str());
    return report.consistent ? 0 : 3;
}

int cmd_table(const GlobalOptions& g) {
    json report = json::array();
    std::ostringstream text;
    text << std::left << std::setw(12) << "name" << std::setw(6) << "arcs" << std::setw(11)
         << "crossings" << std::setw(7) << "loops" << std::setw(5) << "det" << "provenance"
         << '\n';
    for (const auto& e : builtin_table()) {
        report.push_back(
            {{"name", e.diagram.name},
             {"arcs", e.diagram.arcs},
             {"crossings", e.diagram.crossings.size()},
             {"free_loops", e.diagram.free_loops},
             {"expected_det", e.expected_det ? json(int_to_string(*e.expected_det)) : json()},
             {"provenance", e.provenance}});
        text << std::left << std::setw(12) << e.diagram.name << std::setw(6) << e.diagram.arcs
             << std::setw(11) << e.diagram.crossings.size() << std::setw(7)
             << e.diagram.free_loops << std::setw(5)
             << (e.expected_det ? e.expected_det->str() : std::string("?")) << e.provenance
             << '\n';
    }
    emit(g, report, text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fox coloring invariants of link diagrams"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    DiagramSource det_src, count_src, mincol_src, lift_src, reduce_src;
    std::string lift_coloring_path, reduce_coloring_path;
    std::int64_t count_r = 0, mincol_r = 0, lift_r = 0, scan_r_max = 15;
    bool mincol_brute = false;
    std::vector<std::string> verify_tables, scan_tables;
    bool verify_all = false, scan_all = false;
    std::optional<std::int64_t> verify_r, verify_r_max;

    CLI::App* det = app.add_subcommand("det", "link determinant and invariant factors");
    det_src.attach(det);

    CLI::App* count = app.add_subcommand("count", "number of r-colorings");
    count_src.attach(count);
    count->add_option("--r", count_r, "modulus")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1000000000}));

    CLI::App* mincol = app.add_subcommand("mincol", "minimum palette of this diagram");
    mincol_src.attach(mincol);
    mincol->add_option("--r", mincol_r, "modulus")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1000000}));
    mincol->add_flag("--brute-force", mincol_brute, "enumerate the full solution set");

    CLI::App* lift = app.add_subcommand("lift", "rescale a coloring to a multiple modulus");
    lift->add_option("coloring", lift_coloring_path, "coloring JSON file")->required();
    lift_src.attach(lift);
    lift->add_option("--r", lift_r, "target modulus")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1000000}));

    CLI::App* reduce = app.add_subcommand("reduce", "contract a coloring to a prime modulus");
    reduce->add_option("coloring", reduce_coloring_path, "coloring JSON file")->required();
    reduce_src.attach(reduce);

    CLI::App* verify = app.add_subcommand("verify", "check predictions over the bundled table");
    verify->add_option("--table", verify_tables, "bundled diagram(s) to check");
    verify->add_flag("--all", verify_all, "check every bundled diagram");
    auto* vr = verify->add_option("--r", verify_r, "single modulus")->check(CLI::Range(std::int64_t{2}, std::int64_t{1000000}));
    verify->add_option("--r-max", verify_r_max, "check moduli 2..N (default 15)")
        ->excludes(vr)
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{1000000}));

    CLI::App* scan = app.add_subcommand("scan", "group moduli by lcpd and compare bounds");
    scan->add_option("--table", scan_tables, "bundled diagram(s) to scan");
    scan->add_flag("--all", scan_all, "scan every bundled diagram");
    scan->add_option("--r-max", scan_r_max, "scan moduli 2..N")->check(CLI::Range(std::int64_t{2}, std::int64_t{1000000}));

    CLI::App* table = app.add_subcommand("table", "list the bundled diagrams");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }

    try {
        if (app.got_subcommand(det)) return cmd_det(global, det_src);
        if (app.got_subcommand(count)) return cmd_count(global, count_src, count_r);
        if (app.got_subcommand(mincol))
            return cmd_mincol(global, mincol_src, mincol_r, mincol_brute);
        if (app.got_subcommand(lift)) return cmd_lift(global, lift_src, lift_coloring_path, lift_r);
        if (app.got_subcommand(reduce))
            return cmd_reduce(global, reduce_src, reduce_coloring_path);
        if (app.got_subcommand(verify))
            return cmd_verify(global, verify_tables, verify_all, verify_r, verify_r_max);
        if (app.got_subcommand(scan)) return cmd_scan(global, scan_tables, scan_all, scan_r_max);
        if (app.got_subcommand(table)) return cmd_table(global);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "JSON error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
