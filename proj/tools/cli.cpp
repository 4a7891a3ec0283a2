#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vknot/census.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/hom_count.hpp"
#include "vknot/presentation.hpp"
#include "vknot/quandle.hpp"

namespace vknot::cli {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string trimmed(const std::string& s) {
    const size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Inline code or @file; text or vector notation, detected by the bracket.
GaussCode load_code(const std::string& arg) {
    std::string body = arg;
    if (!body.empty() && body.front() == '@') body = slurp(body.substr(1));
    body = trimmed(body);
    if (body.empty()) throw ValidationError("empty Gauss code");
    return body.front() == '[' ? parse_vector(body) : parse_text(body);
}

// Built-in name, or a path to a table file.
QuandleTable load_quandle(const std::string& arg) {
    const auto& names = builtin_names();
    if (std::find(names.begin(), names.end(), arg) != names.end()) return builtin(arg);
    if (arg.size() >= 2 && arg.front() == 'T' && arg.ends_with("-trivial")) return builtin(arg);
    return parse_table(slurp(arg));
}

std::string percent_str(double percent) {
    return std::to_string(static_cast<long long>(std::llround(percent))) + "%";
}

void print_census(const CensusResult& r, std::ostream& out) {
    out << "crossings: " << r.crossings << "\n";
    out << "total codes: " << r.total_codes << "\n";
    for (const auto& q : r.per_quandle)
        out << "detected " << q.name << ": " << q.detected << "\n";
    out << "nontrivial codes: " << r.nontrivial_codes << "\n";
    out << "detected among nontrivial: " << r.detected_among_nontrivial << " ("
        << percent_str(r.percent_detected) << ")\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream outf(path);
    if (!outf) throw ValidationError("cannot write file: " + path);
    outf << content;
}

struct CensusCliOptions {
    int crossings = 4;
    std::string quandles = "T3,T4,T5a,T5b,T5c,T6";
    std::string csv_path;
    std::string json_path;
    int jobs = 1;
    EnumerationOptions conventions = default_conventions();
};

void add_convention_flags(CLI::App* cmd, EnumerationOptions& opts) {
    cmd->add_flag("--r1-cyclic,!--no-r1-cyclic", opts.r1_cyclic,
                  "count the last/first symbol pair as adjacent in the R1 filter");
    cmd->add_flag("--r2-cyclic,!--no-r2-cyclic", opts.r2_cyclic,
                  "count the last/first symbol pair as adjacent in the R2 filter");
    cmd->add_flag("--r2-nested,!--no-r2-nested", opts.r2_patterns.nested,
                  "match nested bigons (...ab...ba...)");
    cmd->add_flag("--r2-interleaved,!--no-r2-interleaved", opts.r2_patterns.interleaved,
                  "match interleaved bigons (...ab...ab...)");
    cmd->add_flag("--cyclic-canonical,!--no-cyclic-canonical", opts.cyclic_canonical,
                  "emit one representative per cyclic rotation class");
    cmd->add_option_function<std::string>(
           "--interstice",
           [&opts](const std::string& v) {
               opts.interstice = v == "even-between" ? IntersticeConvention::EvenBetween
                                                     : IntersticeConvention::OddBetween;
           },
           "parity defining an even interstice: even-between or odd-between (default)")
        ->check(CLI::IsMember({"even-between", "odd-between"}));
}

CensusConfig make_census_config(const CensusCliOptions& o) {
    CensusConfig cfg;
    cfg.crossings = o.crossings;
    cfg.conventions = o.conventions;
    cfg.jobs = o.jobs;
    std::istringstream names(o.quandles);
    std::string name;
    while (std::getline(names, name, ',')) {
        name = trimmed(name);
        if (name.empty()) continue;
        cfg.quandles.push_back({name, load_quandle(name)});
    }
    return cfg;
}

void run_census_command(const CensusCliOptions& o, std::ostream& out) {
    const CensusResult result = run_census(make_census_config(o));
    print_census(result, out);
    if (!o.csv_path.empty()) write_file(o.csv_path, export_csv(result));
    if (!o.json_path.empty()) write_file(o.json_path, export_json(result));
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quandle counting and difference invariants of virtual knots from Gauss codes"};
    app.name("vknot");
    app.require_subcommand(1);

    // --- quandle ---
    auto* quandle_cmd = app.add_subcommand("quandle", "operate on finite quandle tables");
    quandle_cmd->require_subcommand(1);

    std::string verify_path;
    auto* verify_cmd = quandle_cmd->add_subcommand("verify", "check the quandle axioms and connectedness");
    verify_cmd->add_option("file", verify_path, "quandle table file")->required();

    std::string show_name;
    auto* show_cmd = quandle_cmd->add_subcommand("show", "print a built-in quandle table");
    show_cmd->add_option("name", show_name, "built-in name (see 'quandle list'; Tn-trivial also works)")
        ->required();

    auto* list_cmd = quandle_cmd->add_subcommand("list", "list the built-in quandles");

    // --- code ---
    auto* code_cmd = app.add_subcommand("code", "operate on Gauss codes");
    code_cmd->require_subcommand(1);

    struct CodeOptions {
        std::string code;
        bool vector_out = false;
        bool json = false;
    };

    CodeOptions parse_opts;
    auto* parse_cmd = code_cmd->add_subcommand("parse", "parse and normalize a Gauss code");
    parse_cmd->add_option("code", parse_opts.code, "code (text or vector notation, or @file)")->required();
    parse_cmd->add_flag("--vector", parse_opts.vector_out, "print the vector notation");
    parse_cmd->add_flag("--json", parse_opts.json, "print JSON");

    CodeOptions flip_opts;
    auto* flip_cmd = code_cmd->add_subcommand("flip", "toggle every over/under role");
    flip_cmd->add_option("code", flip_opts.code, "single-component code or @file")->required();
    flip_cmd->add_flag("--vector", flip_opts.vector_out, "print the vector notation");
    flip_cmd->add_flag("--json", flip_opts.json, "print JSON");

    CodeOptions check_opts;
    EnumerationOptions check_conventions = default_conventions();
    auto* check_cmd = code_cmd->add_subcommand("check", "validity, interstice parity, R1/R2 reducibility");
    check_cmd->add_option("code", check_opts.code, "code or @file")->required();
    check_cmd->add_flag("--json", check_opts.json, "print JSON");
    add_convention_flags(check_cmd, check_conventions);

    std::string pres_code;
    std::string pres_side = "upper";
    bool pres_matrix = false;
    bool pres_gfix = false;
    bool pres_json = false;
    auto* pres_cmd = code_cmd->add_subcommand("presentation", "extract a quandle presentation");
    pres_cmd->add_option("code", pres_code, "single-component code or @file")->required();
    pres_cmd->add_option("--side", pres_side, "upper or lower")
        ->check(CLI::IsMember({"upper", "lower"}));
    pres_cmd->add_flag("--matrix", pres_matrix, "print the presentation matrix");
    pres_cmd->add_flag("--gfix", pres_gfix, "repair conflicts with kink insertions first");
    pres_cmd->add_flag("--json", pres_json, "print JSON");

    // --- invariant ---
    std::string inv_code;
    std::string inv_quandle;
    bool inv_json = false;
    auto* inv_cmd = app.add_subcommand("invariant", "counting pair and difference invariant");
    inv_cmd->add_option("--code", inv_code, "single-component code or @file")->required();
    inv_cmd->add_option("--quandle", inv_quandle, "built-in name or table file")->required();
    inv_cmd->add_flag("--json", inv_json, "print JSON");

    // --- census ---
    CensusCliOptions census_opts;
    auto* census_cmd = app.add_subcommand("census", "enumerate filtered codes and tabulate detections");
    census_cmd->add_option("--crossings", census_opts.crossings, "crossing count (1..6)")->required();
    census_cmd->add_option("--quandles", census_opts.quandles, "comma-separated names or table files");
    census_cmd->add_option("--csv", census_opts.csv_path, "write CSV here");
    census_cmd->add_option("--json", census_opts.json_path, "write JSON here");
    census_cmd->add_option("--jobs", census_opts.jobs, "worker threads");
    add_convention_flags(census_cmd, census_opts.conventions);

    // --- table1 ---
    CensusCliOptions table1_opts;
    auto* table1_cmd =
        app.add_subcommand("table1", "the 4-crossing census over the six built-in quandles");
    table1_cmd->add_option("--jobs", table1_opts.jobs, "worker threads");
    table1_cmd->add_option("--csv", table1_opts.csv_path, "write CSV here");
    table1_cmd->add_option("--json", table1_opts.json_path, "write JSON here");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify_cmd->parsed()) {
            const QuandleTable q = parse_table(slurp(verify_path));
            const AxiomReport rep = check_axioms(q);
            if (!rep.ok()) {
                out << "invalid: " << describe(rep) << "\n";
                return 1;
            }
            out << "valid, " << (is_connected(q) ? "connected" : "not connected") << "\n";
        } else if (show_cmd->parsed()) {
            out << serialize_table(builtin(show_name)) << "\n";
        } else if (list_cmd->parsed()) {
            for (const auto& name : builtin_names()) out << name << "\n";
        } else if (parse_cmd->parsed()) {
            const GaussCode code = load_code(parse_opts.code);
            if (parse_opts.json) {
                nlohmann::ordered_json j;
                j["text"] = to_text(code);
                j["vector"] = to_vector(code);
                j["components"] = code.components.size();
                j["crossings"] = code.crossings();
                out << j.dump() << "\n";
            } else {
                out << (parse_opts.vector_out ? to_vector(code) : to_text(code)) << "\n";
            }
        } else if (flip_cmd->parsed()) {
            const GaussCode flipped = flip(load_code(flip_opts.code));
            if (flip_opts.json) {
                nlohmann::ordered_json j;
                j["text"] = to_text(flipped);
                j["vector"] = to_vector(flipped);
                out << j.dump() << "\n";
            } else {
                out << (flip_opts.vector_out ? to_vector(flipped) : to_text(flipped)) << "\n";
            }
        } else if (check_cmd->parsed()) {
            const GaussCode code = load_code(check_opts.code);
            if (!code.single_component()) {
                if (check_opts.json) {
                    nlohmann::ordered_json j;
                    j["valid"] = true;
                    j["components"] = code.components.size();
                    out << j.dump() << "\n";
                } else {
                    out << "valid; " << code.components.size() << " components\n";
                }
                return 0;
            }
            const bool evenly = is_evenly_intersticed(code);
            const bool r1 = is_r1_reducible(code, check_conventions.r1_cyclic);
            const bool r2 =
                is_r2_reducible(code, check_conventions.r2_cyclic, check_conventions.r2_patterns);
            if (check_opts.json) {
                nlohmann::ordered_json j;
                j["valid"] = true;
                j["evenlyIntersticed"] = evenly;
                j["r1"] = r1;
                j["r2"] = r2;
                out << j.dump() << "\n";
            } else {
                out << "valid; " << (evenly ? "evenly intersticed" : "not evenly intersticed")
                    << "; r1:" << (r1 ? "yes" : "no") << "; r2:" << (r2 ? "yes" : "no") << "\n";
            }
        } else if (pres_cmd->parsed()) {
            GaussCode code = load_code(pres_code);
            if (pres_gfix) {
                if (pres_side == "lower") {
                    code = gfix(flip(code));
                    pres_side = "upper";  // lower of the original = upper of the flip
                } else {
                    code = gfix(code);
                }
            }
            const RelationList rel =
                pres_side == "upper" ? upper_relations(code) : lower_relations(code);
            if (pres_json) {
                nlohmann::ordered_json j;
                j["generators"] = rel.generators;
                nlohmann::ordered_json rels = nlohmann::ordered_json::array();
                for (const auto& r : rel.relations) rels.push_back({r.lhs, r.rhs, r.out});
                j["relations"] = rels;
                const auto m = relations_to_matrix(rel);
                if (std::holds_alternative<PresentationMatrix>(m))
                    j["matrix"] = std::get<PresentationMatrix>(m).entries();
                else {
                    const auto& c = std::get<ConflictReport>(m);
                    j["conflict"] = {c.lhs, c.rhs, c.first_out, c.second_out};
                }
                out << j.dump() << "\n";
            } else if (pres_matrix) {
                const auto m = relations_to_matrix(rel);
                if (std::holds_alternative<PresentationMatrix>(m)) {
                    out << serialize_matrix(std::get<PresentationMatrix>(m)) << "\n";
                } else {
                    const auto& c = std::get<ConflictReport>(m);
                    out << "conflict at (" << c.lhs << "," << c.rhs << "): " << c.first_out
                        << " vs " << c.second_out << "\n";
                }
            } else {
                out << "generators: " << rel.generators << "\n";
                for (const auto& r : rel.relations)
                    out << "x" << r.lhs << " > x" << r.rhs << " = x" << r.out << "\n";
            }
        } else if (inv_cmd->parsed()) {
            const GaussCode code = load_code(inv_code);
            const QuandleTable t = load_quandle(inv_quandle);
            const InvariantReport rep = invariant_report(code, t);
            if (inv_json) {
                nlohmann::ordered_json j;
                j["upper"] = rep.upper;
                j["lower"] = rep.lower;
                j["qd"] = rep.difference;
                j["trivialUpper"] = rep.trivial_upper;
                j["trivialLower"] = rep.trivial_lower;
                out << j.dump() << "\n";
            } else {
                out << "upper=" << rep.upper << " lower=" << rep.lower << " qd=" << rep.difference
                    << "\n";
            }
        } else if (census_cmd->parsed()) {
            run_census_command(census_opts, out);
        } else if (table1_cmd->parsed()) {
            run_census_command(table1_opts, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace vknot::cli
