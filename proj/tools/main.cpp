// Command-line interface: graph generation, verification, exact solving,
// witness construction, bound queries, table sweeps, and structural audits.
//
// Exit codes: 0 success / check passed, 1 verification or audit failure,
// 2 invalid input, 3 search budget exhausted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbowdom/audit.hpp"
#include "rainbowdom/bounds.hpp"
#include "rainbowdom/constructions.hpp"
#include "rainbowdom/errors.hpp"
#include "rainbowdom/graph.hpp"
#include "rainbowdom/rdf.hpp"
#include "rainbowdom/solver.hpp"

namespace {

using nlohmann::json;
using namespace rainbowdom;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write file: " + out_path);
        out << text;
    }
}

PetersenParams parse_petersen_arg(const std::string& arg) {
    const auto comma = arg.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--petersen expects n,k (e.g. 6,1), got '" + arg + "'");
    return PetersenParams(std::stoi(arg.substr(0, comma)), std::stoi(arg.substr(comma + 1)));
}

json verify_report_json(const VerifyReport& report) {
    json doc;
    doc["pass"] = report.pass;
    json violations = json::array();
    for (const Violation& v : report.violations)
        violations.push_back({{"vertex", v.vertex}, {"missing", v.missing.members()}});
    doc["violations"] = std::move(violations);
    return doc;
}

json bound_report_json(int c, int k, int t, const BoundReport& r) {
    json doc;
    doc["c"] = c;
    doc["k"] = k;
    doc["n"] = c * k;
    doc["t"] = t;
    doc["lower"] = r.lower;
    doc["upper"] = r.upper;
    if (r.exact) doc["exact"] = *r.exact;
    doc["sources"] = r.sources;
    doc["mode"] = to_string(r.mode);
    if (!r.note.empty()) doc["note"] = r.note;
    return doc;
}

json audit_report_json(const AuditReport& report) {
    json doc;
    doc["overall"] = report.overall;
    json checks = json::array();
    for (const AuditCheck& check : report.checks)
        checks.push_back({{"name", check.name}, {"pass", check.pass}, {"details", check.details}});
    doc["checks"] = std::move(checks);
    return doc;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (const std::string& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

struct BudgetFlags {
    long long nodes = SearchBudget{}.max_nodes;
    long long states = SearchBudget{}.max_states;
    double seconds = 600.0;

    SearchBudget to_budget() const {
        SearchBudget b;
        b.max_nodes = nodes;
        b.max_states = states;
        b.max_elapsed = std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0));
        return b;
    }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& flags) {
    cmd->add_option("--budget-nodes", flags.nodes, "branch-and-bound node limit");
    cmd->add_option("--budget-states", flags.states, "profile-dp state limit");
    cmd->add_option("--budget-seconds", flags.seconds, "wall-clock limit in seconds");
}

int run(int argc, char** argv) {
    CLI::App app{
        "rainbow domination toolkit for cubic graphs and generalized Petersen graphs P(n,k).\n"
        "Vertex id convention: outer u_i = i, inner v_i = n + i (0 <= i < n)."};
    app.require_subcommand(1);

    // gen ------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a graph as JSON or DOT");
    gen->require_subcommand(1);
    int gen_n = 6, gen_k = 1;
    bool gen_dot = false;
    std::string gen_out;
    auto* gen_petersen = gen->add_subcommand("petersen", "generalized Petersen graph P(n,k)");
    gen_petersen->add_option("--n", gen_n, "cycle length n")->required();
    gen_petersen->add_option("--k", gen_k, "inner step k")->required();
    auto* gen_example = gen->add_subcommand("example", "cubic 36-vertex graph with an exact 4-rainbow witness");
    auto* gen_subdiv = gen->add_subcommand("subdivided-k4", "K4 with each edge subdivided once");
    for (auto* cmd : {gen_petersen, gen_example, gen_subdiv}) {
        cmd->add_flag("--dot", gen_dot, "emit DOT instead of JSON");
        cmd->add_option("--out", gen_out, "write to file instead of stdout");
    }

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check an assignment against a graph");
    std::string verify_graph, verify_assignment;
    bool verify_json = false;
    verify->add_option("--graph", verify_graph, "graph JSON file")->required();
    verify->add_option("--assignment", verify_assignment, "assignment JSON file")->required();
    verify->add_flag("--json", verify_json, "emit the verdict as JSON");

    // solve ------------------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "compute the exact rainbow domination number");
    std::string solve_petersen, solve_graph, solve_method = "auto", solve_witness_out;
    int solve_t = 3;
    bool solve_json = false;
    BudgetFlags solve_budget;
    solve->add_option("--petersen", solve_petersen, "petersen parameters n,k");
    solve->add_option("--graph", solve_graph, "graph JSON file");
    solve->add_option("--t", solve_t, "number of colors t")->required();
    solve->add_option("--method", solve_method, "auto|bb|dp")->check(CLI::IsMember({"auto", "bb", "dp"}));
    solve->add_option("--witness-out", solve_witness_out, "write the witness assignment JSON here");
    solve->add_flag("--json", solve_json, "emit the result as JSON");
    add_budget_flags(solve, solve_budget);

    // construct --------------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "emit the closed-form witnesses");
    construct->require_subcommand(1);
    int cons_n = 6, cons_k = 1, cons_t = 3;
    std::string cons_out, cons_graph, cons_assignment;
    auto* cons_pattern = construct->add_subcommand("pattern", "periodic extremal pattern on P(n,k)");
    cons_pattern->add_option("--n", cons_n)->required();
    cons_pattern->add_option("--k", cons_k)->required();
    cons_pattern->add_option("--t", cons_t)->required();
    auto* cons_lift = construct->add_subcommand("lift", "add one color to a valid assignment");
    cons_lift->add_option("--graph", cons_graph)->required();
    cons_lift->add_option("--assignment", cons_assignment)->required();
    auto* cons_example = construct->add_subcommand("example", "weight-24 witness for the 36-vertex example graph");
    for (auto* cmd : {cons_pattern, cons_lift, cons_example})
        cmd->add_option("--out", cons_out, "write to file instead of stdout");

    // bounds -----------------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "bound report for P(ck,k)");
    int bounds_c = 6, bounds_k = 1, bounds_t = 3;
    std::string bounds_mode = "corrected";
    bool bounds_json = false;
    bounds->add_option("--c", bounds_c)->required();
    bounds->add_option("--k", bounds_k)->required();
    bounds->add_option("--t", bounds_t)->required();
    bounds->add_option("--mode", bounds_mode)->check(CLI::IsMember({"as_printed", "corrected"}));
    bounds->add_flag("--json", bounds_json);

    // table ------------------------------------------------------------------
    auto* table = app.add_subcommand("table", "CSV sweep of bound reports");
    int table_c_min = 3, table_c_max = 12, table_k_min = 1, table_k_max = 6, table_t_min = 1, table_t_max = 7;
    std::string table_mode = "corrected", table_out;
    bool table_solve = false;
    BudgetFlags table_budget;
    table->add_option("--c-min", table_c_min);
    table->add_option("--c-max", table_c_max);
    table->add_option("--k-min", table_k_min);
    table->add_option("--k-max", table_k_max);
    table->add_option("--t-min", table_t_min);
    table->add_option("--t-max", table_t_max);
    table->add_option("--mode", table_mode)->check(CLI::IsMember({"as_printed", "corrected", "both"}));
    table->add_flag("--solve-within-budget", table_solve, "fill solver_value where the budget allows");
    table->add_option("--out", table_out, "write CSV to file instead of stdout");
    add_budget_flags(table, table_budget);

    // check-structure ----------------------------------------------------------
    auto* check = app.add_subcommand("check-structure", "audit structural conclusions on an assignment");
    std::string check_profile, check_graph, check_petersen, check_assignment;
    int check_t = 4;
    check->add_option("--profile", check_profile, "extremal4|extremal5|outer|census")
        ->required()
        ->check(CLI::IsMember({"extremal4", "extremal5", "outer", "census"}));
    check->add_option("--graph", check_graph, "graph JSON file");
    check->add_option("--petersen", check_petersen, "petersen parameters n,k (required for --profile outer)");
    check->add_option("--assignment", check_assignment, "assignment JSON file")->required();
    check->add_option("--t", check_t, "number of colors t");

    CLI11_PARSE(app, argc, argv);

    // gen ------------------------------------------------------------------
    if (gen->parsed()) {
        Graph g;
        if (gen_petersen->parsed()) g = build_generalized_petersen({gen_n, gen_k});
        if (gen_example->parsed()) g = build_example_graph();
        if (gen_subdiv->parsed()) g = build_subdivided_k4();
        emit(gen_dot ? export_dot(g) : serialize_graph(g), gen_out);
        return kExitOk;
    }

    // verify ---------------------------------------------------------------
    if (verify->parsed()) {
        const Graph g = parse_graph(read_file(verify_graph));
        const RainbowAssignment a = parse_assignment(read_file(verify_assignment));
        const VerifyReport report = verify_trdf(g, a);
        if (verify_json) {
            std::cout << verify_report_json(report).dump(2) << "\n";
        } else if (report.pass) {
            std::cout << "pass: valid " << a.t << "-rainbow domination function of weight " << weight(a) << "\n";
        } else {
            std::cout << "fail: " << report.violations.size() << " uncolored vertices lack colors\n";
            for (const Violation& v : report.violations)
                std::cout << "  vertex " << v.vertex << " missing " << to_string(v.missing) << "\n";
        }
        return report.pass ? kExitOk : kExitCheckFailed;
    }

    // solve ------------------------------------------------------------------
    if (solve->parsed()) {
        if (solve_petersen.empty() == solve_graph.empty())
            throw std::invalid_argument("solve: pass exactly one of --petersen or --graph");
        const SearchBudget budget = solve_budget.to_budget();
        SolveResult result;
        if (!solve_petersen.empty()) {
            const PetersenParams params = parse_petersen_arg(solve_petersen);
            if (solve_method == "auto")
                result = solve_auto(params, solve_t, budget);
            else if (solve_method == "dp")
                result = solve_profile_dp(params, solve_t, budget);
            else
                result = solve_branch_bound(build_generalized_petersen(params), solve_t, budget);
        } else {
            if (solve_method == "dp") throw std::invalid_argument("solve: --method dp needs --petersen input");
            const Graph g = parse_graph(read_file(solve_graph));
            result = solve_branch_bound(g, solve_t, budget);
        }
        if (!solve_witness_out.empty()) emit(serialize_assignment(result.witness), solve_witness_out);
        if (solve_json) {
            json doc;
            doc["optimum"] = result.optimum;
            doc["method"] = to_string(result.method);
            doc["nodes"] = result.stats.nodes;
            doc["states"] = result.stats.states;
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << result.optimum << "\n";
        }
        return kExitOk;
    }

    // construct --------------------------------------------------------------
    if (construct->parsed()) {
        RainbowAssignment a;
        if (cons_pattern->parsed()) a = extremal_pattern(cons_n, cons_k, cons_t);
        if (cons_lift->parsed())
            a = lift(parse_graph(read_file(cons_graph)), parse_assignment(read_file(cons_assignment)));
        if (cons_example->parsed()) a = example_4rdf();
        emit(serialize_assignment(a), cons_out);
        return kExitOk;
    }

    // bounds -----------------------------------------------------------------
    if (bounds->parsed()) {
        const BoundReport r = bounds_pckk(bounds_c, bounds_k, bounds_t, table_mode_from_string(bounds_mode));
        if (bounds_json) {
            std::cout << bound_report_json(bounds_c, bounds_k, bounds_t, r).dump(2) << "\n";
        } else {
            std::cout << "lower " << r.lower << " upper " << r.upper;
            if (r.exact) std::cout << " exact " << *r.exact;
            std::cout << "\n";
            if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
        }
        return kExitOk;
    }

    // table ------------------------------------------------------------------
    if (table->parsed()) {
        if (table_c_min > table_c_max || table_k_min > table_k_max || table_t_min > table_t_max)
            throw std::invalid_argument("table: empty grid");
        std::vector<TableMode> modes;
        if (table_mode == "both")
            modes = {TableMode::as_printed, TableMode::corrected};
        else
            modes = {table_mode_from_string(table_mode)};

        std::ostringstream csv;
        csv << "c,k,n,t,lower,upper,exact,solver_value,method,sources,mode\n";
        for (int c = table_c_min; c <= table_c_max; ++c) {
            for (int k = table_k_min; k <= table_k_max; ++k) {
                if (2 * k >= c * k) continue; // c < 3 rows are out of the family
                for (int t = table_t_min; t <= table_t_max; ++t) {
                    std::optional<int> solver_value;
                    std::string method;
                    if (table_solve) {
                        try {
                            const SolveResult r = solve_auto(PetersenParams{c * k, k}, t, table_budget.to_budget());
                            solver_value = r.optimum;
                            method = to_string(r.method);
                        } catch (const StateSpaceTooLarge&) {
                        } catch (const BudgetExhausted&) {
                        }
                    }
                    for (TableMode mode : modes) {
                        const BoundReport r = bounds_pckk(c, k, t, mode);
                        csv << c << ',' << k << ',' << c * k << ',' << t << ',' << r.lower << ',' << r.upper << ',';
                        if (r.exact) csv << *r.exact;
                        csv << ',';
                        if (solver_value) csv << *solver_value;
                        csv << ',' << method << ',' << join(r.sources, ';') << ',' << to_string(mode) << "\n";
                    }
                }
            }
        }
        emit(csv.str(), table_out);
        return kExitOk;
    }

    // check-structure ----------------------------------------------------------
    if (check->parsed()) {
        const RainbowAssignment a = parse_assignment(read_file(check_assignment));
        AuditReport report;
        if (check_profile == "outer") {
            if (check_petersen.empty())
                throw std::invalid_argument("check-structure: --profile outer needs --petersen n,k");
            report = audit_outer_pattern(parse_petersen_arg(check_petersen), a);
        } else {
            Graph g;
            if (!check_graph.empty())
                g = parse_graph(read_file(check_graph));
            else if (!check_petersen.empty())
                g = build_generalized_petersen(parse_petersen_arg(check_petersen));
            else
                throw std::invalid_argument("check-structure: pass --graph or --petersen");
            if (check_profile == "extremal4")
                report = audit_extremal_4(g, a);
            else if (check_profile == "extremal5")
                report = audit_extremal_5(g, a);
            else
                report = audit_weight_census_bounds(a, g, check_t);
        }
        std::cout << audit_report_json(report).dump(2) << "\n";
        return report.overall ? kExitOk : kExitCheckFailed;
    }

    return kExitInvalidInput;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const StateSpaceTooLarge& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const ContractError& e) {
        std::cerr << "contract error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
