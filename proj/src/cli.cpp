#include "riskgraph/cli.hpp"

#include "riskgraph/assessment.hpp"
#include "riskgraph/closure.hpp"
#include "riskgraph/export.hpp"
#include "riskgraph/graph.hpp"
#include "riskgraph/register.hpp"
#include "riskgraph/success.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace riskgraph::cli {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_violations(const std::vector<Violation>& violations, std::ostream& os) {
    for (const Violation& v : violations)
        os << v.scope << ": " << violation_code_name(v.code) << ": " << v.message << "\n";
}

// Signals that violations were already reported; maps to kExitValidation.
struct ValidationFailure {};

RiskRegister load_register(const std::string& path, bool lenient, std::ostream& err) {
    ParseOptions opts;
    opts.lenient = lenient;
    opts.validate = false;
    RiskRegister reg = parse_register(read_file(path), opts);
    const auto violations = validate_register(reg);
    if (!violations.empty()) {
        print_violations(violations, err);
        throw ValidationFailure{};
    }
    return reg;
}

json estimate_to_json(const SuccessEstimate& est) {
    json doc;
    doc["analytic"] = est.analytic;
    doc["residual_applied"] = est.residual_applied;
    doc["assumptions"] = json{{"risk_independence", true}};
    if (est.sampled) {
        json s;
        s["mean"] = est.sampled->mean;
        s["trials"] = est.sampled->trials;
        s["seed"] = est.sampled->seed;
        s["generator"] = std::string(kSuccessGeneratorId);
        doc["sampled"] = std::move(s);
    }
    return doc;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"risk register assessment with factor-influence graphs"};
    app.require_subcommand(1);

    std::string register_path;
    std::string graph_path;
    bool lenient = false;
    bool residual = false;
    bool csv = false;
    bool closure = false;
    bool paper_literal = false;
    bool canonical = false;
    bool dot = false;
    std::uint64_t trials = 0;
    std::uint64_t seed = 1;

    CLI::App* cmd_validate = app.add_subcommand("validate", "check a register file");
    cmd_validate->add_option("register", register_path, "register JSON file")->required();
    cmd_validate->add_flag("--lenient", lenient, "accept unknown keys");

    CLI::App* cmd_assess = app.add_subcommand("assess", "rank register risks by impact");
    cmd_assess->add_option("register", register_path, "register JSON file")->required();
    cmd_assess->add_flag("--residual", residual, "rank mitigated risks on residual impact");
    cmd_assess->add_flag("--csv", csv, "emit CSV instead of a table");
    cmd_assess->add_flag("--lenient", lenient, "accept unknown keys");

    CLI::App* cmd_graph = app.add_subcommand("graph", "emit the influence graph");
    auto* graph_file_opt =
        cmd_graph->add_option("--register", graph_path, "graph-definition JSON file");
    auto* graph_canonical_opt = cmd_graph->add_flag(
        "--canonical", canonical, "use the built-in factor model (default)");
    cmd_graph->add_flag("--closure", closure, "overlay transitive influences as dashed edges");
    auto* graph_literal_opt = cmd_graph->add_flag("--paper-literal", paper_literal,
                                                  "use the archival as-published variant");
    cmd_graph->add_flag("--dot", dot, "emit Graphviz DOT")->required();
    cmd_graph->add_flag("--lenient", lenient, "accept unknown keys");
    graph_file_opt->excludes(graph_literal_opt);
    graph_file_opt->excludes(graph_canonical_opt);

    CLI::App* cmd_matrix = app.add_subcommand("matrix", "emit the relation matrix as text");
    cmd_matrix->add_flag("--closure", closure, "emit the transitive closure");
    cmd_matrix->add_flag("--paper-literal", paper_literal,
                         "use the archival as-published variant");

    CLI::App* cmd_predict = app.add_subcommand("predict", "estimate project success rate");
    cmd_predict->add_option("register", register_path, "register JSON file")->required();
    auto* trials_opt =
        cmd_predict->add_option("--trials", trials, "Monte Carlo trials")
            ->check(CLI::PositiveNumber);
    cmd_predict->add_option("--seed", seed, "Monte Carlo seed (default 1)")->needs(trials_opt);
    cmd_predict->add_flag("--residual", residual, "apply post-mitigation frequencies");
    cmd_predict->add_flag("--lenient", lenient, "accept unknown keys");

    CLI::App* cmd_report = app.add_subcommand("report", "full assessment report");
    cmd_report->add_option("register", register_path, "register JSON file")->required();
    cmd_report->add_flag("--lenient", lenient, "accept unknown keys");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_validate) {
            ParseOptions opts;
            opts.lenient = lenient;
            opts.validate = false;
            const RiskRegister reg = parse_register(read_file(register_path), opts);
            const auto violations = validate_register(reg);
            print_violations(violations, out);
            return violations.empty() ? kExitOk : kExitValidation;
        }

        if (*cmd_assess) {
            const RiskRegister reg = load_register(register_path, lenient, err);
            const auto assessments = prioritize(reg, residual);
            out << (csv ? export_csv(assessments) : assessment_table(reg, assessments));
            return kExitOk;
        }

        if (*cmd_graph) {
            FactorGraph g;
            if (!graph_path.empty())
                g = parse_factor_graph(read_file(graph_path), lenient);
            else if (paper_literal)
                g = paper_literal_graph();
            else
                g = canonical_factor_graph();

            if (closure) {
                const BoolMatrix closed = paper_literal
                                              ? paper_literal_closure_matrix()
                                              : transitive_closure(adjacency_matrix(g));
                out << to_dot(g, &closed);
            } else {
                out << to_dot(g);
            }
            return kExitOk;
        }

        if (*cmd_matrix) {
            BoolMatrix m;
            if (paper_literal)
                m = closure ? paper_literal_closure_matrix() : paper_literal_matrix();
            else {
                m = adjacency_matrix(canonical_factor_graph());
                if (closure) m = transitive_closure(m);
            }
            out << render_matrix(m);
            return kExitOk;
        }

        if (*cmd_predict) {
            const RiskRegister reg = load_register(register_path, lenient, err);
            const SuccessEstimate est = trials > 0
                                            ? monte_carlo_success(reg, trials, seed, residual)
                                            : project_success_rate(reg, residual);
            out << estimate_to_json(est).dump(2) << "\n";
            return kExitOk;
        }

        if (*cmd_report) {
            const RiskRegister reg = load_register(register_path, lenient, err);
            const auto assessments = prioritize(reg, false);
            out << report(reg, assessments, project_success_rate(reg, false));
            return kExitOk;
        }
    } catch (const ValidationFailure&) {
        return kExitValidation;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitInput;
    }

    err << app.help();
    return kExitUsage;
}

}  // namespace riskgraph::cli
