// Acceptance suite: every criterion prints one PASS/FAIL line; the binary
// exits nonzero when any criterion fails.

#include "riskgraph/assessment.hpp"
#include "riskgraph/cli.hpp"
#include "riskgraph/closure.hpp"
#include "riskgraph/export.hpp"
#include "riskgraph/graph.hpp"
#include "riskgraph/register.hpp"
#include "riskgraph/success.hpp"

#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace riskgraph;

namespace {

// Each criterion returns an empty string on success, a failure detail otherwise.
using Criterion = std::function<std::string()>;

std::string expect(bool ok, const std::string& detail) { return ok ? "" : detail; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string cli_stdout(std::vector<std::string> args) {
    std::ostringstream out, err;
    riskgraph::cli::run(std::move(args), out, err);
    return out.str();
}

bool row_as_set_matches(const BoolMatrix& m, const FactorGraph& g, const std::string& id) {
    const std::size_t row = g.index_of(id);
    std::set<std::string> from_matrix;
    for (std::size_t col = 0; col < m.size(); ++col)
        if (m.get(row, col)) from_matrix.insert(g.factors()[col].id);
    return from_matrix == reachable(g, id);
}

bool cellwise_subset(const BoolMatrix& a, const BoolMatrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a.get(i, j) && !b.get(i, j)) return false;
    return true;
}

Risk timer_risk() {
    Risk timer;
    timer.id = "TIMER";
    timer.title = "timer misfires under load";
    timer.type = classify_type("Technology");
    timer.probability = 40;
    timer.frequency = FrequencyClass::Frequent;
    timer.observed_rate = Rate{7, "hour"};
    Mitigation plan;
    plan.description = "debounce the interrupt path";
    plan.post_frequency = FrequencyClass::Seldom;
    plan.post_rate = Rate{2, "hour"};
    return apply_mitigation(timer, plan).risk;
}

std::string criterion_literal_matrix_golden() {
    const std::string golden = read_file(std::string(RISKGRAPH_GOLDEN_DIR) +
                                         "/matrix_paper_literal.txt");
    if (golden.empty()) return "golden file missing";
    const std::string actual = cli_stdout({"matrix", "--paper-literal"});
    return expect(actual == golden, "matrix --paper-literal diverges from the golden bytes");
}

std::string criterion_closure_priority_column() {
    const FactorGraph g = canonical_factor_graph();
    const BoolMatrix closed = transitive_closure(adjacency_matrix(g));
    const std::size_t priority_col = g.index_of("N5");
    for (const std::string id : {"N1", "N2", "N3", "N4"})
        if (!closed.get(g.index_of(id), priority_col))
            return "missing transitive entry " + id + " -> N5";
    for (const std::string id : {"N", "N5"})
        if (closed.get(g.index_of(id), priority_col))
            return "unexpected transitive entry " + id + " -> N5";
    return "";
}

std::string criterion_closure_properties() {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; ++i) {
        const BoolMatrix m = testgen::random_matrix(rng, 12);
        const BoolMatrix closed = transitive_closure(m);
        if (!cellwise_subset(m, closed)) return "extensivity failed";
        if (transitive_closure(closed) != closed) return "idempotence failed";
        if (!is_transitive(closed)) return "closure not transitive";

        BoolMatrix grown = m;
        for (int extra = 0; extra < 4; ++extra)
            grown.set(testgen::pick(rng, grown.size()), testgen::pick(rng, grown.size()), true);
        if (!cellwise_subset(closed, transitive_closure(grown))) return "monotonicity failed";
    }
    for (int i = 0; i < 200; ++i) {
        const FactorGraph g = testgen::random_graph(rng, 12);
        const BoolMatrix closed = transitive_closure(adjacency_matrix(g));
        for (const Factor& f : g.factors())
            if (!row_as_set_matches(closed, g, f.id))
                return "closure row diverges from graph-search reachability";
    }
    return "";
}

std::string criterion_relation_sets() {
    const FactorGraph g = canonical_factor_graph();
    const std::set<std::string> risk_and_impact{"N", "N4"};
    for (const std::string id : {"N1", "N2", "N3"})
        if (relation_set(g, id) != risk_and_impact) return "R(" + id + ") != {N, N4}";
    if (relation_set(g, "N4") != std::set<std::string>{"N5"}) return "R(N4) != {N5}";
    if (!relation_set(g, "N").empty()) return "R(N) not empty";
    if (!relation_set(g, "N5").empty()) return "R(N5) not empty";
    return "";
}

std::string criterion_probability_bounds() {
    bool rejected = false;
    try {
        Probability::of(0);
    } catch (const std::domain_error&) {
        rejected = true;
    }
    if (!rejected || Probability::try_of(0)) return "probability 0 accepted";
    rejected = false;
    try {
        Probability::of(100);
    } catch (const std::domain_error&) {
        rejected = true;
    }
    if (!rejected || Probability::try_of(100)) return "probability 100 accepted";
    for (int x = 1; x <= 99; ++x)
        if (!Probability::try_of(x)) return "probability " + std::to_string(x) + " rejected";
    return "";
}

std::string criterion_ranking() {
    std::mt19937_64 rng(4096);
    for (int i = 0; i < 500; ++i) {
        RiskRegister reg = testgen::random_register(rng, 50);
        const auto ranked = prioritize(reg);

        std::vector<int> ranks;
        for (const auto& a : ranked) ranks.push_back(a.priority);
        std::sort(ranks.begin(), ranks.end());
        for (std::size_t k = 0; k < ranks.size(); ++k)
            if (ranks[k] != static_cast<int>(k) + 1) return "ranks are not a permutation";

        RiskRegister shuffled = reg;
        std::shuffle(shuffled.risks.begin(), shuffled.risks.end(), rng);
        if (prioritize(shuffled) != ranked) return "ranking depends on register order";

        if (reg.risks.empty()) continue;
        auto position = [](const std::vector<Assessment>& v, const std::string& id) {
            for (std::size_t k = 0; k < v.size(); ++k)
                if (v[k].risk_id == id) return k;
            return v.size();
        };
        const std::size_t target = testgen::pick(rng, reg.risks.size());
        Risk& risk = reg.risks[target];
        if (risk.frequency < FrequencyClass::Frequent && testgen::chance(rng, 0.5))
            risk.frequency = static_cast<FrequencyClass>(static_cast<int>(risk.frequency) + 1);
        else
            risk.probability += (100.0 - risk.probability) / 2.0;
        const auto after = prioritize(reg);

        const std::size_t before_pos = position(ranked, risk.id);
        const std::size_t after_pos = position(after, risk.id);
        if (after_pos > before_pos) return "raising a factor demoted the risk";
        for (const auto& other : ranked) {
            if (other.risk_id == risk.id) continue;
            const bool dominated_before = before_pos < position(ranked, other.risk_id);
            const bool dominated_after = after_pos < position(after, other.risk_id);
            if (dominated_before && !dominated_after)
                return "raising a factor lost a pairwise dominance";
        }
    }
    return "";
}

std::string criterion_mitigation_scenario() {
    const Risk timer = timer_risk();
    const double full = impact(timer).value;
    const double residual = residual_impact(timer).value;
    if (std::abs(residual - full / 3.0) > 1e-12)
        return "residual is not one third of the impact";

    RiskRegister reg;
    reg.project = "appliance";
    reg.risks.push_back(timer);
    std::mt19937_64 rng(8);
    reg.risks.push_back(testgen::random_risk(rng, "OTHER"));
    const double with_residual = project_success_rate(reg, true).analytic;
    const double without = project_success_rate(reg, false).analytic;
    return expect(with_residual >= without, "residual success fell below the unmitigated one");
}

std::string criterion_predictor_consistency() {
    std::mt19937_64 rng(16384);
    int within = 0;
    for (int i = 0; i < 20; ++i) {
        const RiskRegister reg = testgen::random_register(rng, 8, 1);
        const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
        const SuccessEstimate est = monte_carlo_success(reg, 100000, seed, false);
        const double sigma =
            std::sqrt(est.analytic * (1.0 - est.analytic) / 100000.0);
        if (std::abs(est.sampled->mean - est.analytic) <= 3.0 * sigma) ++within;
        if (monte_carlo_success(reg, 100000, seed, false) != est)
            return "identical seeds produced different estimates";
    }
    return expect(within >= 19, "only " + std::to_string(within) +
                                    "/20 runs landed within 3 binomial sigma");
}

std::string criterion_round_trips() {
    std::mt19937_64 rng(32768);
    for (int i = 0; i < 50; ++i) {
        const RiskRegister reg = testgen::random_register(rng, 20);
        if (parse_register(serialize_register(reg)) != reg)
            return "register JSON round-trip broke";
    }
    for (int i = 0; i < 100; ++i) {
        const BoolMatrix m = testgen::random_matrix(rng, 12, 0);
        if (parse_matrix(render_matrix(m)) != m) return "matrix text round-trip broke";
    }
    for (int i = 0; i < 50; ++i) {
        const auto assessments = prioritize(testgen::random_register(rng, 20));
        if (parse_assessment_csv(export_csv(assessments)) != assessments)
            return "assessment CSV round-trip broke";
    }
    return "";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria = {
        {"literal matrix golden reproduction", criterion_literal_matrix_golden},
        {"closure fills the priority column for N1..N4 only", criterion_closure_priority_column},
        {"closure property suite with reachability oracle", criterion_closure_properties},
        {"canonical relation sets", criterion_relation_sets},
        {"probability open-interval bounds", criterion_probability_bounds},
        {"ranking determinism and monotonicity", criterion_ranking},
        {"mitigation residual scenario", criterion_mitigation_scenario},
        {"predictor analytic/sampled consistency", criterion_predictor_consistency},
        {"register/matrix/CSV round-trips", criterion_round_trips},
    };

    bool all_passed = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        try {
            detail = criteria[i].second();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (detail.empty()) {
            std::printf("PASS  %zu/%zu  %s\n", i + 1, criteria.size(), criteria[i].first.c_str());
        } else {
            std::printf("FAIL  %zu/%zu  %s: %s\n", i + 1, criteria.size(),
                        criteria[i].first.c_str(), detail.c_str());
            all_passed = false;
        }
    }
    return all_passed ? 0 : 1;
}
