#pragma once

#include "riskgraph/register.hpp"

#include <vector>

namespace riskgraph {

// Midpoints of five equal likelihood bands. Only the strict ordering is
// load-bearing: priorities are invariant under any strictly increasing
// reweighting applied uniformly.
double frequency_weight(FrequencyClass f);

struct ImpactScore {
    double value = 0.0;  // type_weight * probability_fraction * frequency_weight
    double type_weight = 0.0;
    double probability_fraction = 0.0;
    double frequency_weight = 0.0;

    bool operator==(const ImpactScore&) const = default;
};

struct Assessment {
    std::string risk_id;
    ImpactScore impact;
    std::optional<ImpactScore> residual;  // post-mitigation frequency substituted
    int priority = 0;                     // 1 = highest

    bool operator==(const Assessment&) const = default;
};

// Impact from exactly the three independent factors: type weight,
// probability fraction, frequency weight. Throws std::invalid_argument
// when the risk fails validate_risk.
ImpactScore impact(const Risk& risk);

// Impact recomputed with the mitigation's post frequency; type and
// probability unchanged. Throws when no mitigation is present.
ImpactScore residual_impact(const Risk& risk);

// Assessments sorted by impact descending, rank 1..n, ties broken by
// ascending risk id. With use_residual, risks carrying a mitigation rank
// on their residual impact instead.
std::vector<Assessment> prioritize(const RiskRegister& reg, bool use_residual = false);

}  // namespace riskgraph
