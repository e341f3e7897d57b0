#include "riskgraph/assessment.hpp"

#include <algorithm>
#include <stdexcept>

namespace riskgraph {

namespace {

void require_valid(const Risk& risk) {
    const auto violations = validate_risk(risk);
    if (!violations.empty())
        throw std::invalid_argument("invalid risk \"" + risk.id + "\": " +
                                    violations.front().message);
}

ImpactScore score_with_frequency(const Risk& risk, FrequencyClass f) {
    ImpactScore s;
    s.type_weight = risk.type.severity_weight;
    s.probability_fraction = Probability::of(risk.probability).fraction();
    s.frequency_weight = frequency_weight(f);
    s.value = s.type_weight * s.probability_fraction * s.frequency_weight;
    return s;
}

}  // namespace

double frequency_weight(FrequencyClass f) {
    switch (f) {
        case FrequencyClass::Unlikely: return 0.1;
        case FrequencyClass::Seldom: return 0.3;
        case FrequencyClass::Occasional: return 0.5;
        case FrequencyClass::Likely: return 0.7;
        case FrequencyClass::Frequent: return 0.9;
    }
    return 0.1;
}

ImpactScore impact(const Risk& risk) {
    require_valid(risk);
    return score_with_frequency(risk, risk.frequency);
}

ImpactScore residual_impact(const Risk& risk) {
    require_valid(risk);
    if (!risk.mitigation)
        throw std::invalid_argument("risk \"" + risk.id + "\" has no mitigation");
    return score_with_frequency(risk, risk.mitigation->post_frequency);
}

std::vector<Assessment> prioritize(const RiskRegister& reg, bool use_residual) {
    const auto violations = validate_register(reg);
    if (!violations.empty())
        throw std::invalid_argument("register not admissible for assessment: " +
                                    violations.front().scope + ": " +
                                    violations.front().message);

    std::vector<Assessment> out;
    out.reserve(reg.risks.size());
    for (const Risk& risk : reg.risks) {
        Assessment a;
        a.risk_id = risk.id;
        a.impact = impact(risk);
        if (risk.mitigation) a.residual = residual_impact(risk);
        out.push_back(std::move(a));
    }

    auto ranking_value = [&](const Assessment& a) {
        return use_residual && a.residual ? a.residual->value : a.impact.value;
    };
    std::sort(out.begin(), out.end(), [&](const Assessment& a, const Assessment& b) {
        const double va = ranking_value(a);
        const double vb = ranking_value(b);
        if (va != vb) return va > vb;
        return a.risk_id < b.risk_id;
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].priority = static_cast<int>(i) + 1;
    return out;
}

}  // namespace riskgraph
