#include "riskgraph/success.hpp"

#include "riskgraph/assessment.hpp"

#include <random>
#include <stdexcept>

namespace riskgraph {

namespace {

double effective_impact(const Risk& risk, bool use_residual) {
    if (use_residual && risk.mitigation) return residual_impact(risk).value;
    return impact(risk).value;
}

void require_valid(const RiskRegister& reg) {
    const auto violations = validate_register(reg);
    if (!violations.empty())
        throw std::invalid_argument("register not admissible for prediction: " +
                                    violations.front().scope + ": " +
                                    violations.front().message);
}

// 53-bit uniform in [0, 1); kept explicit so the stream is identical on
// every standard library.
double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SuccessEstimate project_success_rate(const RiskRegister& reg, bool use_residual) {
    require_valid(reg);
    SuccessEstimate est;
    est.residual_applied = use_residual;
    est.analytic = 1.0;
    for (const Risk& risk : reg.risks) est.analytic *= 1.0 - effective_impact(risk, use_residual);
    return est;
}

SuccessEstimate monte_carlo_success(const RiskRegister& reg, std::uint64_t trials,
                                    std::uint64_t seed, bool use_residual) {
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");
    SuccessEstimate est = project_success_rate(reg, use_residual);

    std::vector<double> impacts;
    impacts.reserve(reg.risks.size());
    for (const Risk& risk : reg.risks) impacts.push_back(effective_impact(risk, use_residual));

    std::mt19937_64 rng(seed);
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        bool materialized = false;
        // Every risk is drawn each trial so the stream depends only on
        // (seed, trial index, risk index).
        for (double e : impacts) materialized |= unit_draw(rng) < e;
        if (!materialized) ++successes;
    }

    est.sampled = SuccessEstimate::Sampled{
        static_cast<double>(successes) / static_cast<double>(trials), trials, seed};
    return est;
}

}  // namespace riskgraph
