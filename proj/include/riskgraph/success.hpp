#pragma once

#include "riskgraph/register.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace riskgraph {

// Success model: risks materialize independently, each with probability
// equal to its impact score; the project succeeds when none materialize.
struct SuccessEstimate {
    double analytic = 1.0;  // product over risks of (1 - impact_i); 1 when empty
    bool residual_applied = false;

    struct Sampled {
        double mean = 0.0;  // successes / trials
        std::uint64_t trials = 0;
        std::uint64_t seed = 0;

        bool operator==(const Sampled&) const = default;
    };
    std::optional<Sampled> sampled;

    bool operator==(const SuccessEstimate&) const = default;
};

// Pseudo-random scheme behind monte_carlo_success, recorded in CLI output:
// mt19937_64 driving 53-bit uniform doubles in [0, 1).
inline constexpr std::string_view kSuccessGeneratorId = "mt19937_64/u53";

SuccessEstimate project_success_rate(const RiskRegister& reg, bool use_residual);

// Same seed, register, and trial count always reproduce the estimate
// bit-for-bit. Throws std::invalid_argument when trials is zero.
SuccessEstimate monte_carlo_success(const RiskRegister& reg, std::uint64_t trials,
                                    std::uint64_t seed, bool use_residual);

}  // namespace riskgraph
