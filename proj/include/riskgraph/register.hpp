#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace riskgraph {

// Thrown for malformed input files: bad syntax, wrong value types,
// unknown labels. The message carries line/field context where known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class RiskKind {
    Technology,
    Cost,
    Schedule,
    Scope,
    People,
    Requirements,
    Estimation,
    Tools,
    Organizational,
    Custom,
};

struct RiskType {
    RiskKind kind = RiskKind::Custom;
    std::string label;             // set only for Custom
    double severity_weight = 1.0;  // (0, 1]

    std::string name() const;

    bool operator==(const RiskType&) const = default;
};

// Percent likelihood in the open interval (0, 100). 0 is a non-occurrence
// and 100 a certainty; neither is admissible as a risk.
class Probability {
public:
    static Probability of(double percent);  // throws std::domain_error out of bounds
    static std::optional<Probability> try_of(double percent) noexcept;

    double percent() const noexcept { return percent_; }
    double fraction() const noexcept { return percent_ / 100.0; }

    bool operator==(const Probability&) const = default;

private:
    explicit Probability(double p) noexcept : percent_(p) {}
    double percent_;
};

// Ordinal recurrence bands, least to most frequent.
enum class FrequencyClass {
    Unlikely = 1,
    Seldom = 2,
    Occasional = 3,
    Likely = 4,
    Frequent = 5,
};

std::string_view frequency_name(FrequencyClass f);
std::optional<FrequencyClass> frequency_from_name(std::string_view name);

// Observed occurrences per stated period, e.g. {7, "hour"}.
struct Rate {
    double count = 0.0;
    std::string period;

    bool operator==(const Rate&) const = default;
};

struct Mitigation {
    std::string description;
    FrequencyClass post_frequency = FrequencyClass::Unlikely;
    std::optional<Rate> post_rate;

    bool operator==(const Mitigation&) const = default;
};

struct Risk {
    std::string id;
    std::string title;
    RiskType type;
    double probability = 0.0;  // percent, admissible only inside (0, 100)
    FrequencyClass frequency = FrequencyClass::Unlikely;
    std::optional<Rate> observed_rate;
    std::optional<Mitigation> mitigation;
    std::optional<std::string> phase;

    bool operator==(const Risk&) const = default;
};

struct RiskRegister {
    std::string project;
    std::map<std::string, double> type_weights;  // type name -> weight, as written
    std::vector<Risk> risks;                     // file order

    bool operator==(const RiskRegister&) const = default;
};

enum class ViolationCode {
    EmptyId,
    DuplicateId,
    ProbabilityZero,
    ProbabilityCertainty,
    EmptyCustomLabel,
    DuplicateCustomLabel,
    SeverityWeightOutOfRange,
    NegativeObservedRate,
    NegativePostRate,
};

std::string_view violation_code_name(ViolationCode code);

struct Violation {
    ViolationCode code;
    std::string scope;  // risk id, or "register" for register-level findings
    std::string message;

    bool operator==(const Violation&) const = default;
};

struct ParseOptions {
    bool lenient = false;  // accept unknown keys
    bool validate = true;  // reject registers that carry violations
};

RiskRegister parse_register(std::string_view text, const ParseOptions& opts = {});
std::string serialize_register(const RiskRegister& reg);

// Per-risk invariant check; empty result means the risk is admissible.
std::vector<Violation> validate_risk(const Risk& risk);

// validate_risk over every entry plus register-level checks (duplicate ids,
// custom-label case collisions, type_weights bounds).
std::vector<Violation> validate_register(const RiskRegister& reg);

// Case-insensitive match against the built-in type names and their
// documented synonyms; anything else becomes Custom(label).
RiskType classify_type(std::string_view label);

// Re-derives every risk's severity_weight from reg.type_weights (default 1.0).
// Throws std::invalid_argument on conflicting or empty weight keys.
void resolve_type_weights(RiskRegister& reg);

struct MitigationOutcome {
    Risk risk;
    bool frequency_regressed = false;  // post class worse than the declared class
};

MitigationOutcome apply_mitigation(const Risk& risk, Mitigation plan);

}  // namespace riskgraph
