#include "riskgraph/register.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

namespace riskgraph {

namespace {

using json = nlohmann::ordered_json;

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string fmt_number(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

[[noreturn]] void fail(const std::string& ctx, const std::string& msg) {
    throw ParseError(ctx.empty() ? msg : ctx + ": " + msg);
}

void check_keys(const json& obj, const std::string& ctx,
                std::initializer_list<std::string_view> allowed, bool lenient) {
    if (lenient) return;
    for (const auto& item : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
            fail(ctx, "unknown key \"" + item.key() + "\"");
    }
}

const json& require_key(const json& obj, const char* key, const std::string& ctx) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(ctx, std::string("missing key \"") + key + "\"");
    return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& ctx) {
    const json& v = require_key(obj, key, ctx);
    if (!v.is_string()) fail(ctx + "." + key, "expected a string");
    return v.get<std::string>();
}

double require_number(const json& obj, const char* key, const std::string& ctx) {
    const json& v = require_key(obj, key, ctx);
    if (!v.is_number()) fail(ctx + "." + key, "expected a number");
    return v.get<double>();
}

FrequencyClass require_frequency(const json& obj, const char* key, const std::string& ctx) {
    std::string label = require_string(obj, key, ctx);
    auto f = frequency_from_name(label);
    if (!f)
        fail(ctx + "." + key,
             "unknown frequency class \"" + label +
                 "\" (expected Unlikely, Seldom, Occasional, Likely, or Frequent)");
    return *f;
}

Rate parse_rate(const json& v, const std::string& ctx, bool lenient) {
    if (!v.is_object()) fail(ctx, "expected an object");
    check_keys(v, ctx, {"count", "period"}, lenient);
    Rate rate;
    rate.count = require_number(v, "count", ctx);
    rate.period = require_string(v, "period", ctx);
    return rate;
}

Mitigation parse_mitigation(const json& v, const std::string& ctx, bool lenient) {
    if (!v.is_object()) fail(ctx, "expected an object");
    check_keys(v, ctx, {"description", "post_frequency", "post_rate"}, lenient);
    Mitigation m;
    m.description = require_string(v, "description", ctx);
    m.post_frequency = require_frequency(v, "post_frequency", ctx);
    if (auto it = v.find("post_rate"); it != v.end())
        m.post_rate = parse_rate(*it, ctx + ".post_rate", lenient);
    return m;
}

Risk parse_risk(const json& v, const std::string& ctx, bool lenient) {
    if (!v.is_object()) fail(ctx, "expected an object");
    check_keys(v, ctx,
               {"id", "title", "type", "probability", "frequency", "observed_rate",
                "mitigation", "phase"},
               lenient);
    Risk r;
    r.id = require_string(v, "id", ctx);
    r.title = require_string(v, "title", ctx);
    std::string type_label = require_string(v, "type", ctx);
    if (trim(type_label).empty()) fail(ctx + ".type", "risk type label must be nonempty");
    r.type = classify_type(type_label);
    r.probability = require_number(v, "probability", ctx);
    r.frequency = require_frequency(v, "frequency", ctx);
    if (auto it = v.find("observed_rate"); it != v.end())
        r.observed_rate = parse_rate(*it, ctx + ".observed_rate", lenient);
    if (auto it = v.find("mitigation"); it != v.end())
        r.mitigation = parse_mitigation(*it, ctx + ".mitigation", lenient);
    if (auto it = v.find("phase"); it != v.end()) {
        if (!it->is_string()) fail(ctx + ".phase", "expected a string");
        r.phase = it->get<std::string>();
    }
    return r;
}

// Weight keys collapse to the classified type so "Schedule" and
// "schedule risk" address the same weight.
std::string weight_key(const RiskType& t) {
    if (t.kind == RiskKind::Custom) return "custom:" + ascii_lower(trim(t.label));
    return ascii_lower(t.name());
}

json rate_to_json(const Rate& r) {
    json v;
    v["count"] = r.count;
    v["period"] = r.period;
    return v;
}

}  // namespace

std::string RiskType::name() const {
    switch (kind) {
        case RiskKind::Technology: return "Technology";
        case RiskKind::Cost: return "Cost";
        case RiskKind::Schedule: return "Schedule";
        case RiskKind::Scope: return "Scope";
        case RiskKind::People: return "People";
        case RiskKind::Requirements: return "Requirements";
        case RiskKind::Estimation: return "Estimation";
        case RiskKind::Tools: return "Tools";
        case RiskKind::Organizational: return "Organizational";
        case RiskKind::Custom: return label;
    }
    return label;
}

Probability Probability::of(double percent) {
    auto p = try_of(percent);
    if (!p)
        throw std::domain_error("probability must satisfy 0 < x < 100 (got " +
                                fmt_number(percent) + ")");
    return *p;
}

std::optional<Probability> Probability::try_of(double percent) noexcept {
    if (!(percent > 0.0) || !(percent < 100.0)) return std::nullopt;
    return Probability(percent);
}

std::string_view frequency_name(FrequencyClass f) {
    switch (f) {
        case FrequencyClass::Unlikely: return "Unlikely";
        case FrequencyClass::Seldom: return "Seldom";
        case FrequencyClass::Occasional: return "Occasional";
        case FrequencyClass::Likely: return "Likely";
        case FrequencyClass::Frequent: return "Frequent";
    }
    return "Unlikely";
}

std::optional<FrequencyClass> frequency_from_name(std::string_view name) {
    const std::string lowered = ascii_lower(trim(name));
    if (lowered == "unlikely") return FrequencyClass::Unlikely;
    if (lowered == "seldom") return FrequencyClass::Seldom;
    if (lowered == "occasional") return FrequencyClass::Occasional;
    if (lowered == "likely") return FrequencyClass::Likely;
    if (lowered == "frequent") return FrequencyClass::Frequent;
    return std::nullopt;
}

std::string_view violation_code_name(ViolationCode code) {
    switch (code) {
        case ViolationCode::EmptyId: return "EmptyId";
        case ViolationCode::DuplicateId: return "DuplicateId";
        case ViolationCode::ProbabilityZero: return "ProbabilityZero";
        case ViolationCode::ProbabilityCertainty: return "ProbabilityCertainty";
        case ViolationCode::EmptyCustomLabel: return "EmptyCustomLabel";
        case ViolationCode::DuplicateCustomLabel: return "DuplicateCustomLabel";
        case ViolationCode::SeverityWeightOutOfRange: return "SeverityWeightOutOfRange";
        case ViolationCode::NegativeObservedRate: return "NegativeObservedRate";
        case ViolationCode::NegativePostRate: return "NegativePostRate";
    }
    return "Unknown";
}

RiskType classify_type(std::string_view label) {
    const std::string_view trimmed = trim(label);
    if (trimmed.empty()) throw std::invalid_argument("risk type label must be nonempty");

    struct Entry {
        std::string_view name;
        RiskKind kind;
    };
    // Bare names plus the three "<name> risk" synonyms the coarse-level
    // table writes with a Risk suffix.
    static constexpr std::array<Entry, 12> table = {{
        {"technology", RiskKind::Technology},
        {"technology risk", RiskKind::Technology},
        {"cost", RiskKind::Cost},
        {"cost risk", RiskKind::Cost},
        {"schedule", RiskKind::Schedule},
        {"schedule risk", RiskKind::Schedule},
        {"scope", RiskKind::Scope},
        {"people", RiskKind::People},
        {"requirements", RiskKind::Requirements},
        {"estimation", RiskKind::Estimation},
        {"tools", RiskKind::Tools},
        {"organizational", RiskKind::Organizational},
    }};

    const std::string lowered = ascii_lower(trimmed);
    for (const Entry& e : table) {
        if (lowered == e.name) return RiskType{e.kind, "", 1.0};
    }
    return RiskType{RiskKind::Custom, std::string(trimmed), 1.0};
}

std::vector<Violation> validate_risk(const Risk& risk) {
    std::vector<Violation> out;
    const std::string scope = risk.id.empty() ? "(unnamed risk)" : risk.id;
    auto add = [&](ViolationCode code, std::string msg) {
        out.push_back(Violation{code, scope, std::move(msg)});
    };

    if (risk.id.empty()) add(ViolationCode::EmptyId, "risk id must be nonempty");

    if (!(risk.probability > 0.0)) {
        add(ViolationCode::ProbabilityZero,
            "probability must satisfy 0 < x < 100 (got " + fmt_number(risk.probability) +
                "); non-occurrence is not a risk");
    } else if (!(risk.probability < 100.0)) {
        add(ViolationCode::ProbabilityCertainty,
            "probability must satisfy 0 < x < 100 (got " + fmt_number(risk.probability) +
                "); certainty is not a risk");
    }

    if (risk.type.kind == RiskKind::Custom && trim(risk.type.label).empty())
        add(ViolationCode::EmptyCustomLabel, "custom risk type label must be nonempty");

    if (!(risk.type.severity_weight > 0.0) || !(risk.type.severity_weight <= 1.0))
        add(ViolationCode::SeverityWeightOutOfRange,
            "severity weight must be in (0, 1] (got " + fmt_number(risk.type.severity_weight) +
                ")");

    if (risk.observed_rate && !(risk.observed_rate->count >= 0.0))
        add(ViolationCode::NegativeObservedRate,
            "observed rate must be nonnegative (got " + fmt_number(risk.observed_rate->count) +
                ")");

    if (risk.mitigation && risk.mitigation->post_rate &&
        !(risk.mitigation->post_rate->count >= 0.0))
        add(ViolationCode::NegativePostRate,
            "post-mitigation rate must be nonnegative (got " +
                fmt_number(risk.mitigation->post_rate->count) + ")");

    return out;
}

std::vector<Violation> validate_register(const RiskRegister& reg) {
    std::vector<Violation> out;

    std::set<std::string> seen_ids;
    std::set<std::string> dup_reported;
    std::map<std::string, std::string> custom_labels;  // lowered -> first spelling

    for (const Risk& risk : reg.risks) {
        auto per_risk = validate_risk(risk);
        out.insert(out.end(), per_risk.begin(), per_risk.end());

        if (!risk.id.empty() && !seen_ids.insert(risk.id).second &&
            dup_reported.insert(risk.id).second) {
            out.push_back(Violation{ViolationCode::DuplicateId, risk.id,
                                    "duplicate risk id \"" + risk.id + "\""});
        }

        if (risk.type.kind == RiskKind::Custom) {
            const std::string raw(trim(risk.type.label));
            if (raw.empty()) continue;
            auto [it, inserted] = custom_labels.emplace(ascii_lower(raw), raw);
            if (!inserted && it->second != raw) {
                out.push_back(Violation{
                    ViolationCode::DuplicateCustomLabel, risk.id,
                    "custom type \"" + raw + "\" collides with \"" + it->second +
                        "\" (labels are case-insensitively unique)"});
            }
        }
    }

    for (const auto& [name, weight] : reg.type_weights) {
        if (!(weight > 0.0) || !(weight <= 1.0)) {
            out.push_back(Violation{ViolationCode::SeverityWeightOutOfRange, "register",
                                    "type weight for \"" + name + "\" must be in (0, 1] (got " +
                                        fmt_number(weight) + ")"});
        }
    }

    return out;
}

void resolve_type_weights(RiskRegister& reg) {
    std::map<std::string, std::pair<std::string, double>> resolved;  // key -> (spelling, weight)
    for (const auto& [name, weight] : reg.type_weights) {
        if (trim(name).empty())
            throw std::invalid_argument("type_weights: type name must be nonempty");
        const std::string key = weight_key(classify_type(name));
        auto [it, inserted] = resolved.emplace(key, std::make_pair(name, weight));
        if (!inserted && it->second.second != weight)
            throw std::invalid_argument("type_weights: \"" + name + "\" and \"" +
                                        it->second.first +
                                        "\" name the same type with different weights");
    }
    for (Risk& risk : reg.risks) {
        auto it = resolved.find(weight_key(risk.type));
        risk.type.severity_weight = it == resolved.end() ? 1.0 : it->second.second;
    }
}

MitigationOutcome apply_mitigation(const Risk& risk, Mitigation plan) {
    MitigationOutcome outcome;
    outcome.frequency_regressed = plan.post_frequency > risk.frequency;
    outcome.risk = risk;
    outcome.risk.mitigation = std::move(plan);
    return outcome;
}

RiskRegister parse_register(std::string_view text, const ParseOptions& opts) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        const auto upto = std::min(byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
        fail("register", "JSON syntax error at line " + std::to_string(line) + ": " + e.what());
    }

    if (!doc.is_object()) fail("register", "top level must be an object");
    check_keys(doc, "register", {"project", "type_weights", "risks"}, opts.lenient);

    RiskRegister reg;
    reg.project = require_string(doc, "project", "register");

    if (auto it = doc.find("type_weights"); it != doc.end()) {
        if (!it->is_object()) fail("register.type_weights", "expected an object");
        for (const auto& item : it->items()) {
            if (!item.value().is_number())
                fail("register.type_weights." + item.key(), "expected a number");
            reg.type_weights[item.key()] = item.value().get<double>();
        }
    }

    const json& risks = require_key(doc, "risks", "register");
    if (!risks.is_array()) fail("register.risks", "expected an array");
    reg.risks.reserve(risks.size());
    for (std::size_t i = 0; i < risks.size(); ++i)
        reg.risks.push_back(parse_risk(risks[i], "risks[" + std::to_string(i) + "]", opts.lenient));

    try {
        resolve_type_weights(reg);
    } catch (const std::invalid_argument& e) {
        fail("register", e.what());
    }

    if (opts.validate) {
        const auto violations = validate_register(reg);
        if (!violations.empty()) {
            std::string msg = "register has " + std::to_string(violations.size()) +
                              " violation(s):";
            for (const Violation& v : violations)
                msg += "\n  " + v.scope + ": " + std::string(violation_code_name(v.code)) +
                       ": " + v.message;
            throw ParseError(msg);
        }
    }

    return reg;
}

std::string serialize_register(const RiskRegister& reg) {
    json doc;
    doc["project"] = reg.project;
    if (!reg.type_weights.empty()) {
        json weights;
        for (const auto& [name, weight] : reg.type_weights) weights[name] = weight;
        doc["type_weights"] = std::move(weights);
    }
    json risks = json::array();
    for (const Risk& r : reg.risks) {
        json v;
        v["id"] = r.id;
        v["title"] = r.title;
        v["type"] = r.type.name();
        v["probability"] = r.probability;
        v["frequency"] = std::string(frequency_name(r.frequency));
        if (r.observed_rate) v["observed_rate"] = rate_to_json(*r.observed_rate);
        if (r.mitigation) {
            json m;
            m["description"] = r.mitigation->description;
            m["post_frequency"] = std::string(frequency_name(r.mitigation->post_frequency));
            if (r.mitigation->post_rate) m["post_rate"] = rate_to_json(*r.mitigation->post_rate);
            v["mitigation"] = std::move(m);
        }
        if (r.phase) v["phase"] = *r.phase;
        risks.push_back(std::move(v));
    }
    doc["risks"] = std::move(risks);
    return doc.dump(2) + "\n";
}

}  // namespace riskgraph
