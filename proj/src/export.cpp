#include "riskgraph/export.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace riskgraph {

namespace {

// Shortest representation that round-trips through from_chars.
std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string pad_right(std::string_view s, std::size_t width) {
    std::string out(s);
    if (out.size() < width) out.append(width - out.size(), ' ');
    return out;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ') ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

double parse_double(std::string_view s, const std::string& ctx) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(ctx + ": expected a number, got \"" + std::string(s) + "\"");
    return v;
}

// One RFC 4180 record; returns the fields and advances pos past the record.
std::vector<std::string> csv_record(std::string_view text, std::size_t& pos) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    while (pos < text.size()) {
        char c = text[pos];
        if (quoted) {
            if (c == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    field += '"';
                    pos += 2;
                } else {
                    quoted = false;
                    ++pos;
                }
            } else {
                field += c;
                ++pos;
            }
            continue;
        }
        if (c == '"' && field.empty()) {
            quoted = true;
            ++pos;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
            ++pos;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') ++pos;
            ++pos;
            break;
        } else {
            field += c;
            ++pos;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

const Risk& risk_by_id(const RiskRegister& reg, const std::string& id) {
    for (const Risk& r : reg.risks)
        if (r.id == id) return r;
    throw std::invalid_argument("assessment refers to unknown risk id \"" + id + "\"");
}

}  // namespace

std::string to_dot(const FactorGraph& g, const BoolMatrix* highlight_closure) {
    if (highlight_closure) {
        std::vector<std::string> ids;
        ids.reserve(g.factors().size());
        for (const Factor& f : g.factors()) ids.push_back(f.id);
        if (highlight_closure->order() != ids)
            throw std::invalid_argument("closure matrix order does not match the graph");
    }

    std::string out = "digraph {\n";
    for (const Factor& f : g.factors())
        out += "  " + dot_quote(f.id) + " [label=" + dot_quote(f.name) + "];\n";
    for (const auto& [a, b] : g.edge_indices())
        out += "  " + dot_quote(g.factors()[a].id) + " -> " + dot_quote(g.factors()[b].id) +
               ";\n";
    if (highlight_closure) {
        const std::size_t n = g.factors().size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (!highlight_closure->get(i, j) || g.edge_indices().count({i, j})) continue;
                out += "  " + dot_quote(g.factors()[i].id) + " -> " +
                       dot_quote(g.factors()[j].id) + " [style=dashed];\n";
            }
        }
    }
    out += "}\n";
    return out;
}

std::string render_matrix(const BoolMatrix& m) {
    std::size_t width = 0;
    for (const std::string& id : m.order()) width = std::max(width, id.size());

    std::string out = pad_right("", width);
    for (const std::string& id : m.order()) out += " " + id;
    out += '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += pad_right(m.order()[i], width);
        for (std::size_t j = 0; j < m.size(); ++j) out += m.get(i, j) ? " 1" : " 0";
        out += '\n';
    }
    return out;
}

BoolMatrix parse_matrix(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError("matrix: missing header line");

    const auto order = split_tokens(lines[0]);
    const std::size_t n = order.size();
    if (lines.size() != n + 1)
        throw ParseError("matrix: expected " + std::to_string(n) + " row(s), got " +
                         std::to_string(lines.size() - 1));

    BoolMatrix m(order);
    for (std::size_t i = 0; i < n; ++i) {
        const auto tokens = split_tokens(lines[i + 1]);
        const std::string ctx = "matrix row " + std::to_string(i + 1);
        if (tokens.size() != n + 1)
            throw ParseError(ctx + ": expected a label and " + std::to_string(n) + " cell(s)");
        if (tokens[0] != order[i])
            throw ParseError(ctx + ": label \"" + tokens[0] + "\" does not match column \"" +
                             order[i] + "\"");
        for (std::size_t j = 0; j < n; ++j) {
            if (tokens[j + 1] == "1")
                m.set(i, j, true);
            else if (tokens[j + 1] != "0")
                throw ParseError(ctx + ": cell must be 0 or 1, got \"" + tokens[j + 1] + "\"");
        }
    }
    return m;
}

std::string assessment_table(const RiskRegister& reg,
                             const std::vector<Assessment>& assessments) {
    std::vector<std::string> register_ids, assessed_ids;
    for (const Risk& r : reg.risks) register_ids.push_back(r.id);
    for (const Assessment& a : assessments) assessed_ids.push_back(a.risk_id);
    std::sort(register_ids.begin(), register_ids.end());
    std::sort(assessed_ids.begin(), assessed_ids.end());
    if (register_ids != assessed_ids)
        throw std::invalid_argument("assessments do not correspond 1:1 to register risks");

    using Row = std::array<std::string, 7>;
    std::vector<Row> rows;
    rows.reserve(assessments.size() + 1);
    rows.push_back({"rank", "id", "type", "probability", "frequency", "impact", "residual"});
    for (const Assessment& a : assessments) {
        const Risk& risk = risk_by_id(reg, a.risk_id);
        rows.push_back({std::to_string(a.priority), a.risk_id, risk.type.name(),
                        shortest(risk.probability) + "%",
                        std::string(frequency_name(risk.frequency)), fixed6(a.impact.value),
                        a.residual ? fixed6(a.residual->value) : "-"});
    }

    std::array<std::size_t, 7> widths{};
    for (const Row& r : rows)
        for (std::size_t c = 0; c < widths.size(); ++c)
            widths[c] = std::max(widths[c], r[c].size());

    std::string out;
    for (const Row& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < widths.size(); ++c) {
            if (c) line += "  ";
            line += pad_right(r[c], widths[c]);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string report(const RiskRegister& reg, const std::vector<Assessment>& assessments,
                   const SuccessEstimate& estimate) {
    std::string out = "Risk report: " + reg.project + "\n";
    if (reg.risks.empty()) {
        out += "no risks\n";
    } else {
        out += assessment_table(reg, assessments);
        out += "risks assessed: " + std::to_string(reg.risks.size()) + "\n";
    }
    out += "success estimate (analytic, independent risks";
    if (estimate.residual_applied) out += ", post-mitigation frequencies";
    out += "): " + fixed6(estimate.analytic) + "\n";
    if (estimate.sampled) {
        out += "success estimate (sampled, " + std::string(kSuccessGeneratorId) + ", trials " +
               std::to_string(estimate.sampled->trials) + ", seed " +
               std::to_string(estimate.sampled->seed) + "): " + fixed6(estimate.sampled->mean) +
               "\n";
    }
    return out;
}

std::string export_csv(const std::vector<Assessment>& assessments) {
    std::string out =
        "id,impact,type_weight,probability_fraction,frequency_weight,"
        "residual_impact,residual_frequency_weight,priority\n";
    for (const Assessment& a : assessments) {
        out += csv_field(a.risk_id);
        out += ',' + shortest(a.impact.value);
        out += ',' + shortest(a.impact.type_weight);
        out += ',' + shortest(a.impact.probability_fraction);
        out += ',' + shortest(a.impact.frequency_weight);
        out += ',';
        out += a.residual ? shortest(a.residual->value) : "";
        out += ',';
        out += a.residual ? shortest(a.residual->frequency_weight) : "";
        out += ',' + std::to_string(a.priority) + "\n";
    }
    return out;
}

std::vector<Assessment> parse_assessment_csv(std::string_view text) {
    static constexpr std::string_view kHeader =
        "id,impact,type_weight,probability_fraction,frequency_weight,"
        "residual_impact,residual_frequency_weight,priority";

    std::size_t pos = 0;
    const auto header = csv_record(text, pos);
    {
        std::string joined;
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) joined += ',';
            joined += header[i];
        }
        if (joined != kHeader) throw ParseError("csv: unexpected header \"" + joined + "\"");
    }

    std::vector<Assessment> out;
    std::size_t row = 1;
    while (pos < text.size()) {
        const auto fields = csv_record(text, pos);
        if (fields.size() == 1 && fields[0].empty()) continue;  // trailing newline
        const std::string ctx = "csv row " + std::to_string(row++);
        if (fields.size() != 8) throw ParseError(ctx + ": expected 8 fields");

        Assessment a;
        a.risk_id = fields[0];
        a.impact.value = parse_double(fields[1], ctx);
        a.impact.type_weight = parse_double(fields[2], ctx);
        a.impact.probability_fraction = parse_double(fields[3], ctx);
        a.impact.frequency_weight = parse_double(fields[4], ctx);
        if (fields[5].empty() != fields[6].empty())
            throw ParseError(ctx + ": residual fields must be both present or both empty");
        if (!fields[5].empty()) {
            ImpactScore residual;
            residual.value = parse_double(fields[5], ctx);
            residual.type_weight = a.impact.type_weight;
            residual.probability_fraction = a.impact.probability_fraction;
            residual.frequency_weight = parse_double(fields[6], ctx);
            a.residual = residual;
        }
        const std::string& rank = fields[7];
        int priority = 0;
        auto [ptr, ec] = std::from_chars(rank.data(), rank.data() + rank.size(), priority);
        if (ec != std::errc{} || ptr != rank.data() + rank.size())
            throw ParseError(ctx + ": expected an integer priority");
        a.priority = priority;
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace riskgraph
