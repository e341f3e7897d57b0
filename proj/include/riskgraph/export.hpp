#pragma once

#include "riskgraph/assessment.hpp"
#include "riskgraph/graph.hpp"
#include "riskgraph/register.hpp"
#include "riskgraph/success.hpp"

#include <string>
#include <vector>

namespace riskgraph {

// DOT digraph with one node per factor (label = display name) and one solid
// edge per graph edge, both emitted in factor order. Pairs present only in
// highlight_closure render dashed. Throws std::invalid_argument when the
// closure's order does not match the graph.
std::string to_dot(const FactorGraph& g, const BoolMatrix* highlight_closure = nullptr);

// First line is the column ids; each following line is a row id and its
// 0/1 cells, single-space separated, labels padded to a common width.
std::string render_matrix(const BoolMatrix& m);
BoolMatrix parse_matrix(std::string_view text);

std::string assessment_table(const RiskRegister& reg,
                             const std::vector<Assessment>& assessments);

// Assessment table plus the success-estimate footer.
std::string report(const RiskRegister& reg, const std::vector<Assessment>& assessments,
                   const SuccessEstimate& estimate);

// Columns: id,impact,type_weight,probability_fraction,frequency_weight,
// residual_impact,residual_frequency_weight,priority. RFC 4180 quoting;
// numbers use shortest round-trip form.
std::string export_csv(const std::vector<Assessment>& assessments);
std::vector<Assessment> parse_assessment_csv(std::string_view text);

}  // namespace riskgraph
