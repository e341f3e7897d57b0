#pragma once

#include "riskgraph/graph.hpp"

namespace riskgraph {

// Smallest transitive relation containing m: cell (i, j) true iff a directed
// path of length >= 1 runs from i to j. The diagonal stays false unless the
// relation contains a directed cycle.
BoolMatrix transitive_closure(const BoolMatrix& m);

// True iff m(i,j) and m(j,k) imply m(i,k) for all triples.
bool is_transitive(const BoolMatrix& m);

// Ids reachable from from_id by a path of length >= 1, computed by graph
// search. Independent of the matrix algorithm; serves as its cross-check.
std::set<std::string> reachable(const FactorGraph& g, std::string_view from_id);

}  // namespace riskgraph
