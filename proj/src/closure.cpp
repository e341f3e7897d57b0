#include "riskgraph/closure.hpp"

#include <deque>

namespace riskgraph {

BoolMatrix transitive_closure(const BoolMatrix& m) {
    BoolMatrix r = m;
    const std::size_t n = r.n_;
    const std::size_t w = r.words_;
    // Warshall's boolean specialization, k outermost: once r(i,k) holds,
    // everything reachable through k joins row i in one word-wide OR.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!r.get(i, k)) continue;
            for (std::size_t b = 0; b < w; ++b) r.bits_[i * w + b] |= r.bits_[k * w + b];
        }
    }
    return r;
}

bool is_transitive(const BoolMatrix& m) {
    const std::size_t n = m.n_;
    const std::size_t w = m.words_;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (!m.get(i, k)) continue;
            // m(i,k) holds, so row k must be a subset of row i.
            for (std::size_t b = 0; b < w; ++b) {
                if (m.bits_[k * w + b] & ~m.bits_[i * w + b]) return false;
            }
        }
    }
    return true;
}

std::set<std::string> reachable(const FactorGraph& g, std::string_view from_id) {
    const std::size_t start = g.index_of(from_id);
    const std::size_t n = g.factors().size();

    std::vector<std::vector<std::size_t>> adjacency(n);
    for (const auto& [a, b] : g.edge_indices()) adjacency[a].push_back(b);

    std::vector<bool> visited(n, false);
    std::deque<std::size_t> frontier(adjacency[start].begin(), adjacency[start].end());
    std::set<std::string> out;
    while (!frontier.empty()) {
        const std::size_t v = frontier.front();
        frontier.pop_front();
        if (visited[v]) continue;
        visited[v] = true;
        out.insert(g.factors()[v].id);
        frontier.insert(frontier.end(), adjacency[v].begin(), adjacency[v].end());
    }
    return out;
}

}  // namespace riskgraph
