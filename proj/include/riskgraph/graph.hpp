#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace riskgraph {

enum class FactorKind { Independent, Dependent, Root };

std::string_view factor_kind_name(FactorKind k);
std::optional<FactorKind> factor_kind_from_name(std::string_view name);

struct Factor {
    std::string id;  // nonempty, no whitespace
    std::string name;
    FactorKind kind = FactorKind::Independent;

    bool operator==(const Factor&) const = default;
};

// Square boolean relation matrix over a fixed factor ordering. Rows are
// bit-packed so closure reduces to word-wide ORs.
class BoolMatrix {
public:
    BoolMatrix() = default;
    explicit BoolMatrix(std::vector<std::string> order);

    std::size_t size() const noexcept { return n_; }
    const std::vector<std::string>& order() const noexcept { return order_; }

    bool get(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, bool value);

    std::size_t count() const noexcept;  // number of true cells

    bool operator==(const BoolMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;  // 64-bit words per row
    std::vector<std::string> order_;
    std::vector<std::uint64_t> bits_;

    friend BoolMatrix transitive_closure(const BoolMatrix& m);
    friend bool is_transitive(const BoolMatrix& m);
};

// Immutable directed influence graph over named factors. Factor order is
// fixed at construction and defines matrix row/column order. No self-loops,
// no duplicate edges, every endpoint must exist.
class FactorGraph {
public:
    FactorGraph() = default;
    FactorGraph(std::vector<Factor> factors,
                const std::vector<std::pair<std::string, std::string>>& edges);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    const std::set<std::pair<std::size_t, std::size_t>>& edge_indices() const noexcept {
        return edges_;
    }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    bool has_factor(std::string_view id) const noexcept;
    std::size_t index_of(std::string_view id) const;  // throws std::invalid_argument
    bool has_edge(std::string_view from, std::string_view to) const;

    FactorGraph add_factor(Factor f) const;
    FactorGraph add_influence(std::string_view from, std::string_view to) const;

    bool operator==(const FactorGraph&) const = default;

private:
    std::vector<Factor> factors_;
    std::set<std::pair<std::size_t, std::size_t>> edges_;
};

// The built-in six-factor model: risk (N) as root, type/probability/frequency
// (N1..N3) as independent factors influencing both the risk and its impact
// (N4), impact driving priority (N5).
FactorGraph canonical_factor_graph();

// Out-neighbors of a factor. Throws std::invalid_argument on unknown ids.
std::set<std::string> relation_set(const FactorGraph& g, std::string_view factor_id);

BoolMatrix adjacency_matrix(const FactorGraph& g);

// Archival --paper-literal variant of the canonical model: the independent
// factors influence the risk node only, and the paired closure updates just
// the priority column. Kept byte-stable for comparison against the published
// form; the canonical graph above is the mathematically consistent model.
FactorGraph paper_literal_graph();
BoolMatrix paper_literal_matrix();
BoolMatrix paper_literal_closure_matrix();

// Graph-definition file: {"factors": [{"id", "name"?, "kind"?}...],
// "edges": [["N1", "N"], ...]}.
FactorGraph parse_factor_graph(std::string_view text, bool lenient = false);

}  // namespace riskgraph
