#include "riskgraph/graph.hpp"

#include "riskgraph/register.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include <json.hpp>

namespace riskgraph {

namespace {

using json = nlohmann::ordered_json;

void check_factor_id(const std::string& id) {
    if (id.empty()) throw std::invalid_argument("factor id must be nonempty");
    for (char c : id) {
        if (std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument("factor id \"" + id + "\" must not contain whitespace");
    }
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

std::string_view factor_kind_name(FactorKind k) {
    switch (k) {
        case FactorKind::Independent: return "independent";
        case FactorKind::Dependent: return "dependent";
        case FactorKind::Root: return "root";
    }
    return "independent";
}

std::optional<FactorKind> factor_kind_from_name(std::string_view name) {
    const std::string lowered = ascii_lower(name);
    if (lowered == "independent") return FactorKind::Independent;
    if (lowered == "dependent") return FactorKind::Dependent;
    if (lowered == "root") return FactorKind::Root;
    return std::nullopt;
}

BoolMatrix::BoolMatrix(std::vector<std::string> order)
    : n_(order.size()),
      words_((order.size() + 63) / 64),
      order_(std::move(order)),
      bits_(n_ * words_, 0) {}

bool BoolMatrix::get(std::size_t row, std::size_t col) const {
    if (row >= n_ || col >= n_) throw std::out_of_range("matrix cell out of range");
    return (bits_[row * words_ + col / 64] >> (col % 64)) & 1u;
}

void BoolMatrix::set(std::size_t row, std::size_t col, bool value) {
    if (row >= n_ || col >= n_) throw std::out_of_range("matrix cell out of range");
    const std::uint64_t mask = std::uint64_t{1} << (col % 64);
    if (value)
        bits_[row * words_ + col / 64] |= mask;
    else
        bits_[row * words_ + col / 64] &= ~mask;
}

std::size_t BoolMatrix::count() const noexcept {
    std::size_t total = 0;
    for (std::uint64_t word : bits_) total += static_cast<std::size_t>(std::popcount(word));
    return total;
}

FactorGraph::FactorGraph(std::vector<Factor> factors,
                         const std::vector<std::pair<std::string, std::string>>& edges)
    : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        check_factor_id(factors_[i].id);
        for (std::size_t j = i + 1; j < factors_.size(); ++j) {
            if (factors_[i].id == factors_[j].id)
                throw std::invalid_argument("duplicate factor id \"" + factors_[i].id + "\"");
        }
    }
    for (const auto& [from, to] : edges) {
        const std::size_t a = index_of(from);
        const std::size_t b = index_of(to);
        if (a == b) throw std::invalid_argument("self-loop on factor \"" + from + "\"");
        edges_.emplace(a, b);
    }
}

bool FactorGraph::has_factor(std::string_view id) const noexcept {
    return std::any_of(factors_.begin(), factors_.end(),
                       [&](const Factor& f) { return f.id == id; });
}

std::size_t FactorGraph::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].id == id) return i;
    throw std::invalid_argument("unknown factor id \"" + std::string(id) + "\"");
}

bool FactorGraph::has_edge(std::string_view from, std::string_view to) const {
    return edges_.count({index_of(from), index_of(to)}) > 0;
}

FactorGraph FactorGraph::add_factor(Factor f) const {
    check_factor_id(f.id);
    if (has_factor(f.id)) throw std::invalid_argument("duplicate factor id \"" + f.id + "\"");
    FactorGraph out = *this;
    out.factors_.push_back(std::move(f));
    return out;
}

FactorGraph FactorGraph::add_influence(std::string_view from, std::string_view to) const {
    const std::size_t a = index_of(from);
    const std::size_t b = index_of(to);
    if (a == b) throw std::invalid_argument("self-loop on factor \"" + std::string(from) + "\"");
    FactorGraph out = *this;
    out.edges_.emplace(a, b);
    return out;
}

FactorGraph canonical_factor_graph() {
    std::vector<Factor> factors = {
        {"N", "Risk", FactorKind::Root},
        {"N1", "Risk Type", FactorKind::Independent},
        {"N2", "Risk Probability", FactorKind::Independent},
        {"N3", "Risk Frequency", FactorKind::Independent},
        {"N4", "Risk Impact", FactorKind::Dependent},
        {"N5", "Risk Priority", FactorKind::Dependent},
    };
    const std::vector<std::pair<std::string, std::string>> edges = {
        {"N1", "N"}, {"N1", "N4"}, {"N2", "N"}, {"N2", "N4"},
        {"N3", "N"}, {"N3", "N4"}, {"N4", "N5"},
    };
    return FactorGraph(std::move(factors), edges);
}

std::set<std::string> relation_set(const FactorGraph& g, std::string_view factor_id) {
    const std::size_t from = g.index_of(factor_id);
    std::set<std::string> out;
    for (const auto& [a, b] : g.edge_indices())
        if (a == from) out.insert(g.factors()[b].id);
    return out;
}

BoolMatrix adjacency_matrix(const FactorGraph& g) {
    std::vector<std::string> order;
    order.reserve(g.factors().size());
    for (const Factor& f : g.factors()) order.push_back(f.id);
    BoolMatrix m(std::move(order));
    for (const auto& [a, b] : g.edge_indices()) m.set(a, b, true);
    return m;
}

FactorGraph paper_literal_graph() {
    std::vector<Factor> factors = canonical_factor_graph().factors();
    const std::vector<std::pair<std::string, std::string>> edges = {
        {"N1", "N"}, {"N2", "N"}, {"N3", "N"}, {"N4", "N5"},
    };
    return FactorGraph(std::move(factors), edges);
}

BoolMatrix paper_literal_matrix() { return adjacency_matrix(paper_literal_graph()); }

BoolMatrix paper_literal_closure_matrix() {
    BoolMatrix m = paper_literal_matrix();
    // The published closure form adds only the priority column entries for
    // the three independent factors.
    for (std::size_t row : {1u, 2u, 3u}) m.set(row, 5, true);
    return m;
}

FactorGraph parse_factor_graph(std::string_view text, bool lenient) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("graph: JSON syntax error: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("graph: top level must be an object");

    if (!lenient) {
        for (const auto& item : doc.items()) {
            if (item.key() != "factors" && item.key() != "edges")
                throw ParseError("graph: unknown key \"" + item.key() + "\"");
        }
    }

    auto factors_it = doc.find("factors");
    if (factors_it == doc.end() || !factors_it->is_array())
        throw ParseError("graph: missing \"factors\" array");

    std::vector<Factor> factors;
    for (std::size_t i = 0; i < factors_it->size(); ++i) {
        const json& v = (*factors_it)[i];
        const std::string ctx = "graph.factors[" + std::to_string(i) + "]";
        if (!v.is_object()) throw ParseError(ctx + ": expected an object");
        if (!lenient) {
            for (const auto& item : v.items()) {
                if (item.key() != "id" && item.key() != "name" && item.key() != "kind")
                    throw ParseError(ctx + ": unknown key \"" + item.key() + "\"");
            }
        }
        Factor f;
        auto id_it = v.find("id");
        if (id_it == v.end() || !id_it->is_string())
            throw ParseError(ctx + ": missing string key \"id\"");
        f.id = id_it->get<std::string>();
        f.name = f.id;
        if (auto it = v.find("name"); it != v.end()) {
            if (!it->is_string()) throw ParseError(ctx + ".name: expected a string");
            f.name = it->get<std::string>();
        }
        if (auto it = v.find("kind"); it != v.end()) {
            if (!it->is_string()) throw ParseError(ctx + ".kind: expected a string");
            auto kind = factor_kind_from_name(it->get<std::string>());
            if (!kind)
                throw ParseError(ctx + ".kind: expected independent, dependent, or root");
            f.kind = *kind;
        }
        factors.push_back(std::move(f));
    }

    std::vector<std::pair<std::string, std::string>> edges;
    if (auto it = doc.find("edges"); it != doc.end()) {
        if (!it->is_array()) throw ParseError("graph.edges: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& e = (*it)[i];
            const std::string ctx = "graph.edges[" + std::to_string(i) + "]";
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError(ctx + ": expected [\"from\", \"to\"]");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }

    try {
        return FactorGraph(std::move(factors), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
}

}  // namespace riskgraph
