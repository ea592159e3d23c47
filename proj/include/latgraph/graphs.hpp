#pragma once

#include "latgraph/exactq.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latgraph {

/// Undirected simple graph. Vertex order is fixed by the constructor that
/// produced it, so adjacency matrices (and hence lattice bases) are
/// reproducible.
class Graph {
public:
    Graph() = default;
    /// Throws std::invalid_argument unless `adjacency` is a symmetric 0/1
    /// n x n matrix with zero diagonal.
    Graph(std::size_t n, std::vector<std::uint8_t> adjacency, std::string label);

    std::size_t order() const { return n_; }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }
    std::size_t degree(std::size_t v) const;
    std::size_t edge_count() const;
    std::vector<std::size_t> neighbors(std::size_t v) const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    const std::string& label() const { return label_; }
    RationalMatrix adjacency_matrix() const;

    /// Same vertex set and edges; labels are ignored.
    bool same_edges(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> adj_;
    std::string label_;
};

using Permutation = std::vector<std::size_t>;

struct PermutationGroup {
    std::size_t degree = 0;
    std::vector<Permutation> generators;

    /// Orbit of `point` under the generated group, sorted.
    std::vector<std::size_t> orbit(std::size_t point) const;
};

// Constructors. Parameter errors throw std::invalid_argument.
Graph empty_graph(std::size_t n);
Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph hamming(std::size_t d, std::size_t q);
Graph kneser(std::size_t n, std::size_t k);
Graph johnson(std::size_t n, std::size_t k);
Graph petersen();
Graph line_graph(const Graph& g);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, std::size_t copies);
Graph cartesian(const Graph& a, const Graph& b);
Graph direct(const Graph& a, const Graph& b);
Graph strong(const Graph& a, const Graph& b);
Graph lexicographic(const Graph& a, const Graph& b);
Graph folded_cube(std::size_t d);
/// The 5-regular Clebsch graph on 16 vertices (the folded 5-cube).
Graph clebsch();
Graph shrikhande();
Graph gosset();
Graph schlafli();
Graph relabeled(const Graph& g, std::string label);
Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices, std::string label);

std::optional<std::size_t> is_regular(const Graph& g);
bool is_connected(const Graph& g);

struct SrgParameters {
    std::size_t k = 0, lambda = 0, mu = 0;
    bool operator==(const SrgParameters&) const = default;
};
std::optional<SrgParameters> is_strongly_regular(const Graph& g);

struct IntersectionArray {
    std::vector<std::size_t> b;  // b_0 .. b_{d-1}
    std::vector<std::size_t> c;  // c_1 .. c_d
    bool operator==(const IntersectionArray&) const = default;
};
/// Throws std::invalid_argument for disconnected input.
std::optional<IntersectionArray> is_distance_regular(const Graph& g);
std::string to_string(const IntersectionArray& a);

enum class TransitivityStatus { witness, refuted, budget_exhausted };

struct TransitivityResult {
    TransitivityStatus status = TransitivityStatus::refuted;
    PermutationGroup group;  // generators found so far (single orbit when status == witness)
    std::size_t nodes_used = 0;
};

/// Backtracking automorphism search: for every vertex outside the current
/// orbit of 0, look for an automorphism sending 0 there.
TransitivityResult vertex_transitivity_witness(const Graph& g, std::size_t budget = 2'000'000);

bool is_automorphism(const Graph& g, const Permutation& p);

std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text, std::string label = "graph6");

}  // namespace latgraph
