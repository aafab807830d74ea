#pragma once

// Simple undirected graphs, rooted graphs and the star/comb products.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace cyclic_spectra {

inline constexpr std::size_t kMaxVertices = 20000;

using Edge = std::pair<std::size_t, std::size_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

class Graph {
public:
    Graph() = default;
    /// Edges are normalized to i < j, sorted and deduplicated. Loops and
    /// out-of-range endpoints throw std::invalid_argument.
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_edge(std::size_t i, std::size_t j) const;
    std::vector<std::size_t> degrees() const;
    std::vector<std::vector<std::size_t>> neighbors() const;

    /// Vertex v goes to perm[v].
    Graph relabeled(const std::vector<std::size_t>& perm) const;
    /// Induced subgraph on `keep` (in the given order).
    Graph induced(const std::vector<std::size_t>& keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

struct RootedGraph {
    Graph graph;
    std::size_t root = 0;

    RootedGraph() = default;
    RootedGraph(Graph g, std::size_t r);

    std::size_t n() const { return graph.n(); }
    friend bool operator==(const RootedGraph&, const RootedGraph&) = default;
};

IntMatrix adjacency(const Graph& g);
Graph delete_root(const RootedGraph& g);

/// Root of g1 glued to root of g2. g1 keeps its labels, g2's non-root vertices follow in order.
RootedGraph star_product(const RootedGraph& g1, const RootedGraph& g2);
/// A copy of g2 glued at every vertex of g1; vertex (v1, v2) is v1 * n2 + v2.
RootedGraph comb_product(const RootedGraph& g1, const RootedGraph& g2);

/// Left folds g ⊛ g ⊛ ... and g ▷ g ▷ ... (n >= 1 copies).
RootedGraph star_power(const RootedGraph& g, std::size_t copies);
RootedGraph comb_power(const RootedGraph& g, std::size_t copies);

RootedGraph complete_graph(std::size_t d);
RootedGraph star_graph(std::size_t n);
RootedGraph friendship_graph(std::size_t n);
RootedGraph path_graph(std::size_t n);

/// Parses "complete:3", "star:5", "friendship:2", "path:4" (also "K3"-style "k:3").
RootedGraph named_graph(const std::string& spec);

/// Erdos-Renyi graph with edge probability p and a uniformly chosen root.
RootedGraph random_rooted_graph(std::mt19937_64& rng, std::size_t n, double p);

// Text format: header "n <count> root <index>" then one "i j" pair per line.
std::string to_edge_list(const RootedGraph& g);
RootedGraph parse_edge_list(std::istream& in);
std::string to_json(const RootedGraph& g);
RootedGraph parse_graph_json(const std::string& text);
/// Picks the format from the first non-space character.
RootedGraph parse_graph(const std::string& text);

}  // namespace cyclic_spectra
