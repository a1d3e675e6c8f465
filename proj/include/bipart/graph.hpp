#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "bipart/errors.hpp"

namespace bipart {

using Vertex = std::uint32_t;

struct Neighbor {
    Vertex to;
    double weight;
};

// Immutable undirected weighted graph in CSR form. Invariants established at
// construction: symmetric adjacency, strictly positive weights, no self-loops,
// no zero-degree vertices (isolated input vertices are dropped and counted).
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const { return degrees_.size(); }

    std::span<const Neighbor> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    double degree(Vertex v) const { return degrees_[v]; }

    // vol(G) = sum of weighted degrees = 2 * total edge weight.
    double total_volume() const { return total_volume_; }

    double total_edge_weight() const { return total_volume_ / 2.0; }

    const std::string& token(Vertex v) const { return tokens_[v]; }

    // Dense id for an external token; throws ValidationError if unknown.
    Vertex vertex_of(const std::string& token) const;

    bool has_vertex(Vertex v) const { return v < degrees_.size(); }

    // Number of isolated vertices dropped during construction.
    std::size_t dropped_isolated() const { return dropped_isolated_; }

    // Builds from (token_u, token_v, weight) triples. Tokens are mapped to
    // dense ids in first-appearance order; parallel edges merge by summing
    // weights; self-loops and non-positive weights are rejected.
    static Graph from_edges(
        const std::vector<std::tuple<std::string, std::string, double>>& edges);

private:
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> adjacency_;
    std::vector<double> degrees_;
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, Vertex> ids_;
    double total_volume_ = 0.0;
    std::size_t dropped_isolated_ = 0;
};

// Parses edge-list text: lines "u v [w]", '#' starts a comment, blank lines
// ignored, default weight 1. Throws ParseError / ValidationError.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);  // "-" reads stdin

// Writes the graph back out as "u v w" lines (each undirected edge once,
// endpoint order by first appearance, original tokens).
void write_edge_list(const Graph& g, std::ostream& out);

// A disjoint pair of vertex sets with every quantity entering the
// bipartiteness ratio: beta = (2 e_l + 2 e_r + e_boundary) / vol_u.
struct PairSubgraph {
    std::vector<Vertex> left;   // sorted ascending
    std::vector<Vertex> right;  // sorted ascending
    double vol_u = 0.0;
    double e_l = 0.0;         // edge weight inside left
    double e_r = 0.0;         // edge weight inside right
    double e_lr = 0.0;        // edge weight between left and right
    double e_boundary = 0.0;  // edge weight leaving left ∪ right
    double beta = 0.0;
};

// Computes all PairSubgraph fields in one pass over the adjacency lists of
// L ∪ R. Requires disjoint sets with nonempty union and valid ids.
PairSubgraph bipartiteness_ratio(const Graph& g, std::span<const Vertex> left,
                                 std::span<const Vertex> right);

struct SetMetrics {
    double volume = 0.0;    // vol(S)
    double internal = 0.0;  // edge weight inside S
    double boundary = 0.0;  // edge weight from S to the rest
};

SetMetrics set_metrics(const Graph& g, std::span<const Vertex> s);

}  // namespace bipart
