#include "bipart/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_set>

namespace bipart {

Vertex Graph::vertex_of(const std::string& token) const {
    auto it = ids_.find(token);
    if (it == ids_.end()) throw ValidationError("unknown vertex token: " + token);
    return it->second;
}

Graph Graph::from_edges(
    const std::vector<std::tuple<std::string, std::string, double>>& edges) {
    // First pass: assign dense ids in first-appearance order and merge
    // duplicate edges (either orientation) by summing weights.
    std::unordered_map<std::string, Vertex> ids;
    std::vector<std::string> tokens;
    auto id_of = [&](const std::string& tok) -> Vertex {
        auto [it, inserted] = ids.try_emplace(tok, static_cast<Vertex>(tokens.size()));
        if (inserted) tokens.push_back(tok);
        return it->second;
    };

    std::map<std::pair<Vertex, Vertex>, double> merged;
    for (const auto& [tu, tv, w] : edges) {
        if (!(w > 0.0)) throw ValidationError("edge weight must be positive: " + tu + " " + tv);
        const Vertex u = id_of(tu);
        const Vertex v = id_of(tv);
        if (u == v) throw ValidationError("self-loop rejected: " + tu);
        const auto key = std::minmax(u, v);
        merged[{key.first, key.second}] += w;
    }

    // Drop isolated vertices (mentioned tokens that ended up with no edges
    // can only come from programmatic callers, e.g. the generator).
    std::vector<double> degree(tokens.size(), 0.0);
    for (const auto& [uv, w] : merged) {
        degree[uv.first] += w;
        degree[uv.second] += w;
    }
    std::vector<Vertex> remap(tokens.size(), 0);
    Graph g;
    for (Vertex v = 0; v < tokens.size(); ++v) {
        if (degree[v] > 0.0) {
            remap[v] = static_cast<Vertex>(g.tokens_.size());
            g.tokens_.push_back(tokens[v]);
        } else {
            ++g.dropped_isolated_;
        }
    }
    const std::size_t n = g.tokens_.size();
    for (Vertex v = 0; v < n; ++v) g.ids_.emplace(g.tokens_[v], v);

    std::vector<std::size_t> counts(n, 0);
    for (const auto& [uv, w] : merged) {
        ++counts[remap[uv.first]];
        ++counts[remap[uv.second]];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + counts[v];
    g.adjacency_.resize(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [uv, w] : merged) {
        const Vertex u = remap[uv.first];
        const Vertex v = remap[uv.second];
        g.adjacency_[cursor[u]++] = {v, w};
        g.adjacency_[cursor[v]++] = {u, w};
    }
    // merged iterates in (min,max) id order, so each adjacency list comes out
    // sorted by neighbor id; keep that as the canonical accumulation order.
    g.degrees_.assign(n, 0.0);
    for (Vertex v = 0; v < n; ++v) {
        double d = 0.0;
        for (const auto& nb : g.neighbors(v)) d += nb.weight;
        g.degrees_[v] = d;
        g.total_volume_ += d;
    }
    return g;
}

Graph load_graph(std::istream& in) {
    std::vector<std::tuple<std::string, std::string, double>> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v)) throw ParseError(line_no, "expected two endpoints, got one token");
        double w = 1.0;
        std::string wtok;
        if (ls >> wtok) {
            std::size_t pos = 0;
            try {
                w = std::stod(wtok, &pos);
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad weight: " + wtok);
            }
            if (pos != wtok.size()) throw ParseError(line_no, "bad weight: " + wtok);
        }
        std::string extra;
        if (ls >> extra) throw ParseError(line_no, "trailing tokens after weight");
        if (u == v) throw ParseError(line_no, "self-loop rejected: " + u);
        if (!(w > 0.0)) throw ParseError(line_no, "weight must be positive");
        edges.emplace_back(std::move(u), std::move(v), w);
    }
    if (edges.empty()) throw ValidationError("edge list is empty");
    return Graph::from_edges(edges);
}

Graph load_graph_file(const std::string& path) {
    if (path == "-") return load_graph(std::cin);
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot open graph file: " + path);
    return load_graph(f);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out.precision(17);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (const auto& nb : g.neighbors(u)) {
            if (nb.to > u) out << g.token(u) << ' ' << g.token(nb.to) << ' ' << nb.weight << '\n';
        }
    }
}

namespace {

// Side map from two disjoint sets; hash-based so the cost is proportional to
// |L| + |R|, never to n (the local detector depends on this).
std::unordered_map<Vertex, std::int8_t> side_map(const Graph& g,
                                                 std::span<const Vertex> left,
                                                 std::span<const Vertex> right) {
    std::unordered_map<Vertex, std::int8_t> side;
    side.reserve(left.size() + right.size());
    for (Vertex v : left) {
        if (!g.has_vertex(v)) throw ValidationError("invalid vertex id in left set");
        if (!side.emplace(v, +1).second) throw ValidationError("duplicate vertex in left set");
    }
    for (Vertex v : right) {
        if (!g.has_vertex(v)) throw ValidationError("invalid vertex id in right set");
        auto [it, inserted] = side.emplace(v, -1);
        if (!inserted)
            throw ValidationError(it->second == +1 ? "left and right sets overlap"
                                                   : "duplicate vertex in right set");
    }
    return side;
}

}  // namespace

PairSubgraph bipartiteness_ratio(const Graph& g, std::span<const Vertex> left,
                                 std::span<const Vertex> right) {
    if (left.empty() && right.empty()) throw ValidationError("empty union of left and right");
    const auto side = side_map(g, left, right);

    PairSubgraph p;
    p.left.assign(left.begin(), left.end());
    p.right.assign(right.begin(), right.end());
    std::sort(p.left.begin(), p.left.end());
    std::sort(p.right.begin(), p.right.end());

    double same2 = 0.0, cross2 = 0.0;  // doubled internal sums
    for (const auto& [v, sv] : std::map<Vertex, std::int8_t>(side.begin(), side.end())) {
        p.vol_u += g.degree(v);
        for (const auto& nb : g.neighbors(v)) {
            auto it = side.find(nb.to);
            if (it == side.end())
                p.e_boundary += nb.weight;
            else if (it->second == sv)
                same2 += nb.weight;
            else
                cross2 += nb.weight;
        }
    }
    // Each internal edge was seen from both endpoints.
    p.e_lr = cross2 / 2.0;
    // Split same-side weight back into L-internal and R-internal with a
    // second cheap pass so the reported fields are exact per side.
    double el2 = 0.0;
    for (Vertex v : p.left) {
        for (const auto& nb : g.neighbors(v)) {
            auto it = side.find(nb.to);
            if (it != side.end() && it->second == +1) el2 += nb.weight;
        }
    }
    p.e_l = el2 / 2.0;
    p.e_r = (same2 - el2) / 2.0;
    p.beta = (same2 + p.e_boundary) / p.vol_u;
    return p;
}

SetMetrics set_metrics(const Graph& g, std::span<const Vertex> s) {
    std::unordered_set<Vertex> in_s;
    in_s.reserve(s.size());
    for (Vertex v : s) {
        if (!g.has_vertex(v)) throw ValidationError("invalid vertex id in set");
        if (!in_s.insert(v).second) throw ValidationError("duplicate vertex in set");
    }
    SetMetrics m;
    double internal2 = 0.0;
    for (Vertex v : s) {
        m.volume += g.degree(v);
        for (const auto& nb : g.neighbors(v)) {
            if (in_s.count(nb.to))
                internal2 += nb.weight;
            else
                m.boundary += nb.weight;
        }
    }
    m.internal = internal2 / 2.0;
    return m;
}

}  // namespace bipart
