#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bipart/graph.hpp"
#include "bipart/vecops.hpp"

namespace bipart {

enum class SweepScope {
    all_vertices,  // every vertex participates; zero-valued ones sort last and join R
    support_only,  // only supp(p)
};

struct SweepOptions {
    SweepScope scope = SweepScope::all_vertices;
    std::optional<double> cap;   // admit prefixes with vol <= cap into the minimum
    bool stop_after_cap = false; // stop sweeping once volume exceeds cap
};

struct SweepTraceEntry {
    std::size_t prefix;  // i, 1-based
    double volume;       // vol(S_i)
    double beta;         // incremental B-ratio of (L_i, R_i)
};

struct SweepOutcome {
    // Minimum-beta admitted prefix, rebuilt canonically via
    // bipartiteness_ratio; absent when no prefix satisfies the cap.
    std::optional<PairSubgraph> best;
    std::size_t best_prefix = 0;  // 1-based index into the sweep order
    std::vector<SweepTraceEntry> trace;
    double swept_volume = 0.0;
    std::optional<double> cap;
    std::uint64_t edges_scanned = 0;
};

// Sweep order: |p(v)|/d(v) descending, ties by ascending vertex id. The
// ratios are compared as computed doubles so the order is reproducible.
std::vector<Vertex> sweep_order(const Graph& g, const SignedVec& p, SweepScope scope);

// The sweep process: walk the order, maintain (2*same-side internal weight,
// boundary weight, volume) incrementally in O(deg(v)) per added vertex, and
// record beta of every prefix. Throws ValidationError on a zero vector or a
// non-positive cap.
SweepOutcome sweep(const Graph& g, const SignedVec& p, const SweepOptions& opts = {},
                   WorkCounters* wc = nullptr);

// Splits S into ({v in S : p(v) > 0}, the rest); the signed gap
// p(L0,-R0) then equals |p|(S).
std::pair<std::vector<Vertex>, std::vector<Vertex>> partition_by_sign(
    const SignedVec& p, std::span<const Vertex> s);

// Writes the trace as CSV "i,vol,beta".
void write_trace_csv(const SweepOutcome& out, std::ostream& os);

}  // namespace bipart
