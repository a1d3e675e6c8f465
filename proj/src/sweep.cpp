#include "bipart/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <unordered_map>

namespace bipart {

std::vector<Vertex> sweep_order(const Graph& g, const SignedVec& p, SweepScope scope) {
    std::vector<std::pair<double, Vertex>> keyed;
    if (scope == SweepScope::support_only) {
        keyed.reserve(p.support_size());
        for (const auto& [v, x] : p.entries()) keyed.emplace_back(std::abs(x) / g.degree(v), v);
    } else {
        keyed.reserve(g.vertex_count());
        std::size_t cursor = 0;
        const auto& entries = p.entries();
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            double x = 0.0;
            if (cursor < entries.size() && entries[cursor].first == v) x = entries[cursor++].second;
            keyed.emplace_back(std::abs(x) / g.degree(v), v);
        }
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<Vertex> order;
    order.reserve(keyed.size());
    for (const auto& [key, v] : keyed) order.push_back(v);
    return order;
}

SweepOutcome sweep(const Graph& g, const SignedVec& p, const SweepOptions& opts,
                   WorkCounters* wc) {
    if (p.empty()) throw ValidationError("sweep: zero vector");
    if (opts.cap && *opts.cap <= 0.0) throw ValidationError("sweep: cap must be positive");

    const auto order = sweep_order(g, p, opts.scope);

    SweepOutcome out;
    out.cap = opts.cap;
    out.trace.reserve(order.size());

    // swept vertex -> sign; hash-based so work stays proportional to the
    // swept region, independent of n.
    std::unordered_map<Vertex, std::int8_t> swept;
    swept.reserve(order.size() * 2 + 8);

    double same2 = 0.0;     // 2 * same-side internal weight
    double boundary = 0.0;  // weight leaving the swept set
    double volume = 0.0;
    double best_beta = 0.0;
    bool have_best = false;

    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex v = order[i];
        const std::int8_t sv = p.value(v) > 0.0 ? +1 : -1;
        for (const auto& nb : g.neighbors(v)) {
            ++out.edges_scanned;
            auto it = swept.find(nb.to);
            if (it == swept.end()) {
                boundary += nb.weight;
            } else if (it->second == sv) {
                same2 += 2.0 * nb.weight;
                boundary -= nb.weight;
            } else {
                boundary -= nb.weight;
            }
        }
        swept.emplace(v, sv);
        volume += g.degree(v);
        const double beta = (same2 + boundary) / volume;
        out.trace.push_back({i + 1, volume, beta});
        const bool admitted = !opts.cap || volume <= *opts.cap;
        if (admitted && (!have_best || beta < best_beta)) {
            have_best = true;
            best_beta = beta;
            out.best_prefix = i + 1;
        }
        if (opts.cap && opts.stop_after_cap && volume > *opts.cap) break;
    }
    out.swept_volume = volume;
    if (wc) {
        ++wc->sweeps;
        wc->edges_touched += out.edges_scanned;
    }

    if (have_best) {
        std::vector<Vertex> left, right;
        for (std::size_t i = 0; i < out.best_prefix; ++i) {
            const Vertex v = order[i];
            (p.value(v) > 0.0 ? left : right).push_back(v);
        }
        out.best = bipartiteness_ratio(g, left, right);
        if (wc) {
            // The canonical rebuild rescans the adjacency of the best prefix
            // (twice: once for the metrics, once to split e_l from e_r).
            std::uint64_t rescan = 0;
            for (Vertex v : left) rescan += 2 * g.neighbors(v).size();
            for (Vertex v : right) rescan += g.neighbors(v).size();
            wc->edges_touched += rescan;
        }
    }
    return out;
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> partition_by_sign(
    const SignedVec& p, std::span<const Vertex> s) {
    std::vector<Vertex> left, right;
    for (Vertex v : s) (p.value(v) > 0.0 ? left : right).push_back(v);
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    return {std::move(left), std::move(right)};
}

void write_trace_csv(const SweepOutcome& out, std::ostream& os) {
    os.precision(17);
    os << "i,vol,beta\n";
    for (const auto& t : out.trace) os << t.prefix << ',' << t.volume << ',' << t.beta << '\n';
}

}  // namespace bipart
