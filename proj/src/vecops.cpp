#include "bipart/vecops.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "bipart/errors.hpp"

namespace bipart {

SignedVec SignedVec::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].first == entries[i - 1].first)
            throw ValidationError("duplicate vertex in vector entries");
    }
    std::erase_if(entries, [](const Entry& e) { return e.second == 0.0; });
    SignedVec v;
    v.entries_ = std::move(entries);
    return v;
}

double SignedVec::value(Vertex v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, Vertex x) { return e.first < x; });
    return (it != entries_.end() && it->first == v) ? it->second : 0.0;
}

std::vector<Vertex> SignedVec::support() const {
    std::vector<Vertex> s;
    s.reserve(entries_.size());
    for (const auto& [v, x] : entries_) s.push_back(v);
    return s;
}

SignedVec indicator(const Graph& g, Vertex v) {
    if (!g.has_vertex(v)) throw ValidationError("indicator: invalid vertex id");
    return SignedVec::from_entries({{v, 1.0}});
}

SignedVec multiply_m(const Graph& g, const SignedVec& p, WorkCounters* wc) {
    std::unordered_map<Vertex, double> acc;
    acc.reserve(p.support_size() * 4 + 8);
    // Identity part first, then pushed neighbor contributions in source order;
    // per-target accumulation order is therefore fixed.
    for (const auto& [v, x] : p.entries()) acc[v] = x;
    std::uint64_t touched = 0;
    for (const auto& [v, x] : p.entries()) {
        const double scaled = x / g.degree(v);
        for (const auto& nb : g.neighbors(v)) {
            acc[nb.to] -= scaled * nb.weight;
            ++touched;
        }
    }
    if (wc) {
        ++wc->m_multiplies;
        wc->edges_touched += touched;
    }
    std::vector<SignedVec::Entry> out;
    out.reserve(acc.size());
    for (const auto& [v, x] : acc)
        if (x != 0.0) out.emplace_back(v, x);
    return SignedVec::from_entries(std::move(out));
}

SignedVec truncate(const Graph& g, const SignedVec& p, double xi) {
    if (xi < 0.0) throw ValidationError("truncate: xi must be nonnegative");
    std::vector<SignedVec::Entry> kept;
    kept.reserve(p.support_size());
    for (const auto& [v, x] : p.entries())
        if (std::abs(x) >= xi * g.degree(v)) kept.emplace_back(v, x);
    return SignedVec::from_entries(std::move(kept));
}

double l1_norm(const SignedVec& p) {
    double s = 0.0;
    for (const auto& [v, x] : p.entries()) s += std::abs(x);
    return s;
}

double abs_mass(const SignedVec& p, std::span<const Vertex> s) {
    double m = 0.0;
    for (Vertex v : s) m += std::abs(p.value(v));
    return m;
}

double signed_mass(const SignedVec& p, std::span<const Vertex> s) {
    double m = 0.0;
    for (Vertex v : s) m += p.value(v);
    return m;
}

double support_volume(const Graph& g, const SignedVec& p) {
    double vol = 0.0;
    for (const auto& [v, x] : p.entries()) vol += g.degree(v);
    return vol;
}

}  // namespace bipart
