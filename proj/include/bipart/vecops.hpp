#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bipart/graph.hpp"

namespace bipart {

// Sparse signed vector over vertices. Canonical form: entries sorted by
// vertex id, no stored entry is exactly zero.
class SignedVec {
public:
    using Entry = std::pair<Vertex, double>;

    SignedVec() = default;

    // Sorts, checks for duplicate vertices, drops exact zeros.
    static SignedVec from_entries(std::vector<Entry> entries);

    double value(Vertex v) const;  // 0.0 if v is not in the support
    bool contains(Vertex v) const { return value(v) != 0.0; }

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    std::vector<Vertex> support() const;

    friend bool operator==(const SignedVec& a, const SignedVec& b) = default;

private:
    std::vector<Entry> entries_;
};

// Counters shared by vector ops, sweeps and detectors. "edges_touched" counts
// adjacency entries scanned, the unit of work in all locality bounds.
struct WorkCounters {
    std::uint64_t m_multiplies = 0;
    std::uint64_t edges_touched = 0;
    std::uint64_t sweeps = 0;

    WorkCounters& operator+=(const WorkCounters& o) {
        m_multiplies += o.m_multiplies;
        edges_touched += o.edges_touched;
        sweeps += o.sweeps;
        return *this;
    }
};

// Indicator vector of v.
SignedVec indicator(const Graph& g, Vertex v);

// Row-vector product p <- pM with M = I - D^{-1}A:
// (pM)(u) = p(u) - sum_{v~u} p(v) w(v,u) / d(v).
// Exact zeros produced by cancellation are removed. Work is proportional to
// vol(supp(p)); accumulation order is fixed (sources ascending, adjacency
// order within a source), so results are deterministic.
SignedVec multiply_m(const Graph& g, const SignedVec& p, WorkCounters* wc = nullptr);

// Keeps entry u iff |p(u)| >= xi * d(u). Throws ValidationError for xi < 0.
SignedVec truncate(const Graph& g, const SignedVec& p, double xi);

double l1_norm(const SignedVec& p);

// |p|(S) = sum of |p(v)| over v in S.
double abs_mass(const SignedVec& p, std::span<const Vertex> s);

// p(S) = sum of p(v) over v in S; p(L,-R) == signed_mass(L) - signed_mass(R).
double signed_mass(const SignedVec& p, std::span<const Vertex> s);

// vol(supp(p)).
double support_volume(const Graph& g, const SignedVec& p);

// Doubling truncation thresholds xi_t = xi0 * 2^t.
struct TruncationSchedule {
    double xi0 = 0.0;
    double xi(int t) const { return xi0 * std::ldexp(1.0, t); }
};

}  // namespace bipart
