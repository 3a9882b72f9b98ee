#pragma once

// Brute-force references used to validate the main library. Nothing here
// depends on the rest of gdp; every answer comes from exhaustive enumeration
// of labelled simple graphs on at most seven nodes.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gdp::oracle {

class TooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxNodes = 7;

using Vec = std::vector<int>;

/// All 2^C(n,2) labelled simple graphs on n <= 7 nodes, as edge bitmasks over
/// the pairs (i, j), i < j, in lexicographic order.
class EnumeratedSpace {
public:
    /// Throws TooLarge if n > kMaxNodes.
    explicit EnumeratedSpace(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    std::uint64_t graph_count() const noexcept { return std::uint64_t{1} << pairs_.size(); }
    const std::vector<std::pair<int, int>>& pairs() const noexcept { return pairs_; }
    Vec degrees(std::uint64_t mask) const;

    /// Distinct degree sequences of all graphs, lexicographically sorted.
    const std::vector<Vec>& sequences() const noexcept { return sequences_; }
    /// Distinct non-increasing rearrangements, lexicographically sorted.
    const std::vector<Vec>& partitions() const noexcept { return partitions_; }

private:
    std::size_t n_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<Vec> sequences_;
    std::vector<Vec> partitions_;
};

/// Shared, lazily built space for n. Thread-safe.
const EnumeratedSpace& space(std::size_t n);

enum class Target { sequences, partitions };

struct MinL1 {
    double cost = 0.0;
    Vec argmin; // first minimiser in lexicographic order
};

/// Exhaustive min over the graphical sequences (or partitions) of ||h - z||_1.
MinL1 brute_min_l1(const std::vector<double>& z, Target target = Target::sequences);

/// Whether d lies in the relative interior of conv(points); decided by a
/// cutting-plane LP: maximise c.(d - centroid) over c in [-1,1]^n subject to
/// c.v <= c.d for every point v. d is interior iff the optimum is 0
/// (tolerance 1e-9).
bool relative_interior(const Vec& d, const std::vector<Vec>& points);

/// Relative interior of the hull of all graphical sequences of length n (the
/// polytope of degree sequences), or of the non-increasing ones only.
bool brute_relative_interior(const Vec& d, Target hull = Target::sequences);

/// max over graph pairs differing in one edge of the L1 distance between
/// their sorted degree vectors. Throws TooLarge if n > 5.
int brute_sensitivity(std::size_t n);

/// Erdős–Gallai test: after sorting non-increasingly, even sum and for every k
/// sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k). Accepts unsorted input.
bool erdos_gallai(Vec d);

/// Exhaustive L1 isotonic regression onto non-increasing integer vectors with
/// entries in [lo, hi]; returns the minimum cost.
double brute_isotonic_cost(const std::vector<double>& z, int lo, int hi);

/// Triangle count as trace(A^3) / 6 with a dense adjacency matrix.
std::uint64_t dense_triangles(std::size_t n, const std::vector<std::pair<int, int>>& edges);

/// Edge masks of every labelled graph with degree sequence exactly d.
std::vector<std::uint64_t> realizations(const Vec& d);

/// Cheapest ||z - g||_1 over k-star sequences g (one centre joined to k
/// leaves, k >= 0) with g <= ceil(z) pointwise.
double brute_best_kstar_cost(const std::vector<double>& z);

} // namespace gdp::oracle
