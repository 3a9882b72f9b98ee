#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gdp {

using node_t = std::uint32_t;
using degree_t = std::int64_t;
using Edge = std::pair<node_t, node_t>;

/// Degrees indexed by node. Unvalidated: entries may be negative or exceed n-1.
using DegreeSequence = std::vector<degree_t>;

/// A degree sequence in canonical non-increasing order.
class DegreePartition {
public:
    DegreePartition() = default;

    /// Throws NotMonotone unless `degrees` is non-increasing, OutOfRange if any entry is negative.
    explicit DegreePartition(std::vector<degree_t> degrees);

    /// Sorts a copy of `d` into canonical order.
    static DegreePartition from_unsorted(std::vector<degree_t> d);

    std::size_t size() const noexcept { return degrees_.size(); }
    bool empty() const noexcept { return degrees_.empty(); }
    degree_t operator[](std::size_t i) const { return degrees_[i]; }
    const std::vector<degree_t>& values() const noexcept { return degrees_; }
    std::span<const degree_t> span() const noexcept { return degrees_; }
    degree_t sum() const noexcept;

    friend bool operator==(const DegreePartition&, const DegreePartition&) = default;

private:
    std::vector<degree_t> degrees_;
};

/// p[k] = number of nodes of degree k, k = 0..n-1.
struct DegreeDistribution {
    std::vector<std::size_t> counts;
};

/// Undirected simple graph on nodes 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n) : offset_(n + 1, 0) {}

    /// Throws InvalidArgument on self-loops, duplicate edges or ids >= n.
    static SimpleGraph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t node_count() const noexcept { return offset_.size() - 1; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t degree(node_t v) const { return offset_[v + 1] - offset_[v]; }
    std::span<const node_t> neighbors(node_t v) const {
        return {neighbor_.data() + offset_[v], degree(v)};
    }
    bool has_edge(node_t u, node_t v) const;

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    /// Graph with node v renamed to new_id[v]; new_id must be a permutation.
    SimpleGraph relabeled(std::span<const node_t> new_id) const;

private:
    std::vector<std::size_t> offset_ = {0}; // neighbours of v: neighbor_[offset_[v], offset_[v+1])
    std::vector<node_t> neighbor_;
    std::size_t edge_count_ = 0;
};

DegreeSequence degrees_of(const SimpleGraph& g);

/// Number of unordered node triples spanning a triangle.
std::uint64_t count_triangles(const SimpleGraph& g);

/// Throws OutOfRange if some degree lies outside [0, n-1].
DegreeDistribution degree_distribution(std::span<const degree_t> d);

/// Havel-Hakimi test. Accepts unsorted input.
bool is_graphical(std::span<const degree_t> d);

/// Havel-Hakimi realization keeping node identities: degrees_of(result) == d.
/// Throws NotGraphical.
SimpleGraph hh_realize(std::span<const degree_t> d);
inline SimpleGraph hh_realize(const DegreePartition& d) { return hh_realize(d.span()); }

/// k-star degree sequence: `center` joined to each of `leaves`.
struct KStarSequence {
    node_t center = 0;
    std::vector<node_t> leaves; // sorted, never contains center

    std::size_t k() const noexcept { return leaves.size(); }
    DegreeSequence as_vector(std::size_t n) const;
};

/// Stars removed by successive Havel-Hakimi reductions; they sum to d.
/// Throws NotGraphical.
std::vector<KStarSequence> hh_decompose(std::span<const degree_t> d);
inline std::vector<KStarSequence> hh_decompose(const DegreePartition& d) { return hh_decompose(d.span()); }

} // namespace gdp
