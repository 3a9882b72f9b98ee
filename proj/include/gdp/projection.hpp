#pragma once

#include <gdp/graph.hpp>

#include <cstddef>
#include <set>
#include <span>
#include <vector>

namespace gdp {

double l1_distance(std::span<const degree_t> h, std::span<const double> z);
double l1_distance(std::span<const degree_t> h, std::span<const degree_t> z);

/// Non-increasing integer vector closest to z in L1 (exact). Among optimal
/// fits each entry takes the middle of its optimal range, then the smaller
/// integer.
/// Throws InvalidArgument on empty or non-finite input.
DegreeSequence isotonic_l1_integer(std::span<const double> z);

struct ProjectionResult {
    DegreeSequence sequence;
    SimpleGraph graph;    // degrees_of(graph) == sequence
    double l1_cost = 0.0; // ||sequence - z||_1
};

/// The greedy star construction on its own: nodes are visited in decreasing
/// order of z, each joined to the min(residual, pos) later nodes of highest
/// positive residual, residuals starting at clamp(ceil(z), 0, n-1).
/// Optimal for integer z; for fractional z it may overshoot.
ProjectionResult greedy_star_projection(std::span<const double> z);

/// argmin over graphical h of ||h - z||_1, with a realizing graph.
/// Integer z is solved by the greedy construction alone; otherwise the greedy
/// result is refined by steepest-first 2-step local moves (+-1 on two
/// coordinates), whose local optima are global on degree-sequence sets.
/// Throws InvalidArgument on non-finite input.
ProjectionResult project_to_graphical(std::span<const double> z);

/// argmin over graphical partitions of ||h - c||_1 for non-increasing integer
/// c; the returned sequence is non-increasing and graph node i has degree
/// sequence[i]. Throws NotMonotone.
ProjectionResult project_to_partition(std::span<const degree_t> c);

/// Best k-star bounded by ceil(z): centre = argmax ceil(z_i) outside
/// `forbidden` (lowest index on ties), leaves = the nodes of largest ceil(z_j)
/// outside `forbidden` with ceil(z_j) >= 1, at most ceil(z_centre) of them.
/// Returns a zero star (no leaves) when nothing positive remains.
KStarSequence optimal_kstar(std::span<const double> z, const std::set<node_t>& forbidden = {});

struct InteriorAdjustOptions {
    /// Cap on candidate moves examined; 0 means n * n.
    std::size_t max_moves = 0;
    /// Independent cap applied on top of n * n so huge inputs stay bounded.
    std::size_t hard_cap = 1u << 16;
};

/// Breadth-first search over edge additions/deletions (a pair of degrees moved
/// by +1 or -1 together) that keep the partition graphical, pointwise at most
/// max(0, ceil(z)) and at the same L1 distance to z. Returns the first
/// partition found whose beta-model MLE exists, or d unchanged.
DegreePartition interior_adjust(const DegreePartition& d, std::span<const double> z,
                                const InteriorAdjustOptions& options = {});

/// Pushes a partition towards the region where the beta-model MLE exists,
/// giving up L1 cost to z when no cost-neutral move does it. Each step adds
/// or deletes edges that the violated condition forces to be absent or
/// present in every realization (an isolated node gains a neighbour, a node
/// of degree n - 1 loses one, a tight top/bottom split is loosened), so the
/// result stays graphical without re-testing. Among admissible moves the one
/// raising ||h - z||_1 least is taken. Returns d unchanged if the MLE conditions
/// are still violated after `max_steps` steps (0 means 2n + 16) or no move
/// applies, as for every n <= 3.
DegreePartition interior_repair(const DegreePartition& d, std::span<const double> z, std::size_t max_steps = 0);

} // namespace gdp
