#pragma once

#include <gdp/graph.hpp>
#include <gdp/noise.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <unordered_set>
#include <vector>

namespace gdp {

/// Proposal schedule. Rejected proposals count towards burn_in and thinning.
struct SwapChainConfig {
    std::uint64_t burn_in = 0;
    std::uint64_t thinning = 1;
    std::uint64_t samples = 1;
    std::uint64_t seed = 0;

    /// burn_in = 10 m and thinning = max(1, m) for an m-edge graph.
    static SwapChainConfig defaults(std::size_t edge_count, std::uint64_t samples, std::uint64_t seed);
};

/// Double-edge-swap Markov chain on simple graphs with a fixed degree sequence.
class SwapChain {
public:
    SwapChain(const SimpleGraph& start, std::uint64_t seed);

    /// One proposal: two distinct edges (a,b), (c,d) drawn uniformly, rewired to
    /// (a,c),(b,d) or (a,d),(b,c) with equal probability; rejected when the
    /// edges share a node or a rewired edge already exists. Returns acceptance.
    bool propose();

    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool has_edge(node_t u, node_t v) const;
    SimpleGraph snapshot() const;
    DegreeSequence degrees() const;

private:
    static std::uint64_t key(node_t u, node_t v) {
        return u < v ? (std::uint64_t{u} << 32) | v : (std::uint64_t{v} << 32) | u;
    }
    void replace(std::size_t slot, node_t u, node_t v);

    std::vector<Edge> edges_;
    std::unordered_set<std::uint64_t> present_;
    std::vector<std::size_t> adjacency_; // degree per node, kept for checks
    Rng rng_;
};

struct EmpiricalNull {
    std::vector<std::uint64_t> statistic_values; // triangle count per recorded sample
    DegreePartition degree;
    SwapChainConfig config;
};

/// Runs the chain from hh_realize(d), recording count_triangles after burn_in
/// and then every `thinning` proposals. `observer`, when set, sees each
/// recorded graph. Throws NotGraphical, InvalidArgument on thinning or samples of 0.
EmpiricalNull sample_chain(const DegreePartition& d, const SwapChainConfig& config,
                           const std::function<void(const SimpleGraph&)>& observer = {});

struct NullSummary {
    std::uint64_t min = 0;
    std::uint64_t max = 0;
    double mean = 0.0;
    double q025 = 0.0, q500 = 0.0, q975 = 0.0; // linear-interpolation quantiles
    std::map<std::uint64_t, std::size_t> histogram;
};

NullSummary null_summary(const EmpiricalNull& null);

/// Sample quantile with linear interpolation between order statistics.
double quantile(std::vector<double> values, double q);

/// (1 + #{t at least as far out as observed in its tail}) / (samples + 1),
/// the tail being whichever of {t >= observed}, {t <= observed} is smaller.
double empirical_pvalue(const EmpiricalNull& null, std::uint64_t observed);

/// Histogram intersection of two nulls' normalised histograms, in [0, 1].
double null_overlap(const EmpiricalNull& a, const EmpiricalNull& b);

/// CSV with header `sample_index,triangles`.
void write_null_csv(std::ostream& out, const EmpiricalNull& null);

} // namespace gdp
