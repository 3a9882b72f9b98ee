#pragma once

#include <gdp/graph.hpp>
#include <gdp/noise.hpp>
#include <gdp/swap_chain.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace gdp {

struct PowerLawConfig {
    double gamma = 1.0;
    std::size_t n = 100;
    std::size_t replications = 500;
    double epsilon = 1.0;
    std::uint64_t seed = 0;
    /// Sample P(x) proportional to x^gamma instead of x^-gamma.
    bool positive_exponent = false;
    /// Draws of the whole sequence rejected for not being graphical before the
    /// parity-and-projection repair is used instead.
    std::size_t max_redraws = 100000;
};

/// n i.i.d. degrees on {1, ..., n-1} with P(x) proportional to x^-gamma,
/// sorted non-increasing, redrawn until graphical. After max_redraws failures
/// the last draw is repaired instead: last entry decremented on an odd sum,
/// then projected if still not graphical. Throws InvalidArgument if n < 2.
DegreePartition gen_powerlaw_partition(const PowerLawConfig& config, Rng& rng);

struct ReportRow {
    std::string algorithm; // isotone-hh, isotone or original
    std::string metric;
    std::string key;
    double value = 0.0;
};

struct ExperimentReport {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<ReportRow> rows;

    /// First row matching (algorithm, metric, key). Throws InvalidArgument.
    double value(const std::string& algorithm, const std::string& metric, const std::string& key = "") const;

    /// '#'-prefixed metadata lines, then `algorithm,metric,key,value`.
    void write_csv(std::ostream& out) const;
};

/// Creates the noise source for one replication from its derived seed.
using NoiseFactory = std::function<std::unique_ptr<NoiseSource>(std::uint64_t seed)>;

struct RunOptions {
    NoiseFactory noise; // empty: LaplaceNoise
    unsigned threads = 0; // 0: hardware concurrency
};

/// Whether the beta MLE exists for a baseline output, which may be off the
/// graphical set: entries outside [0, n-1] count as non-existence, otherwise
/// the partition conditions decide.
bool baseline_mle_exists(const DegreeSequence& c);

/// Per replication: a power-law partition d and one noise draw released by
/// both algorithms; records whether MLE existence agrees with that of d.
/// Rows: p_coincide / p_coincide_se / p_mle_exists per algorithm, key "gamma=..,n=..".
ExperimentReport run_mle_coincidence(const PowerLawConfig& config, const RunOptions& options = {});

/// Karate study: P(mle exists), mean L2 and squared L2 error against the true
/// partition, and per-node beta mean and 2.5% / 97.5% quantiles (beta = 0 when
/// the MLE is absent, counted in mle_failed). Throws DatasetCorrupt.
ExperimentReport run_karate_study(double epsilon, std::size_t replications, std::uint64_t seed,
                                  const RunOptions& options = {});

struct TriangleStudyConfig {
    double epsilon = 1.0;
    std::size_t runs = 500;
    std::uint64_t seed = 0;
    std::uint64_t samples = 1000;
    /// Unset: 10 m burn-in and m thinning for each released partition.
    std::uint64_t burn_in = 0, thinning = 0;
    bool default_schedule = true;
    /// Runs whose full histograms are emitted.
    std::size_t histogram_runs = 10;
};

/// Triangle-count nulls of the true karate partition and of each run's
/// releases; non-graphical baseline outputs are marked degenerate.
ExperimentReport run_triangle_null_study(const TriangleStudyConfig& config, const RunOptions& options = {});

/// Calls fn(i) for i in [0, count) on a pool of worker threads.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

} // namespace gdp
