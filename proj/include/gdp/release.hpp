#pragma once

#include <gdp/graph.hpp>
#include <gdp/noise.hpp>

#include <span>
#include <vector>

namespace gdp {

struct ReleaseResult {
    DegreePartition partition;  // graphical
    SimpleGraph realization;    // node i has degree partition[i]
    std::vector<double> noisy;  // d + Laplace noise, in the input's order
    double l1_to_noisy = 0.0;   // ||partition - noisy||_1
};

/// Deterministic post-processing of a noisy partition: integer isotonic
/// regression, projection onto graphical partitions, interior adjustment.
ReleaseResult release_from_noisy(std::vector<double> noisy);

/// Noise with scale 2 / epsilon followed by release_from_noisy.
/// Throws InvalidArgument on an empty partition.
ReleaseResult release_partition_hh(const DegreePartition& d, const PrivacyParams& params, NoiseSource& noise);

/// Baseline: noise plus integer isotonic regression only. Monotone
/// non-increasing, possibly negative, above n - 1 or otherwise not graphical.
DegreeSequence release_partition_isotone(const DegreePartition& d, const PrivacyParams& params, NoiseSource& noise,
                                         std::vector<double>* noisy_out = nullptr);

} // namespace gdp
