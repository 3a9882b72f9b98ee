#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace gdp {

using Rng = std::mt19937_64;

/// Uniform double on the open interval (0, 1) from 53 random bits.
double uniform_open01(Rng& rng);

/// Order-independent per-task seed derived from a base seed (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Laplace(0, scale) quantile function. Throws InvalidScale if scale <= 0.
double laplace_quantile(double u, double scale);

/// `count` i.i.d. Laplace(0, scale) draws by inversion. Throws InvalidScale if scale <= 0.
std::vector<double> laplace_sample(double scale, Rng& rng, std::size_t count);

/// L1 global sensitivity of the degree sequence / degree partition under edge
/// adjacency: one edge changes two degrees by one.
constexpr int global_sensitivity_degree() noexcept { return 2; }

/// Privacy budget and the Laplace scale it implies.
class PrivacyParams {
public:
    /// Throws InvalidArgument unless epsilon is finite and positive.
    explicit PrivacyParams(double epsilon);

    double epsilon() const noexcept { return epsilon_; }
    double scale() const noexcept { return global_sensitivity_degree() / epsilon_; }

private:
    double epsilon_;
};

/// Additive noise for the release pipeline; injectable so tests can drive the
/// post-processing with zero or recorded noise.
class NoiseSource {
public:
    virtual ~NoiseSource() = default;
    virtual std::vector<double> draw(std::size_t count, double scale) = 0;
};

class LaplaceNoise final : public NoiseSource {
public:
    explicit LaplaceNoise(std::uint64_t seed) : seed_(seed), rng_(seed) {}
    std::vector<double> draw(std::size_t count, double scale) override;
    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
    Rng rng_;
};

class ZeroNoise final : public NoiseSource {
public:
    std::vector<double> draw(std::size_t count, double) override { return std::vector<double>(count, 0.0); }
};

/// Replays a fixed vector, ignoring the scale. Throws InvalidArgument on length mismatch.
class RecordedNoise final : public NoiseSource {
public:
    explicit RecordedNoise(std::vector<double> values) : values_(std::move(values)) {}
    std::vector<double> draw(std::size_t count, double scale) override;

private:
    std::vector<double> values_;
};

} // namespace gdp
