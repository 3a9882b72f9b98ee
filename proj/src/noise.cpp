#include <gdp/errors.hpp>
#include <gdp/noise.hpp>

#include <cmath>
#include <string>

namespace gdp {

double uniform_open01(Rng& rng) {
    // (k + 0.5) / 2^53 for k uniform on [0, 2^53): never 0 or 1.
    const std::uint64_t k = rng() >> 11;
    return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double laplace_quantile(double u, double scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidScale("Laplace scale must be positive");
    const double centered = u - 0.5;
    if (centered == 0.0) return 0.0;
    return -scale * std::copysign(1.0, centered) * std::log1p(-2.0 * std::fabs(centered));
}

std::vector<double> laplace_sample(double scale, Rng& rng, std::size_t count) {
    if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidScale("Laplace scale must be positive");
    std::vector<double> out(count);
    for (auto& x : out) x = laplace_quantile(uniform_open01(rng), scale);
    return out;
}

PrivacyParams::PrivacyParams(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw InvalidArgument("epsilon must be positive and finite");
}

std::vector<double> LaplaceNoise::draw(std::size_t count, double scale) {
    return laplace_sample(scale, rng_, count);
}

std::vector<double> RecordedNoise::draw(std::size_t count, double) {
    if (count != values_.size())
        throw InvalidArgument("recorded noise has " + std::to_string(values_.size()) + " values, " +
                              std::to_string(count) + " requested");
    return values_;
}

} // namespace gdp
