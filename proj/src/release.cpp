#include <gdp/errors.hpp>
#include <gdp/projection.hpp>
#include <gdp/release.hpp>

namespace gdp {

namespace {

std::vector<double> add_noise(const DegreePartition& d, const PrivacyParams& params, NoiseSource& noise) {
    if (d.empty()) throw InvalidArgument("empty partition");
    std::vector<double> e = noise.draw(d.size(), params.scale());
    if (e.size() != d.size()) throw InvalidArgument("noise source returned the wrong length");
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += static_cast<double>(d[i]);
    return e;
}

} // namespace

ReleaseResult release_from_noisy(std::vector<double> noisy) {
    const DegreeSequence c = isotonic_l1_integer(noisy);
    ProjectionResult projected = project_to_partition(c);
    const std::vector<double> target(c.begin(), c.end());
    DegreePartition s(std::move(projected.sequence));
    DegreePartition adjusted = interior_repair(interior_adjust(s, target), target);

    ReleaseResult result;
    if (adjusted == s) {
        result.realization = std::move(projected.graph);
    } else {
        result.realization = hh_realize(adjusted);
    }
    result.partition = std::move(adjusted);
    result.l1_to_noisy = l1_distance(result.partition.span(), noisy);
    result.noisy = std::move(noisy);
    return result;
}

ReleaseResult release_partition_hh(const DegreePartition& d, const PrivacyParams& params, NoiseSource& noise) {
    return release_from_noisy(add_noise(d, params, noise));
}

DegreeSequence release_partition_isotone(const DegreePartition& d, const PrivacyParams& params, NoiseSource& noise,
                                         std::vector<double>* noisy_out) {
    std::vector<double> z = add_noise(d, params, noise);
    DegreeSequence c = isotonic_l1_integer(z);
    if (noisy_out) *noisy_out = std::move(z);
    return c;
}

} // namespace gdp
