#include <doctest.h>

#include <gdp/beta_model.hpp>
#include <gdp/errors.hpp>
#include <gdp/experiments.hpp>
#include <gdp/noise.hpp>
#include <gdp/oracles.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace gdp;

namespace {

double max_residual(const BetaParams& b, const DegreePartition& d) {
    const auto e = expected_degrees(b);
    double r = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) r = std::max(r, std::fabs(e[i] - static_cast<double>(d[i])));
    return r;
}

// Visits every non-increasing vector in [0, n-1]^n.
template <class F>
void for_each_partition_vector(std::size_t n, F&& f) {
    std::vector<degree_t> d(n);
    const auto fill = [&](auto& self, std::size_t i, degree_t ceiling) -> void {
        if (i == n) {
            f(d);
            return;
        }
        for (degree_t v = 0; v <= ceiling; ++v) {
            d[i] = v;
            self(self, i + 1, v);
        }
    };
    fill(fill, 0, static_cast<degree_t>(n) - 1);
}

} // namespace

TEST_SUITE("beta-model") {

TEST_CASE("edge_prob") {
    const BetaParams zero{{0.0, 0.0, 0.0}};
    CHECK(edge_prob(zero, 0, 1) == doctest::Approx(0.5));
    const BetaParams b{{std::log(2.0), 0.0, -0.3}};
    CHECK(edge_prob(b, 0, 1) == doctest::Approx(2.0 / 3.0));
    CHECK(edge_prob(b, 0, 2) == edge_prob(b, 2, 0));
    CHECK_THROWS_AS(edge_prob(b, 1, 1), SelfLoop);
    const BetaParams extreme{{800.0, 800.0, -800.0}};
    CHECK(edge_prob(extreme, 0, 1) == doctest::Approx(1.0));
    CHECK(edge_prob(extreme, 2, 0) == doctest::Approx(0.5));
}

TEST_CASE("mle_exists examples") {
    auto s = mle_exists(DegreePartition({3, 3, 3, 3}));
    CHECK_FALSE(s.exists);
    REQUIRE(s.violated_condition);
    CHECK(s.violated_condition->kind == MleViolation::Kind::full_degree);
    s = mle_exists(DegreePartition({2, 2, 1, 1, 0}));
    CHECK_FALSE(s.exists);
    CHECK(s.violated_condition->kind == MleViolation::Kind::zero_degree);
    CHECK(s.violated_condition->index == 4);
    s = mle_exists(DegreePartition({2, 2, 1, 1}));
    CHECK_FALSE(s.exists);
    CHECK(s.violated_condition->kind == MleViolation::Kind::top_bottom);
    CHECK(s.violated_condition->k == 2);
    CHECK(s.violated_condition->l == 2);
    CHECK_FALSE(s.violated_condition->describe().empty());
    CHECK(mle_exists(DegreePartition({2, 2, 2, 2})).exists);
    CHECK(mle_exists(DegreePartition({2, 2, 1, 1})).exists == oracle::brute_relative_interior({2, 2, 1, 1}));
    CHECK(mle_exists(DegreePartition({2, 2, 2, 2})).exists == oracle::brute_relative_interior({2, 2, 2, 2}));
}

TEST_CASE("mle_exists matches the all-pairs predicate on every partition vector, n <= 9") {
    for (std::size_t n = 1; n <= 9; ++n) {
        std::size_t visited = 0;
        for_each_partition_vector(n, [&](const std::vector<degree_t>& d) {
            const DegreePartition p(d);
            CHECK(mle_exists(p).exists == detail::mle_exists_all_pairs(p));
            CHECK(mle_exists(p).exists != mle_exists(p).violated_condition.has_value());
            ++visited;
        });
        CAPTURE(n);
        CHECK(visited > 0);
    }
}

TEST_CASE("mle_exists agrees with the polytope oracle, n <= 5 (full sweep is an acceptance check)") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for_each_partition_vector(n, [&](const std::vector<degree_t>& d) {
            const oracle::Vec v(d.begin(), d.end());
            CAPTURE(v);
            CHECK(mle_exists(DegreePartition(d)).exists == oracle::brute_relative_interior(v));
        });
    }
}

TEST_CASE("a single node always has an MLE, an empty partition never") {
    CHECK(mle_exists(DegreePartition({0})).exists);
    CHECK(fit_beta(DegreePartition({0})).params.beta.size() == 1);
    CHECK_FALSE(mle_exists(DegreePartition()).exists);
}

TEST_CASE("fit_beta on C4") {
    const BetaFit fit = fit_beta(DegreePartition({2, 2, 2, 2}));
    for (double b : fit.params.beta) CHECK(std::fabs(b - 0.5 * std::log(2.0)) <= 1e-10);
    CHECK(fit.residual <= 1e-10);
}

TEST_CASE("fit_beta rejects boundary partitions") {
    CHECK_THROWS_AS(fit_beta(DegreePartition({1, 1})), MleDoesNotExist);
    CHECK_THROWS_AS(fit_beta(DegreePartition({2, 2, 1, 1})), MleDoesNotExist);
    FitOptions tight;
    tight.max_iter = 1;
    tight.tol = 1e-15;
    CHECK_THROWS_AS(fit_beta(DegreePartition({5, 3, 3, 2, 2, 1, 1, 1}), tight), NoConvergence);
}

TEST_CASE("moment matching on random interior partitions, n <= 10") {
    std::size_t fitted = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        PowerLawConfig config;
        config.n = 4 + seed % 7;
        config.gamma = 1.0 + 0.5 * static_cast<double>(seed % 3);
        const DegreePartition d = gen_powerlaw_partition(config, rng);
        if (!mle_exists(d).exists) continue;
        FitOptions options;
        options.tol = 1e-9;
        const BetaFit fit = fit_beta(d, options);
        CHECK(max_residual(fit.params, d) <= 1e-8);
        ++fitted;
        const auto& h = fit.residual_history;
        if (h.size() >= 6)
            for (std::size_t i = h.size() - 5; i < h.size(); ++i) CHECK(h[i] <= h[i - 1]);
    }
    CHECK(fitted > 50);
}

TEST_CASE("refitting a partition sampled from the fitted model") {
    const DegreePartition d({5, 4, 4, 3, 3, 3, 2, 2, 2});
    const BetaFit fit = fit_beta(d);
    Rng rng(17);
    std::size_t refits = 0;
    for (int draw = 0; draw < 40 && refits < 10; ++draw) {
        std::vector<degree_t> sampled(d.size(), 0);
        for (node_t i = 0; i < d.size(); ++i)
            for (node_t j = i + 1; j < d.size(); ++j)
                if (uniform_open01(rng) < edge_prob(fit.params, i, j)) ++sampled[i], ++sampled[j];
        const DegreePartition p = DegreePartition::from_unsorted(sampled);
        if (!mle_exists(p).exists) continue;
        CHECK(max_residual(fit_beta(p).params, p) <= 1e-10);
        ++refits;
    }
    CHECK(refits > 0);
}

TEST_CASE("karate fit") {
    const DegreePartition d({17, 16, 12, 10, 9, 6, 6, 5, 5, 5, 4, 4, 4, 4, 4, 4, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1});
    REQUIRE(mle_exists(d).exists);
    const BetaFit fit = fit_beta(d);
    CHECK(max_residual(fit.params, d) <= 1e-10);
    CHECK(std::is_sorted(fit.params.beta.begin(), fit.params.beta.end(), std::greater<>()));
}

}
