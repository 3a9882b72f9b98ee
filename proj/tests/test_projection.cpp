#include <doctest.h>

#include <gdp/beta_model.hpp>
#include <gdp/errors.hpp>
#include <gdp/noise.hpp>
#include <gdp/oracles.hpp>
#include <gdp/projection.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

using namespace gdp;

namespace {

std::vector<double> random_real(Rng& rng, std::size_t n, double lo, double hi) {
    std::vector<double> z(n);
    for (double& x : z) x = lo + (hi - lo) * uniform_open01(rng);
    return z;
}

bool non_increasing(const DegreeSequence& d) {
    return std::is_sorted(d.begin(), d.end(), std::greater<>());
}

double cost(const DegreeSequence& h, const std::vector<double>& z) { return l1_distance(h, z); }

} // namespace

TEST_SUITE("seq-projection") {

TEST_CASE("isotonic examples") {
    CHECK(isotonic_l1_integer(std::vector<double>{3, 2, 1}) == DegreeSequence{3, 2, 1});
    CHECK(isotonic_l1_integer(std::vector<double>{1, 3}) == DegreeSequence{2, 2});
    CHECK(isotonic_l1_integer(std::vector<double>{5, 1, 4}) == DegreeSequence{5, 2, 2});
    CHECK(isotonic_l1_integer(std::vector<double>{-0.7}) == DegreeSequence{-1});
    CHECK(isotonic_l1_integer(std::vector<double>{2.5}) == DegreeSequence{2}); // halfway goes down
    CHECK_THROWS_AS(isotonic_l1_integer(std::vector<double>{}), InvalidArgument);
    CHECK_THROWS_AS(isotonic_l1_integer(std::vector<double>{NAN}), InvalidArgument);
}

TEST_CASE("isotonic optimal against enumeration, n <= 6, entries in [0, 6]") {
    Rng rng(21);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 150; ++trial) {
            std::vector<double> z = random_real(rng, n, 0.0, 6.0);
            if (trial % 3 == 0)
                for (double& x : z) x = std::round(x);
            const DegreeSequence w = isotonic_l1_integer(z);
            CHECK(non_increasing(w));
            CHECK(cost(w, z) <= oracle::brute_isotonic_cost(z, 0, 6) + 1e-9);
        }
    }
}

TEST_CASE("isotonic handles long inputs monotonically") {
    Rng rng(4);
    const std::vector<double> z = random_real(rng, 5000, -10.0, 10.0);
    CHECK(non_increasing(isotonic_l1_integer(z)));
}

TEST_CASE("project_to_graphical examples") {
    auto r = project_to_graphical(std::vector<double>{2, 2, 2});
    CHECK(r.sequence == DegreeSequence{2, 2, 2});
    CHECK(r.l1_cost == 0.0);
    CHECK(r.graph.edge_count() == 3);
    r = project_to_graphical(std::vector<double>{1, 1, 1});
    CHECK(r.l1_cost == 1.0);
    r = project_to_graphical(std::vector<double>{-0.5, 2.3, 1.2});
    CHECK(r.sequence == DegreeSequence{0, 1, 1});
    CHECK(r.l1_cost == doctest::Approx(2.0));
    r = project_to_graphical(std::vector<double>{0.444, 0.025});
    CHECK(r.sequence == DegreeSequence{0, 0});
    CHECK_THROWS_AS(project_to_graphical(std::vector<double>{INFINITY, 1}), InvalidArgument);
    CHECK(project_to_graphical(std::vector<double>{}).sequence.empty());
}

TEST_CASE("project_to_graphical matches the exhaustive optimum") {
    Rng rng(99);
    for (std::size_t n = 2; n <= 7; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            const std::vector<double> z = random_real(rng, n, -3.0, static_cast<double>(n));
            const ProjectionResult r = project_to_graphical(z);
            CHECK(degrees_of(r.graph) == r.sequence);
            CHECK(r.l1_cost == doctest::Approx(cost(r.sequence, z)).epsilon(1e-12));
            CHECK(std::fabs(r.l1_cost - oracle::brute_min_l1(z).cost) <= 1e-9);
            for (std::size_t i = 0; i < n; ++i) CHECK(r.sequence[i] <= std::max(0.0, std::ceil(z[i])));
        }
    }
}

TEST_CASE("the greedy alone is exact on integer targets, n <= 6") {
    Rng rng(5);
    for (std::size_t n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<double> z(n);
            for (double& x : z) x = static_cast<double>(static_cast<int>(rng() % (n + 3)) - 2);
            CHECK(greedy_star_projection(z).l1_cost == oracle::brute_min_l1(z).cost);
        }
    }
}

TEST_CASE("project_to_partition examples") {
    auto r = project_to_partition(DegreeSequence{3, 3, 3, 3});
    CHECK(r.sequence == DegreeSequence{3, 3, 3, 3});
    CHECK(r.l1_cost == 0.0);
    r = project_to_partition(DegreeSequence{5, 1});
    CHECK(r.sequence == DegreeSequence{1, 1});
    CHECK(r.l1_cost == 4.0);
    r = project_to_partition(DegreeSequence{4, 4, 4, 4});
    CHECK(r.l1_cost == 4.0);
    CHECK(r.sequence == DegreeSequence{3, 3, 3, 3});
    CHECK_THROWS_AS(project_to_partition(DegreeSequence{1, 2}), NotMonotone);
}

TEST_CASE("project_to_partition matches the partition oracle and stays sorted") {
    Rng rng(8);
    for (std::size_t n = 2; n <= 7; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            DegreeSequence c(n);
            for (auto& x : c) x = static_cast<degree_t>(rng() % (n + 4)) - 3;
            std::sort(c.begin(), c.end(), std::greater<>());
            const ProjectionResult r = project_to_partition(c);
            CHECK(non_increasing(r.sequence));
            CHECK(degrees_of(r.graph) == r.sequence);
            const std::vector<double> target(c.begin(), c.end());
            CHECK(r.l1_cost == oracle::brute_min_l1(target, oracle::Target::partitions).cost);
        }
    }
}

TEST_CASE("optimal_kstar examples") {
    auto s = optimal_kstar(std::vector<double>{2.3, 1.0, 1.0});
    CHECK(s.center == 0);
    CHECK(s.leaves == std::vector<node_t>{1, 2});
    s = optimal_kstar(std::vector<double>{0, 0, 0});
    CHECK(s.k() == 0);
    s = optimal_kstar(std::vector<double>{1.0, 0.2});
    CHECK(s.center == 0);
    CHECK(s.leaves == std::vector<node_t>{1});
    s = optimal_kstar(std::vector<double>{3, 2, 2}, {0});
    CHECK(s.center == 1);
    CHECK(s.leaves == std::vector<node_t>{2});
    CHECK_THROWS_AS(optimal_kstar(std::vector<double>{-1.0}), InvalidArgument);
}

TEST_CASE("optimal_kstar attains the best bounded k-star on integer targets") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 7;
        std::vector<double> z(n);
        for (double& x : z) x = static_cast<double>(rng() % n);
        const KStarSequence s = optimal_kstar(z);
        CHECK(cost(s.as_vector(n), z) == oracle::brute_best_kstar_cost(z));
    }
}

TEST_CASE("replaying the star replacement never increases the cost") {
    // Start from a random graphical d0 <= z with its Havel-Hakimi stars g_i;
    // swap g_k for the k-th optimal star x_k one at a time.
    Rng rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        std::vector<Edge> edges;
        for (node_t i = 0; i < n; ++i)
            for (node_t j = i + 1; j < n; ++j)
                if (rng() % 2) edges.emplace_back(i, j);
        const DegreeSequence d0 = degrees_of(SimpleGraph::from_edges(n, edges));
        std::vector<double> z(n);
        for (std::size_t i = 0; i < n; ++i) z[i] = static_cast<double>(d0[i] + static_cast<degree_t>(rng() % 3));

        const auto g = hh_decompose(d0);
        std::vector<KStarSequence> x;
        std::set<node_t> used;
        std::vector<double> residual = z;
        for (std::size_t k = 0; k < n; ++k) {
            KStarSequence s = optimal_kstar(residual, used);
            if (s.k() == 0) break;
            used.insert(s.center);
            residual[s.center] -= static_cast<double>(s.k());
            for (node_t v : s.leaves) residual[v] -= 1.0;
            for (double& r : residual) r = std::max(r, 0.0);
            x.push_back(std::move(s));
        }
        const auto sum_stars = [&](std::size_t k) {
            DegreeSequence d(n, 0);
            for (std::size_t i = 0; i < std::max(x.size(), g.size()); ++i) {
                const KStarSequence* s = i < k ? (i < x.size() ? &x[i] : nullptr) : (i < g.size() ? &g[i] : nullptr);
                if (!s) continue;
                const DegreeSequence v = s->as_vector(n);
                for (std::size_t j = 0; j < n; ++j) d[j] += v[j];
            }
            return d;
        };
        const std::size_t steps = std::max(x.size(), g.size());
        const DegreeSequence dn = sum_stars(steps);
        CHECK(cost(dn, z) <= cost(d0, z));
        CHECK(cost(dn, z) == greedy_star_projection(z).l1_cost);
    }
}

TEST_CASE("interior_adjust examples") {
    const DegreePartition c4({2, 2, 2, 2});
    CHECK(interior_adjust(c4, std::vector<double>{2.1, 2, 2, 1.9}) == c4);

    // Every one-move neighbour of K4 within ceil(z) changes the cost, so K4 comes back.
    const DegreePartition k4({3, 3, 3, 3});
    const std::vector<double> z{3.6, 3.5, 3.5, 3.4};
    CHECK(interior_adjust(k4, z) == k4);

    // A cost-neutral deletion exists here: z_3 + z_4 pull down as much as d_1 + d_2 push up.
    const DegreePartition d({3, 3, 3, 3});
    const std::vector<double> w{3.0, 3.0, 2.5, 2.5};
    const DegreePartition out = interior_adjust(d, w);
    CHECK(l1_distance(out.span(), w) == doctest::Approx(l1_distance(d.span(), w)));
    CHECK((out == DegreePartition({3, 3, 2, 2}) || out == d));
    CHECK_FALSE(mle_exists(DegreePartition({3, 3, 2, 2})).exists);
}

TEST_CASE("interior_adjust preserves the cost and graphicality") {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        std::vector<double> z = random_real(rng, n, -1.0, static_cast<double>(n));
        std::sort(z.begin(), z.end(), std::greater<>());
        if (trial % 2) for (double& v : z) v = std::round(v * 2) / 2;
        const DegreeSequence c = isotonic_l1_integer(z);
        const DegreePartition d(project_to_partition(c).sequence);
        const DegreePartition out = interior_adjust(d, z);
        CHECK(is_graphical(out.span()));
        CHECK(l1_distance(out.span(), z) == doctest::Approx(l1_distance(d.span(), z)).epsilon(1e-12));
        for (std::size_t i = 0; i < n; ++i) CHECK(out[i] <= std::max(d[i], static_cast<degree_t>(std::max(0.0, std::ceil(z[i])))));
    }
}

TEST_CASE("interior_repair") {
    // No interior graphical point exists for n <= 3.
    CHECK(interior_repair(DegreePartition({2, 2, 2}), std::vector<double>{2, 2, 2}) == DegreePartition({2, 2, 2}));
    const DegreePartition fixed = interior_repair(DegreePartition({3, 3, 3, 3}), std::vector<double>{3, 3, 3, 3});
    CHECK(fixed == DegreePartition({2, 2, 2, 2}));
    const DegreePartition isolated = interior_repair(DegreePartition({2, 2, 1, 1, 0}), std::vector<double>{2, 2, 2, 1, -1});
    CHECK(mle_exists(isolated).exists);
    CHECK(is_graphical(isolated.span()));

    Rng rng(3);
    std::size_t reached = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 4 + rng() % 10;
        std::vector<double> z = random_real(rng, n, -2.0, static_cast<double>(n + 1));
        std::sort(z.begin(), z.end(), std::greater<>());
        const DegreeSequence c = isotonic_l1_integer(z);
        const DegreePartition d(project_to_partition(c).sequence);
        const DegreePartition out = interior_repair(d, std::vector<double>(c.begin(), c.end()));
        CHECK(is_graphical(out.span()));
        if (mle_exists(out).exists) ++reached;
        else CHECK(out == d);
    }
    CHECK(reached > 250);
}

}
