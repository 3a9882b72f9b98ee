#include <doctest.h>

#include <gdp/errors.hpp>
#include <gdp/graph.hpp>
#include <gdp/karate.hpp>
#include <gdp/noise.hpp>
#include <gdp/oracles.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

using namespace gdp;

namespace {

SimpleGraph complete(std::size_t n) {
    std::vector<Edge> e;
    for (node_t i = 0; i < n; ++i)
        for (node_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return SimpleGraph::from_edges(n, e);
}

SimpleGraph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (node_t i = 0; i < n; ++i) e.emplace_back(i, static_cast<node_t>((i + 1) % n));
    return SimpleGraph::from_edges(n, e);
}

DegreeSequence sorted_desc(DegreeSequence d) {
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

std::vector<std::pair<int, int>> as_pairs(const SimpleGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges()) out.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return out;
}

} // namespace

TEST_SUITE("graph-core") {

TEST_CASE("degrees_of") {
    CHECK(degrees_of(complete(3)) == DegreeSequence{2, 2, 2});
    CHECK(degrees_of(SimpleGraph(4)) == DegreeSequence{0, 0, 0, 0});
    CHECK(degrees_of(cycle(4)) == DegreeSequence{2, 2, 2, 2});
}

TEST_CASE("SimpleGraph invariants") {
    const SimpleGraph g = SimpleGraph::from_edges(4, std::vector<Edge>{{2, 0}, {1, 2}, {3, 1}});
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}, {1, 3}});
    std::size_t total = 0;
    for (node_t v = 0; v < 4; ++v) {
        total += g.degree(v);
        for (node_t u : g.neighbors(v)) CHECK(g.has_edge(u, v));
    }
    CHECK(total == 2 * g.edge_count());
    CHECK_THROWS_AS(SimpleGraph::from_edges(3, std::vector<Edge>{{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(SimpleGraph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(SimpleGraph::from_edges(3, std::vector<Edge>{{0, 3}}), InvalidArgument);
}

TEST_CASE("relabeled keeps structure") {
    const SimpleGraph g = SimpleGraph::from_edges(3, std::vector<Edge>{{0, 1}});
    const std::vector<node_t> perm{2, 0, 1};
    const SimpleGraph h = g.relabeled(perm);
    CHECK(h.has_edge(2, 0));
    CHECK(h.edge_count() == 1);
}

TEST_CASE("is_graphical examples") {
    CHECK(is_graphical(DegreeSequence{2, 2, 2}));
    CHECK_FALSE(is_graphical(DegreeSequence{1, 1, 1}));
    CHECK_FALSE(is_graphical(DegreeSequence{3, 3, 1, 1}));
    CHECK(is_graphical(DegreeSequence{}));
    CHECK(is_graphical(DegreeSequence{0}));
    CHECK_FALSE(is_graphical(DegreeSequence{1}));
    CHECK_FALSE(is_graphical(DegreeSequence{-1, 1}));
    CHECK(is_graphical(DegreeSequence{3, 1, 1, 1, 0, 0}));
    CHECK(is_graphical(DegreeSequence{1, 2, 1})); // unsorted input
}

TEST_CASE("is_graphical agrees with Erdos-Gallai on every vector in [0, n-1]^n, n <= 7") {
    for (std::size_t n = 1; n <= 7; ++n) {
        DegreeSequence d(n, 0);
        oracle::Vec v(n, 0);
        std::size_t disagreements = 0;
        for (;;) {
            for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(d[i]);
            disagreements += is_graphical(d) != oracle::erdos_gallai(v);
            std::size_t i = 0;
            while (i < n && d[i] == static_cast<degree_t>(n) - 1) d[i++] = 0;
            if (i == n) break;
            ++d[i];
        }
        CAPTURE(n);
        CHECK(disagreements == 0);
    }
}

TEST_CASE("hh_realize") {
    const SimpleGraph t = hh_realize(DegreePartition({2, 2, 2}));
    CHECK(count_triangles(t) == 1);
    CHECK(hh_realize(DegreePartition({0, 0, 0})).edge_count() == 0);
    const SimpleGraph g = hh_realize(DegreePartition({3, 2, 2, 2, 1}));
    CHECK(sorted_desc(degrees_of(g)) == DegreeSequence{3, 2, 2, 2, 1});
    CHECK_THROWS_AS(hh_realize(DegreePartition({3, 3, 1, 1})), NotGraphical);
    // Unsorted sequences keep node identities.
    const DegreeSequence unsorted{1, 3, 2, 2, 0, 2};
    CHECK(degrees_of(hh_realize(unsorted)) == unsorted);
}

TEST_CASE("round trip on every graphical partition, n <= 7") {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const oracle::Vec& p : oracle::space(n).partitions()) {
            const DegreePartition d(DegreeSequence(p.begin(), p.end()));
            CHECK(is_graphical(d.span()));
            CHECK(sorted_desc(degrees_of(hh_realize(d))) == d.values());
        }
    }
}

TEST_CASE("count_triangles") {
    CHECK(count_triangles(complete(3)) == 1);
    CHECK(count_triangles(complete(4)) == 4);
    CHECK(count_triangles(cycle(4)) == 0);
    CHECK(count_triangles(karate_graph()) == 45);
}

TEST_CASE("count_triangles matches trace(A^3)/6 on random graphs, n <= 50") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 50;
        const double p = uniform_open01(rng);
        std::vector<Edge> e;
        for (node_t i = 0; i < n; ++i)
            for (node_t j = i + 1; j < n; ++j)
                if (uniform_open01(rng) < p) e.emplace_back(i, j);
        const SimpleGraph g = SimpleGraph::from_edges(n, e);
        CHECK(count_triangles(g) == oracle::dense_triangles(n, as_pairs(g)));
    }
}

TEST_CASE("degree_distribution") {
    auto p = degree_distribution(DegreeSequence{2, 2, 2}).counts;
    CHECK(p == std::vector<std::size_t>{0, 0, 3});
    p = degree_distribution(DegreeSequence{0, 1, 1}).counts;
    CHECK(p == std::vector<std::size_t>{1, 2, 0});
    CHECK_THROWS_AS(degree_distribution(DegreeSequence{3, 1, 1}), OutOfRange);
    CHECK_THROWS_AS(degree_distribution(DegreeSequence{-1, 1}), OutOfRange);

    const DegreeSequence kd = degrees_of(karate_graph());
    const auto counts = degree_distribution(kd).counts;
    CHECK(counts.size() == 34);
    CHECK(std::accumulate(counts.begin(), counts.end(), std::size_t{0}) == 34);
    std::vector<std::size_t> recount(34, 0);
    for (auto [u, v] : karate_edge_pairs()) {
        ++recount[static_cast<std::size_t>(u - 1)];
        ++recount[static_cast<std::size_t>(v - 1)];
    }
    std::vector<std::size_t> histogram(34, 0);
    for (std::size_t r : recount) ++histogram[r];
    CHECK(counts == histogram);
}

TEST_CASE("DegreePartition validation") {
    CHECK_THROWS_AS(DegreePartition({1, 2}), NotMonotone);
    CHECK_THROWS_AS(DegreePartition({1, -1}), OutOfRange);
    CHECK(DegreePartition::from_unsorted({1, 3, 2}).values() == DegreeSequence{3, 2, 1});
}

TEST_CASE("hh_decompose") {
    const auto stars = hh_decompose(DegreePartition({2, 2, 2}));
    REQUIRE(stars.size() == 2);
    CHECK(stars[0].center == 0);
    CHECK(stars[0].leaves == std::vector<node_t>{1, 2});
    CHECK(stars[1].leaves.size() == 1);
    CHECK(stars[0].as_vector(3) == DegreeSequence{2, 1, 1});
    CHECK(stars[1].as_vector(3) == DegreeSequence{0, 1, 1});
    CHECK(hh_decompose(DegreePartition({0, 0, 0})).empty());
    CHECK_THROWS_AS(hh_decompose(DegreePartition({3, 3, 1, 1})), NotGraphical);
}

TEST_CASE("decomposition sums to d for every graphical partition, n <= 7") {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const oracle::Vec& p : oracle::space(n).partitions()) {
            const DegreeSequence d(p.begin(), p.end());
            DegreeSequence sum(n, 0);
            for (const KStarSequence& s : hh_decompose(d)) {
                CHECK(s.k() > 0);
                CHECK(std::find(s.leaves.begin(), s.leaves.end(), s.center) == s.leaves.end());
                const DegreeSequence v = s.as_vector(n);
                for (std::size_t i = 0; i < n; ++i) sum[i] += v[i];
            }
            CHECK(sum == d);
        }
    }
}

TEST_CASE("karate dataset") {
    const SimpleGraph g = karate_graph();
    CHECK(g.node_count() == 34);
    CHECK(g.edge_count() == 78);
    CHECK(karate_partition().values() ==
          DegreeSequence{17, 16, 12, 10, 9, 6, 6, 5, 5, 5, 4, 4, 4, 4, 4, 4, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1});
    auto pairs = std::vector<std::pair<int, int>>(karate_edge_pairs().begin(), karate_edge_pairs().end());
    const auto good = edge_checksum(pairs);
    pairs[5].second += 1;
    CHECK(edge_checksum(pairs) != good);
}

}
