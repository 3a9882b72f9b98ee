#include <gdp/errors.hpp>
#include <gdp/graph.hpp>

#include "residual_buckets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gdp {

DegreePartition::DegreePartition(std::vector<degree_t> degrees) : degrees_(std::move(degrees)) {
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (degrees_[i] < 0) throw OutOfRange("negative degree at position " + std::to_string(i));
        if (i > 0 && degrees_[i] > degrees_[i - 1])
            throw NotMonotone("partition increases at position " + std::to_string(i));
    }
}

DegreePartition DegreePartition::from_unsorted(std::vector<degree_t> d) {
    std::sort(d.begin(), d.end(), std::greater<>());
    return DegreePartition(std::move(d));
}

degree_t DegreePartition::sum() const noexcept {
    return std::accumulate(degrees_.begin(), degrees_.end(), degree_t{0});
}

SimpleGraph SimpleGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
        if (u == v) throw InvalidArgument("self-loop on node " + std::to_string(u));
        ++g.offset_[u + 1];
        ++g.offset_[v + 1];
    }
    for (std::size_t v = 0; v < n; ++v) g.offset_[v + 1] += g.offset_[v];
    g.neighbor_.resize(2 * edges.size());
    std::vector<std::size_t> fill(g.offset_.begin(), g.offset_.end() - 1);
    for (auto [u, v] : edges) {
        g.neighbor_[fill[u]++] = v;
        g.neighbor_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        const auto first = g.neighbor_.begin() + static_cast<std::ptrdiff_t>(g.offset_[v]);
        const auto last = g.neighbor_.begin() + static_cast<std::ptrdiff_t>(g.offset_[v + 1]);
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last) throw InvalidArgument("duplicate edge at node " + std::to_string(v));
    }
    g.edge_count_ = edges.size();
    return g;
}

bool SimpleGraph::has_edge(node_t u, node_t v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    const auto a = neighbors(u);
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (node_t u = 0; u < node_count(); ++u)
        for (node_t v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

SimpleGraph SimpleGraph::relabeled(std::span<const node_t> new_id) const {
    std::vector<Edge> renamed;
    renamed.reserve(edge_count_);
    for (auto [u, v] : edges()) renamed.emplace_back(new_id[u], new_id[v]);
    return from_edges(node_count(), renamed);
}

DegreeSequence degrees_of(const SimpleGraph& g) {
    DegreeSequence d(g.node_count());
    for (node_t v = 0; v < d.size(); ++v) d[v] = static_cast<degree_t>(g.degree(v));
    return d;
}

std::uint64_t count_triangles(const SimpleGraph& g) {
    // Orient every edge towards the endpoint of higher (degree, id) rank; each
    // triangle is then found exactly once from its lowest-ranked corner.
    const std::size_t n = g.node_count();
    auto before = [&](node_t a, node_t b) {
        return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a < b);
    };
    std::vector<std::vector<node_t>> out(n);
    for (node_t u = 0; u < n; ++u) {
        for (node_t v : g.neighbors(u))
            if (before(u, v)) out[u].push_back(v);
    }
    std::vector<char> mark(n, 0);
    std::uint64_t triangles = 0;
    for (node_t u = 0; u < n; ++u) {
        for (node_t v : out[u]) mark[v] = 1;
        for (node_t v : out[u])
            for (node_t w : out[v]) triangles += mark[w];
        for (node_t v : out[u]) mark[v] = 0;
    }
    return triangles;
}

DegreeDistribution degree_distribution(std::span<const degree_t> d) {
    const auto n = static_cast<degree_t>(d.size());
    DegreeDistribution dist{std::vector<std::size_t>(d.size(), 0)};
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0 || d[i] > n - 1)
            throw OutOfRange("degree " + std::to_string(d[i]) + " at node " + std::to_string(i) +
                             " outside [0, n-1]");
        ++dist.counts[static_cast<std::size_t>(d[i])];
    }
    return dist;
}

namespace {

bool plausible(std::span<const degree_t> d) {
    const auto n = static_cast<degree_t>(d.size());
    degree_t sum = 0;
    for (degree_t x : d) {
        if (x < 0 || x > n - 1) return false;
        sum += x;
    }
    return sum % 2 == 0;
}

// Repeated Havel-Hakimi reduction: the node of largest residual k is joined to
// the k other nodes of largest residual. `on_star` sees each reduction.
template <class OnStar>
bool havel_hakimi(std::span<const degree_t> d, OnStar&& on_star) {
    if (!plausible(d)) return false;
    detail::ResidualBuckets buckets(d);
    std::vector<node_t> leaves;
    while (buckets.positive_count() > 0) {
        const node_t center = buckets.top();
        const auto k = static_cast<std::size_t>(buckets.residual(center));
        buckets.remove(center);
        if (k > buckets.positive_count()) return false;
        leaves.clear();
        buckets.take_and_decrement(k, leaves);
        on_star(center, leaves);
    }
    return true;
}

} // namespace

bool is_graphical(std::span<const degree_t> d) {
    return havel_hakimi(d, [](node_t, const std::vector<node_t>&) {});
}

SimpleGraph hh_realize(std::span<const degree_t> d) {
    std::vector<Edge> edges;
    const bool ok = havel_hakimi(d, [&](node_t c, const std::vector<node_t>& leaves) {
        for (node_t v : leaves) edges.emplace_back(c, v);
    });
    if (!ok) throw NotGraphical("degree sequence is not graphical");
    return SimpleGraph::from_edges(d.size(), edges);
}

DegreeSequence KStarSequence::as_vector(std::size_t n) const {
    DegreeSequence v(n, 0);
    v[center] = static_cast<degree_t>(leaves.size());
    for (node_t leaf : leaves) v[leaf] = 1;
    return v;
}

std::vector<KStarSequence> hh_decompose(std::span<const degree_t> d) {
    std::vector<KStarSequence> stars;
    const bool ok = havel_hakimi(d, [&](node_t c, const std::vector<node_t>& leaves) {
        KStarSequence s{c, leaves};
        std::sort(s.leaves.begin(), s.leaves.end());
        stars.push_back(std::move(s));
    });
    if (!ok) throw NotGraphical("degree sequence is not graphical");
    return stars;
}

} // namespace gdp
