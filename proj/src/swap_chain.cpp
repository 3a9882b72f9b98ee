#include <gdp/errors.hpp>
#include <gdp/swap_chain.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace gdp {

SwapChainConfig SwapChainConfig::defaults(std::size_t edge_count, std::uint64_t samples, std::uint64_t seed) {
    return SwapChainConfig{10 * edge_count, std::max<std::uint64_t>(1, edge_count), samples, seed};
}

SwapChain::SwapChain(const SimpleGraph& start, std::uint64_t seed)
    : edges_(start.edges()), adjacency_(start.node_count(), 0), rng_(seed) {
    present_.reserve(edges_.size() * 2);
    for (auto [u, v] : edges_) {
        present_.insert(key(u, v));
        ++adjacency_[u];
        ++adjacency_[v];
    }
}

bool SwapChain::has_edge(node_t u, node_t v) const { return present_.contains(key(u, v)); }

void SwapChain::replace(std::size_t slot, node_t u, node_t v) {
    present_.erase(key(edges_[slot].first, edges_[slot].second));
    edges_[slot] = {u, v};
    present_.insert(key(u, v));
}

bool SwapChain::propose() {
    const std::size_t m = edges_.size();
    if (m < 2) return false;
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    const std::size_t i = pick(rng_);
    std::size_t j = pick(rng_);
    const bool flip = (rng_() >> 63) != 0;
    if (i == j) return false;
    auto [a, b] = edges_[i];
    auto [c, d] = edges_[j];
    if (flip) std::swap(c, d);
    // (a,b),(c,d) -> (a,c),(b,d)
    if (a == c || a == d || b == c || b == d) return false;
    if (has_edge(a, c) || has_edge(b, d)) return false;
    replace(i, a, c);
    replace(j, b, d);
    return true;
}

SimpleGraph SwapChain::snapshot() const { return SimpleGraph::from_edges(adjacency_.size(), edges_); }

DegreeSequence SwapChain::degrees() const {
    DegreeSequence d(adjacency_.size(), 0);
    for (auto [u, v] : edges_) {
        ++d[u];
        ++d[v];
    }
    return d;
}

EmpiricalNull sample_chain(const DegreePartition& d, const SwapChainConfig& config,
                           const std::function<void(const SimpleGraph&)>& observer) {
    if (config.thinning < 1) throw InvalidArgument("thinning must be >= 1");
    if (config.samples < 1) throw InvalidArgument("samples must be >= 1");
    SwapChain chain(hh_realize(d), config.seed);
    for (std::uint64_t t = 0; t < config.burn_in; ++t) chain.propose();

    EmpiricalNull null{{}, d, config};
    null.statistic_values.reserve(config.samples);
    for (std::uint64_t s = 0; s < config.samples; ++s) {
        if (s > 0)
            for (std::uint64_t t = 0; t < config.thinning; ++t) chain.propose();
        const SimpleGraph g = chain.snapshot();
        null.statistic_values.push_back(count_triangles(g));
        if (observer) observer(g);
    }
    return null;
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw InvalidArgument("quantile of an empty sample");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

NullSummary null_summary(const EmpiricalNull& null) {
    NullSummary s;
    const auto& v = null.statistic_values;
    if (v.empty()) return s;
    s.min = *std::min_element(v.begin(), v.end());
    s.max = *std::max_element(v.begin(), v.end());
    std::vector<double> values(v.begin(), v.end());
    double total = 0.0;
    for (double x : values) total += x;
    s.mean = total / static_cast<double>(values.size());
    s.q025 = quantile(values, 0.025);
    s.q500 = quantile(values, 0.5);
    s.q975 = quantile(values, 0.975);
    for (auto t : v) ++s.histogram[t];
    return s;
}

double empirical_pvalue(const EmpiricalNull& null, std::uint64_t observed) {
    const auto& v = null.statistic_values;
    if (v.empty()) throw InvalidArgument("empty null distribution");
    const auto upper = static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [&](auto t) { return t >= observed; }));
    const auto lower = static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [&](auto t) { return t <= observed; }));
    return static_cast<double>(1 + std::min(upper, lower)) / static_cast<double>(v.size() + 1);
}

double null_overlap(const EmpiricalNull& a, const EmpiricalNull& b) {
    const auto ha = null_summary(a).histogram;
    const auto hb = null_summary(b).histogram;
    const auto na = static_cast<double>(a.statistic_values.size());
    const auto nb = static_cast<double>(b.statistic_values.size());
    double overlap = 0.0;
    for (auto [t, count] : ha) {
        const auto it = hb.find(t);
        if (it != hb.end()) overlap += std::min(static_cast<double>(count) / na, static_cast<double>(it->second) / nb);
    }
    return overlap;
}

void write_null_csv(std::ostream& out, const EmpiricalNull& null) {
    out << "sample_index,triangles\n";
    for (std::size_t i = 0; i < null.statistic_values.size(); ++i) out << i << ',' << null.statistic_values[i] << '\n';
}

} // namespace gdp
