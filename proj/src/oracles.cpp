#include <gdp/oracles.hpp>

#include "simplex.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

namespace gdp::oracle {

namespace {

void require_small(std::size_t n, std::size_t cap) {
    if (n > cap) throw TooLarge("oracle limited to n <= " + std::to_string(cap) + ", got " + std::to_string(n));
}

Vec sorted_desc(Vec v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

double dot(const std::vector<double>& c, const Vec& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += c[i] * v[i];
    return s;
}

// Returns max_v c.v and a maximiser.
using Separation = std::function<std::pair<double, Vec>(const std::vector<double>&)>;

bool relative_interior_lp(const Vec& d, const std::vector<double>& centre, const Separation& separate) {
    constexpr double kTol = 1e-9;
    const std::size_t n = d.size();
    // Variables p (n) then q (n); c = p - q, 0 <= p, q <= 1.
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        std::vector<double> row(2 * n, 0.0);
        row[i] = 1.0;
        a.push_back(row);
        b.push_back(1.0);
    }
    std::vector<double> objective(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        objective[i] = d[i] - centre[i];
        objective[n + i] = -(d[i] - centre[i]);
    }
    for (;;) {
        const detail::LpResult lp = detail::simplex_max(a, b, objective);
        if (!lp.bounded) return false;
        std::vector<double> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = lp.x[i] - lp.x[n + i];
        std::vector<double> dd(d.begin(), d.end());
        const double at_d = std::inner_product(c.begin(), c.end(), dd.begin(), 0.0);
        auto [best, v] = separate(c);
        if (best > at_d + kTol) {
            std::vector<double> row(2 * n);
            for (std::size_t i = 0; i < n; ++i) {
                row[i] = v[i] - d[i];
                row[n + i] = -(v[i] - d[i]);
            }
            a.push_back(std::move(row));
            b.push_back(0.0);
            continue;
        }
        return lp.value <= kTol;
    }
}

} // namespace

EnumeratedSpace::EnumeratedSpace(std::size_t n) : n_(n) {
    require_small(n, kMaxNodes);
    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = i + 1; j < static_cast<int>(n); ++j) pairs_.emplace_back(i, j);
    std::set<Vec> seqs;
    for (std::uint64_t mask = 0; mask < graph_count(); ++mask) seqs.insert(degrees(mask));
    sequences_.assign(seqs.begin(), seqs.end());
    std::set<Vec> parts;
    for (const Vec& s : sequences_) parts.insert(sorted_desc(s));
    partitions_.assign(parts.begin(), parts.end());
}

Vec EnumeratedSpace::degrees(std::uint64_t mask) const {
    Vec d(n_, 0);
    for (std::size_t e = 0; e < pairs_.size(); ++e) {
        if (mask >> e & 1U) {
            ++d[static_cast<std::size_t>(pairs_[e].first)];
            ++d[static_cast<std::size_t>(pairs_[e].second)];
        }
    }
    return d;
}

const EnumeratedSpace& space(std::size_t n) {
    require_small(n, kMaxNodes);
    static std::array<std::unique_ptr<EnumeratedSpace>, kMaxNodes + 1> cache;
    static std::array<std::once_flag, kMaxNodes + 1> once;
    std::call_once(once[n], [n] { cache[n] = std::make_unique<EnumeratedSpace>(n); });
    return *cache[n];
}

MinL1 brute_min_l1(const std::vector<double>& z, Target target) {
    const EnumeratedSpace& s = space(z.size());
    const auto& candidates = target == Target::sequences ? s.sequences() : s.partitions();
    MinL1 best{std::numeric_limits<double>::infinity(), {}};
    for (const Vec& h : candidates) {
        double cost = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) cost += std::fabs(h[i] - z[i]);
        if (cost < best.cost) best = {cost, h};
    }
    return best;
}

bool relative_interior(const Vec& d, const std::vector<Vec>& points) {
    if (points.empty()) return false;
    const std::size_t n = d.size();
    std::vector<double> centre(n, 0.0);
    for (const Vec& v : points)
        for (std::size_t i = 0; i < n; ++i) centre[i] += v[i];
    for (double& x : centre) x /= static_cast<double>(points.size());
    return relative_interior_lp(d, centre, [&](const std::vector<double>& c) {
        std::pair<double, Vec> best{-std::numeric_limits<double>::infinity(), {}};
        for (const Vec& v : points) {
            const double val = dot(c, v);
            if (val > best.first) best = {val, v};
        }
        return best;
    });
}

bool brute_relative_interior(const Vec& d, Target hull) {
    const EnumeratedSpace& s = space(d.size());
    if (hull == Target::partitions) return relative_interior(d, s.partitions());

    // The sequence set is closed under relabelling: its centroid is constant
    // and max_v c.v pairs sorted c with each partition.
    const std::size_t n = d.size();
    double total = 0.0;
    for (const Vec& v : s.sequences())
        for (int x : v) total += x;
    const std::vector<double> centre(n, total / static_cast<double>(s.sequences().size() * std::max<std::size_t>(n, 1)));
    return relative_interior_lp(d, centre, [&](const std::vector<double>& c) {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return c[a] > c[b]; });
        std::pair<double, Vec> best{-std::numeric_limits<double>::infinity(), {}};
        for (const Vec& p : s.partitions()) {
            Vec v(n);
            for (std::size_t r = 0; r < n; ++r) v[order[r]] = p[r];
            const double val = dot(c, v);
            if (val > best.first) best = {val, v};
        }
        return best;
    });
}

int brute_sensitivity(std::size_t n) {
    require_small(n, 5);
    const EnumeratedSpace& s = space(n);
    int worst = 0;
    for (std::uint64_t mask = 0; mask < s.graph_count(); ++mask) {
        const Vec a = sorted_desc(s.degrees(mask));
        for (std::size_t e = 0; e < s.pairs().size(); ++e) {
            const Vec b = sorted_desc(s.degrees(mask ^ (std::uint64_t{1} << e)));
            int dist = 0;
            for (std::size_t i = 0; i < n; ++i) dist += std::abs(a[i] - b[i]);
            worst = std::max(worst, dist);
        }
    }
    return worst;
}

bool erdos_gallai(Vec d) {
    const auto n = static_cast<long long>(d.size());
    long long sum = 0;
    for (int x : d) {
        if (x < 0 || x > n - 1) return false;
        sum += x;
    }
    if (sum % 2 != 0) return false;
    d = sorted_desc(std::move(d));
    long long left = 0;
    for (long long k = 1; k <= n; ++k) {
        left += d[static_cast<std::size_t>(k - 1)];
        long long right = k * (k - 1);
        for (long long i = k; i < n; ++i) right += std::min<long long>(d[static_cast<std::size_t>(i)], k);
        if (left > right) return false;
    }
    return true;
}

double brute_isotonic_cost(const std::vector<double>& z, int lo, int hi) {
    double best = std::numeric_limits<double>::infinity();
    Vec w(z.size());
    std::function<void(std::size_t, int, double)> walk = [&](std::size_t i, int ceiling, double cost) {
        if (cost >= best) return;
        if (i == z.size()) {
            best = cost;
            return;
        }
        for (int v = lo; v <= ceiling; ++v) walk(i + 1, v, cost + std::fabs(v - z[i]));
    };
    walk(0, hi, 0.0);
    return best;
}

std::uint64_t dense_triangles(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::uint64_t> a(n * n, 0), a2(n * n, 0);
    for (auto [u, v] : edges) {
        a[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
        a[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i * n + k])
                for (std::size_t j = 0; j < n; ++j) a2[i * n + j] += a[k * n + j];
    std::uint64_t trace = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) trace += a2[i * n + k] * a[k * n + i];
    return trace / 6;
}

std::vector<std::uint64_t> realizations(const Vec& d) {
    const EnumeratedSpace& s = space(d.size());
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < s.graph_count(); ++mask)
        if (s.degrees(mask) == d) out.push_back(mask);
    return out;
}

double brute_best_kstar_cost(const std::vector<double>& z) {
    const std::size_t n = z.size();
    require_small(n, 16);
    Vec cap(n);
    double empty = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cap[i] = static_cast<int>(std::ceil(z[i]));
        empty += std::fabs(z[i]);
    }
    double best = empty;
    for (std::size_t centre = 0; centre < n; ++centre) {
        for (std::uint32_t leaves = 1; leaves < (1U << n); ++leaves) {
            if (leaves >> centre & 1U) continue;
            const int k = std::popcount(leaves);
            if (k > cap[centre]) continue;
            double cost = 0.0;
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                const int g = i == centre ? k : static_cast<int>(leaves >> i & 1U);
                if (g > cap[i]) ok = false;
                cost += std::fabs(z[i] - g);
            }
            if (ok) best = std::min(best, cost);
        }
    }
    return best;
}

} // namespace gdp::oracle
