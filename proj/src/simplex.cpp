#include "simplex.hpp"

#include <cstddef>
#include <stdexcept>

namespace gdp::oracle::detail {

LpResult simplex_max(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                     const std::vector<double>& c) {
    constexpr double kEps = 1e-12;
    const std::size_t m = a.size(), n = c.size();
    // Tableau rows 0..m-1 constraints, row m objective (reduced costs negated).
    std::vector<std::vector<double>> t(m + 1, std::vector<double>(n + m + 1, 0.0));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) throw std::invalid_argument("simplex_max needs b >= 0");
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1.0;
        t[i][n + m] = b[i];
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

    for (;;) {
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (t[m][j] < -kEps) {
                enter = j;
                break;
            }
        }
        if (enter == n + m) break;
        std::size_t leave = m;
        double best = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= kEps) continue;
            const double ratio = t[i][n + m] / t[i][enter];
            if (leave == m || ratio < best - kEps || (ratio <= best + kEps && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) return {false, 0.0, {}};
        const double pivot = t[leave][enter];
        for (double& v : t[leave]) v /= pivot;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0.0) continue;
            const double f = t[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    LpResult r;
    r.value = t[m][n + m];
    r.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) r.x[basis[i]] = t[i][n + m];
    return r;
}

} // namespace gdp::oracle::detail
