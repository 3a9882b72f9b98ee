#pragma once

// Dense primal simplex for  max c.x  s.t.  A x <= b, x >= 0  with b >= 0, so
// the slack basis is feasible. Bland's rule; small problems only.

#include <vector>

namespace gdp::oracle::detail {

struct LpResult {
    bool bounded = true;
    double value = 0.0;
    std::vector<double> x;
};

LpResult simplex_max(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                     const std::vector<double>& c);

} // namespace gdp::oracle::detail
