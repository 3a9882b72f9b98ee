#include <gdp/errors.hpp>
#include <gdp/projection.hpp>

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <map>

namespace gdp {

namespace {

// Integer-restricted |x - z| is the piecewise-linear interpolation of |k - z|
// at integers, i.e. (ceil z - z)|x - floor z| + (z - floor z)|x - ceil z|, so
// the integer problem is weighted L1 isotonic regression on integer points.
//
// Slope trick on u = -x, which must be non-decreasing. `left` holds the
// breakpoints of h_i(u) = min over prefixes with u_i <= u, merged by position.
// Adding the two breakpoints of step i with doubled weight and removing unit
// weight from the top gives h_i; the removed run also yields the argmin
// interval [lo_i, hi_i] of the unconstrained step cost, used on the way back.
DegreeSequence fit(std::span<const double> z) {
    constexpr double kDust = 1e-12;
    const std::size_t n = z.size();
    std::map<degree_t, double> left;
    std::vector<degree_t> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double base = std::floor(z[i]);
        const double frac = z[i] - base;
        const auto f = static_cast<degree_t>(base);
        if (1.0 - frac > kDust) left[-f] += 2.0 * (1.0 - frac);
        if (frac > kDust) left[-f - 1] += 2.0 * frac;
        double excess = 1.0;
        for (;;) {
            const auto top = std::prev(left.end());
            hi[i] = top->first;
            if (top->second > excess + kDust) {
                top->second -= excess;
                break;
            }
            excess -= top->second;
            left.erase(top);
            if (excess <= kDust) break;
        }
        lo[i] = left.rbegin()->first;
    }

    // Ties go to the middle of the optimal range, then to the smaller degree.
    DegreeSequence out(n);
    degree_t cap = std::numeric_limits<degree_t>::max();
    for (std::size_t i = n; i-- > 0;) {
        degree_t u = cap;
        if (cap >= lo[i]) {
            const degree_t s = lo[i] + hi[i];
            const degree_t mid = s >= 0 ? (s + 1) / 2 : -((-s) / 2);
            u = std::clamp(mid, lo[i], std::min(hi[i], cap));
        }
        out[i] = -u;
        cap = u;
    }
    return out;
}

} // namespace

DegreeSequence isotonic_l1_integer(std::span<const double> z) {
    if (z.empty()) throw InvalidArgument("isotonic regression of an empty vector");
    for (double x : z)
        if (!std::isfinite(x) || std::fabs(x) > 1e15) throw InvalidArgument("non-finite or huge input value");

    return fit(z);
}

} // namespace gdp
