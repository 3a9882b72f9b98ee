#include <gdp/beta_model.hpp>
#include <gdp/errors.hpp>

#include <algorithm>
#include <cmath>

namespace gdp {

namespace {

double logistic(double x) {
    return x >= 0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
}

} // namespace

double edge_prob(const BetaParams& params, node_t i, node_t j) {
    if (i == j) throw SelfLoop("edge probability of a node with itself");
    return logistic(params.beta.at(i) + params.beta.at(j));
}

std::vector<double> expected_degrees(const BetaParams& params) {
    const std::size_t n = params.beta.size();
    std::vector<double> e(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double p = logistic(params.beta[i] + params.beta[j]);
            e[i] += p;
            e[j] += p;
        }
    return e;
}

std::string MleViolation::describe() const {
    switch (kind) {
    case Kind::zero_degree: return "degree at position " + std::to_string(index + 1) + " is 0";
    case Kind::full_degree: return "degree at position " + std::to_string(index + 1) + " is n-1";
    case Kind::top_bottom:
        return "top-" + std::to_string(k) + " minus bottom-" + std::to_string(l) + " sum reaches k(n-1-l)";
    }
    return {};
}

MleStatus mle_exists(const DegreePartition& d) {
    const std::size_t n = d.size();
    MleStatus status;
    if (n == 0) {
        status.violated_condition = MleViolation{MleViolation::Kind::zero_degree, 0, 0, 0};
        return status;
    }
    if (n == 1) { // no edge variables: the likelihood is constant
        status.exists = d[0] == 0;
        if (!status.exists) status.violated_condition = MleViolation{MleViolation::Kind::full_degree, 0, 0, 0};
        return status;
    }
    const auto top = static_cast<degree_t>(n - 1);
    if (d[0] >= top) {
        status.violated_condition = MleViolation{MleViolation::Kind::full_degree, 0, 0, 0};
        return status;
    }
    if (d[n - 1] <= 0) {
        status.violated_condition = MleViolation{MleViolation::Kind::zero_degree, n - 1, 0, 0};
        return status;
    }

    // bottom[l] = sum of the l smallest entries.
    std::vector<degree_t> bottom(n + 1, 0);
    for (std::size_t l = 1; l <= n; ++l) bottom[l] = bottom[l - 1] + d[n - l];

    // For fixed k, k*l - bottom[l] grows while the next-smallest entry is below
    // k, so the worst l is min(#{entries < k}, n - k).
    std::size_t at_least_k = n; // #{i : d_i >= k}, non-increasing in k
    degree_t prefix = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        while (at_least_k > 0 && d[at_least_k - 1] < static_cast<degree_t>(k)) --at_least_k;
        const std::size_t l = std::min(n - at_least_k, n - k);
        const auto bound = static_cast<degree_t>(k) * (static_cast<degree_t>(n) - 1 - static_cast<degree_t>(l));
        if (prefix - bottom[l] >= bound) {
            status.violated_condition = MleViolation{MleViolation::Kind::top_bottom, 0, k, l};
            return status;
        }
    }
    status.exists = true;
    return status;
}

namespace detail {

bool mle_exists_all_pairs(const DegreePartition& d) {
    const std::size_t n = d.size();
    if (n < 2) return n == 1 && d[0] == 0;
    for (std::size_t i = 0; i < n; ++i)
        if (d[i] <= 0 || d[i] >= static_cast<degree_t>(n - 1)) return false;
    std::vector<degree_t> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + d[i];
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t l = 0; k + l <= n; ++l) {
            const degree_t lhs = prefix[k] - (prefix[n] - prefix[n - l]);
            if (lhs >= static_cast<degree_t>(k) * static_cast<degree_t>(n - 1 - l)) return false;
        }
    return true;
}

} // namespace detail

BetaFit fit_beta(const DegreePartition& d, const FitOptions& options) {
    if (!mle_exists(d).exists) throw MleDoesNotExist("beta-model MLE does not exist for this partition");
    const std::size_t n = d.size();
    if (n == 1) return BetaFit{BetaParams{{0.0}}, 0, 0.0, {}};

    // Group equal degrees: value[g] with multiplicity count[g].
    std::vector<double> value;
    std::vector<double> count;
    std::vector<std::size_t> group_of(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 || d[i] != d[i - 1]) {
            value.push_back(static_cast<double>(d[i]));
            count.push_back(0.0);
        }
        count.back() += 1.0;
        group_of[i] = value.size() - 1;
    }
    const std::size_t groups = value.size();

    std::vector<double> beta(groups, 0.0), next(groups), expected(groups);
    auto compute_expected = [&](const std::vector<double>& b) {
        double worst = 0.0;
        for (std::size_t g = 0; g < groups; ++g) {
            double e = 0.0;
            for (std::size_t h = 0; h < groups; ++h) {
                const double others = count[h] - (h == g ? 1.0 : 0.0);
                if (others > 0) e += others * logistic(b[g] + b[h]);
            }
            expected[g] = e;
            worst = std::max(worst, std::fabs(e - value[g]));
        }
        return worst;
    };

    BetaFit fit;
    double residual = compute_expected(beta);
    while (residual > options.tol) {
        if (fit.iterations >= options.max_iter)
            throw NoConvergence("beta fit did not reach tolerance in " + std::to_string(options.max_iter) +
                                " iterations (residual " + std::to_string(residual) + ")");
        for (std::size_t g = 0; g < groups; ++g) {
            double s = 0.0;
            for (std::size_t h = 0; h < groups; ++h) {
                const double others = count[h] - (h == g ? 1.0 : 0.0);
                if (others > 0) s += others / (std::exp(-beta[h]) + std::exp(beta[g]));
            }
            next[g] = std::log(value[g]) - std::log(s);
        }
        beta.swap(next);
        residual = compute_expected(beta);
        ++fit.iterations;
        fit.residual_history.push_back(residual);
    }
    fit.residual = residual;
    fit.params.beta.resize(n);
    for (std::size_t i = 0; i < n; ++i) fit.params.beta[i] = beta[group_of[i]];
    return fit;
}

} // namespace gdp
