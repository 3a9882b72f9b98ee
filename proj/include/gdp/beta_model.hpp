#pragma once

#include <gdp/graph.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gdp {

/// One beta-model parameter per node.
struct BetaParams {
    std::vector<double> beta;
};

/// p_ij = logistic(beta_i + beta_j). Throws SelfLoop if i == j.
double edge_prob(const BetaParams& params, node_t i, node_t j);

/// Sum over j != i of edge_prob(i, j), for every i.
std::vector<double> expected_degrees(const BetaParams& params);

/// The first inequality found violated by mle_exists.
struct MleViolation {
    enum class Kind { zero_degree, full_degree, top_bottom };
    Kind kind;
    std::size_t index = 0; // offending position for zero_degree / full_degree
    std::size_t k = 0;     // for top_bottom: sum of top k minus sum of bottom l
    std::size_t l = 0;     //   must stay below k (n - 1 - l)

    std::string describe() const;
};

struct MleStatus {
    bool exists = false;
    std::optional<MleViolation> violated_condition;
};

/// Existence of the beta-model MLE for a degree partition: every degree in
/// (0, n-1), and for all k >= 1, l >= 0, k + l <= n,
///   sum_{i<=k} d_i - sum_{i>n-l} d_i < k (n - 1 - l).
/// For each k only the worst l is checked (bottom entries below k), so the
/// test is O(n). A single node has no edges to fit and always passes; an
/// empty partition fails.
///
/// Entries are not required to be graphical or even to lie in [0, n-1];
/// out-of-range entries simply fail the first condition.
MleStatus mle_exists(const DegreePartition& d);

namespace detail {
/// Same predicate, enumerating every (k, l) pair; O(n^2). Test cross-check.
bool mle_exists_all_pairs(const DegreePartition& d);
} // namespace detail

struct FitOptions {
    double tol = 1e-10;        // on max_i |expected_i - d_i|
    std::size_t max_iter = 5000;
};

struct BetaFit {
    BetaParams params;
    std::size_t iterations = 0;
    double residual = 0.0;                // max degree residual at exit
    std::vector<double> residual_history; // one entry per iteration
};

/// Maximum likelihood beta for a partition by the fixed-point map
///   beta_i <- log d_i - log sum_{j != i} 1 / (exp(-beta_j) + exp(beta_i))
/// started from zero. Nodes of equal degree share a parameter, so each
/// iteration costs O(D^2) for D distinct degrees.
/// Throws MleDoesNotExist, or NoConvergence after max_iter iterations.
BetaFit fit_beta(const DegreePartition& d, const FitOptions& options = {});

} // namespace gdp
