#include <gdp/beta_model.hpp>
#include <gdp/errors.hpp>
#include <gdp/projection.hpp>

#include "residual_buckets.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <tuple>

namespace gdp {

double l1_distance(std::span<const degree_t> h, std::span<const double> z) {
    if (h.size() != z.size()) throw InvalidArgument("length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) s += std::fabs(static_cast<double>(h[i]) - z[i]);
    return s;
}

double l1_distance(std::span<const degree_t> h, std::span<const degree_t> z) {
    if (h.size() != z.size()) throw InvalidArgument("length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) s += static_cast<double>(std::llabs(h[i] - z[i]));
    return s;
}

namespace {

void require_finite(std::span<const double> z) {
    for (double x : z)
        if (!std::isfinite(x)) throw InvalidArgument("non-finite input value");
}

bool all_integer(std::span<const double> z) {
    return std::all_of(z.begin(), z.end(), [](double x) { return std::floor(x) == x; });
}

// Cost change of moving h_i by `step` (+-1 or +-2).
double shift_cost(degree_t h, double z, degree_t step) {
    return std::fabs(z - static_cast<double>(h + step)) - std::fabs(z - static_cast<double>(h));
}

struct Move {
    double delta;
    std::size_t i, j;
    degree_t si, sj;
};

// Applies the most improving graphical 2-step move until none improves.
void refine_to_local_optimum(DegreeSequence& h, std::span<const double> z) {
    constexpr double kEps = 1e-12;
    const std::size_t n = h.size();
    std::vector<Move> moves;
    for (;;) {
        moves.clear();
        for (std::size_t i = 0; i < n; ++i) {
            for (degree_t s : {degree_t{2}, degree_t{-2}}) {
                const double d = shift_cost(h[i], z[i], s);
                if (d < -kEps && h[i] + s >= 0) moves.push_back({d, i, i, s, 0});
            }
            for (std::size_t j = i + 1; j < n; ++j) {
                for (degree_t si : {degree_t{1}, degree_t{-1}}) {
                    if (h[i] + si < 0) continue;
                    for (degree_t sj : {degree_t{1}, degree_t{-1}}) {
                        if (h[j] + sj < 0) continue;
                        const double d = shift_cost(h[i], z[i], si) + shift_cost(h[j], z[j], sj);
                        if (d < -kEps) moves.push_back({d, i, j, si, sj});
                    }
                }
            }
        }
        std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
            return std::tie(a.delta, a.i, a.j, a.si, a.sj) < std::tie(b.delta, b.i, b.j, b.si, b.sj);
        });
        bool moved = false;
        for (const Move& m : moves) {
            h[m.i] += m.si;
            h[m.j] += m.sj;
            if (is_graphical(h)) {
                moved = true;
                break;
            }
            h[m.i] -= m.si;
            h[m.j] -= m.sj;
        }
        if (!moved) return;
    }
}

} // namespace

ProjectionResult greedy_star_projection(std::span<const double> z) {
    require_finite(z);
    const std::size_t n = z.size();
    std::vector<node_t> order(n);
    std::iota(order.begin(), order.end(), node_t{0});
    std::stable_sort(order.begin(), order.end(), [&](node_t a, node_t b) { return z[a] > z[b]; });

    const auto cap = static_cast<double>(n == 0 ? 0 : n - 1);
    DegreeSequence residual(n);
    for (std::size_t i = 0; i < n; ++i) residual[i] = static_cast<degree_t>(std::clamp(std::ceil(z[i]), 0.0, cap));

    detail::ResidualBuckets buckets(residual);
    std::vector<Edge> edges;
    std::vector<node_t> leaves;
    for (node_t i : order) {
        const auto r = static_cast<std::size_t>(buckets.residual(i));
        buckets.remove(i);
        leaves.clear();
        buckets.take_and_decrement(std::min(r, buckets.positive_count()), leaves);
        for (node_t v : leaves) edges.emplace_back(i, v);
    }

    ProjectionResult result;
    result.graph = SimpleGraph::from_edges(n, edges);
    result.sequence = degrees_of(result.graph);
    result.l1_cost = l1_distance(result.sequence, z);
    return result;
}

ProjectionResult project_to_graphical(std::span<const double> z) {
    ProjectionResult result = greedy_star_projection(z);
    if (all_integer(z)) return result;
    DegreeSequence h = result.sequence;
    refine_to_local_optimum(h, z);
    if (h != result.sequence) {
        result.graph = hh_realize(h);
        result.sequence = std::move(h);
        result.l1_cost = l1_distance(result.sequence, z);
    }
    return result;
}

ProjectionResult project_to_partition(std::span<const degree_t> c) {
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] > c[i - 1]) throw NotMonotone("input increases at position " + std::to_string(i));
    const std::vector<double> target(c.begin(), c.end());
    ProjectionResult greedy = greedy_star_projection(target);
    if (std::is_sorted(greedy.sequence.begin(), greedy.sequence.end(), std::greater<>())) return greedy;

    // Sorting the optimum against a sorted target cannot raise the L1 cost.
    const std::size_t n = c.size();
    std::vector<node_t> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), node_t{0});
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](node_t a, node_t b) { return greedy.sequence[a] > greedy.sequence[b]; });
    std::vector<node_t> new_id(n);
    DegreeSequence sorted(n);
    for (std::size_t rank = 0; rank < n; ++rank) {
        new_id[by_degree[rank]] = static_cast<node_t>(rank);
        sorted[rank] = greedy.sequence[by_degree[rank]];
    }
    ProjectionResult result;
    result.graph = greedy.graph.relabeled(new_id);
    result.sequence = std::move(sorted);
    result.l1_cost = l1_distance(result.sequence, c);
    return result;
}

KStarSequence optimal_kstar(std::span<const double> z, const std::set<node_t>& forbidden) {
    const std::size_t n = z.size();
    std::vector<degree_t> ceil_z(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(z[i] >= 0.0) || !std::isfinite(z[i])) throw InvalidArgument("optimal_kstar needs finite z >= 0");
        ceil_z[i] = static_cast<degree_t>(std::ceil(z[i]));
    }
    std::vector<node_t> open;
    for (node_t i = 0; i < n; ++i)
        if (!forbidden.contains(i)) open.push_back(i);
    KStarSequence star;
    if (open.empty()) return star;
    star.center = *std::max_element(open.begin(), open.end(),
                                    [&](node_t a, node_t b) { return ceil_z[a] < ceil_z[b]; });
    std::vector<node_t> candidates;
    for (node_t j : open)
        if (j != star.center && ceil_z[j] >= 1) candidates.push_back(j);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](node_t a, node_t b) { return ceil_z[a] > ceil_z[b]; });
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(ceil_z[star.center]), candidates.size());
    star.leaves.assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(star.leaves.begin(), star.leaves.end());
    return star;
}

DegreePartition interior_adjust(const DegreePartition& d, std::span<const double> z,
                                const InteriorAdjustOptions& options) {
    const std::size_t n = d.size();
    if (z.size() != n) throw InvalidArgument("length mismatch");
    if (n < 2 || mle_exists(d).exists) return d;

    std::vector<degree_t> cap(n);
    for (std::size_t i = 0; i < n; ++i) cap[i] = static_cast<degree_t>(std::max(0.0, std::ceil(z[i])));
    std::size_t budget = options.max_moves ? options.max_moves : std::min(n * n, options.hard_cap);

    // Every move keeps the vector sorted: +1 lands on the first slot of a run of
    // equal values, -1 on the last slot.
    std::deque<DegreeSequence> frontier{d.values()};
    std::set<DegreeSequence> seen{d.values()};
    std::size_t examined = 0;
    while (!frontier.empty() && examined < budget) {
        DegreeSequence cur = std::move(frontier.front());
        frontier.pop_front();
        std::vector<std::pair<std::size_t, std::size_t>> runs; // [first, last]
        for (std::size_t i = 0; i < n;) {
            std::size_t j = i;
            while (j + 1 < n && cur[j + 1] == cur[i]) ++j;
            runs.emplace_back(i, j);
            i = j + 1;
        }
        for (std::size_t a = 0; a < runs.size() && examined < budget; ++a) {
            for (std::size_t b = a; b < runs.size() && examined < budget; ++b) {
                for (degree_t s : {degree_t{1}, degree_t{-1}}) {
                    if (examined >= budget) break;
                    std::size_t p, q;
                    if (a == b) {
                        if (runs[a].first == runs[a].second) continue;
                        p = s > 0 ? runs[a].first : runs[a].second;
                        q = s > 0 ? p + 1 : p - 1;
                    } else {
                        p = s > 0 ? runs[a].first : runs[a].second;
                        q = s > 0 ? runs[b].first : runs[b].second;
                    }
                    ++examined;
                    if (cur[p] + s < 0 || cur[q] + s < 0 || cur[p] + s > cap[p] || cur[q] + s > cap[q]) continue;
                    const double delta = shift_cost(cur[p], z[p], s) + shift_cost(cur[q], z[q], s);
                    if (std::fabs(delta) > 1e-9) continue;
                    DegreeSequence next = cur;
                    next[p] += s;
                    next[q] += s;
                    if (seen.contains(next) || !is_graphical(next)) continue;
                    DegreePartition candidate(next);
                    if (mle_exists(candidate).exists) return candidate;
                    seen.insert(next);
                    frontier.push_back(std::move(next));
                }
            }
        }
    }
    return d;
}

} // namespace gdp

namespace gdp {

namespace {

// Repair state: sorted degrees against a target, with the per-step move pickers.
class Repair {
public:
    Repair(DegreeSequence h, std::span<const double> z) : h_(std::move(h)), z_(z), n_(static_cast<degree_t>(h_.size())) {}

    const DegreeSequence& degrees() const { return h_; }

    // Returns false when no admissible move exists.
    bool step(const MleViolation& v) {
        bool moved = false;
        switch (v.kind) {
        case MleViolation::Kind::zero_degree: moved = fix_extreme(0, +1); break;
        case MleViolation::Kind::full_degree: moved = fix_extreme(n_ - 1, -1); break;
        case MleViolation::Kind::top_bottom: moved = loosen(v.k, v.l); break;
        }
        sort_descending();
        return moved;
    }

private:
    static constexpr double kNoMove = std::numeric_limits<double>::infinity();

    // Counting sort; moves keep every entry in [0, n - 1].
    void sort_descending() {
        std::vector<std::size_t> count(h_.size(), 0);
        assert(std::all_of(h_.begin(), h_.end(), [&](degree_t x) { return x >= 0 && x < n_; }));
        for (degree_t x : h_) ++count[static_cast<std::size_t>(x)];
        std::size_t i = 0;
        for (std::size_t v = count.size(); v-- > 0;)
            for (std::size_t c = 0; c < count[v]; ++c) h_[i++] = static_cast<degree_t>(v);
    }

    double gain(std::size_t i, degree_t s) const { return shift_cost(h_[i], z_[i], s); }

    // Degree stays clear of the extremes after moving by s.
    bool safe(std::size_t i, degree_t s) const { return h_[i] + s >= 1 && h_[i] + s <= n_ - 2; }

    std::size_t best_in(std::size_t lo, std::size_t hi, degree_t s, std::size_t skip = SIZE_MAX) const {
        std::size_t best = SIZE_MAX;
        for (std::size_t i = lo; i < hi; ++i) {
            if (i == skip || !safe(i, s)) continue;
            if (best == SIZE_MAX || gain(i, s) < gain(best, s)) best = i;
        }
        return best;
    }

    // Every node at `extreme` gets one edge added (s = +1) or removed (s = -1):
    // partnered with a node that moves towards z if one exists, else with
    // another extreme node, else with the cheapest remaining node.
    bool fix_extreme(degree_t extreme, degree_t s) {
        std::vector<std::size_t> stuck, pool;
        for (std::size_t i = 0; i < h_.size(); ++i) {
            if (h_[i] == extreme) stuck.push_back(i);
            else if (safe(i, s)) pool.push_back(i);
        }
        // At most one partner per stuck node is ever taken from the pool.
        const auto take = static_cast<std::ptrdiff_t>(std::min(stuck.size(), pool.size()));
        std::partial_sort(pool.begin(), pool.begin() + take, pool.end(), [&](std::size_t a, std::size_t b) {
            const double ga = gain(a, s), gb = gain(b, s);
            if (ga != gb) return ga < gb;
            if (h_[a] != h_[b]) return s > 0 ? h_[a] < h_[b] : h_[a] > h_[b];
            return a < b;
        });
        pool.resize(static_cast<std::size_t>(take));
        std::size_t next = 0;
        bool moved = false;
        for (std::size_t t = 0; t < stuck.size(); ++t) {
            const std::size_t u = stuck[t];
            if (h_[u] != extreme) continue;
            std::size_t partner = SIZE_MAX;
            if (next < pool.size() && gain(pool[next], s) < 0) {
                partner = pool[next++];
            } else {
                for (std::size_t r = t + 1; r < stuck.size() && partner == SIZE_MAX; ++r)
                    if (h_[stuck[r]] == extreme) partner = stuck[r];
                if (partner == SIZE_MAX && next < pool.size()) partner = pool[next++];
            }
            if (partner == SIZE_MAX) {
                // fall back to any node that can absorb the change
                for (std::size_t j = 0; j < h_.size() && partner == SIZE_MAX; ++j)
                    if (j != u && h_[j] + s >= 0 && h_[j] + s <= n_ - 1 && h_[j] != extreme) partner = j;
                if (partner == SIZE_MAX) return moved;
            }
            h_[u] += s;
            h_[partner] += s;
            moved = true;
        }
        return moved;
    }

    // Tight split: the top k form a clique joined to every middle node and the
    // bottom l touch only the top. Any of these moves breaks the equality.
    bool loosen(std::size_t k, std::size_t l) {
        const std::size_t n = h_.size();
        const std::size_t mid_lo = k, mid_hi = n - l;
        struct Option {
            std::size_t a, b;
            degree_t s;
        };
        std::vector<Option> options;
        if (k >= 2) {
            const std::size_t a = best_in(0, k, -1);
            const std::size_t b = a == SIZE_MAX ? SIZE_MAX : best_in(0, k, -1, a);
            if (b != SIZE_MAX) options.push_back({a, b, -1});
        }
        if (l >= 2) {
            const std::size_t a = best_in(mid_hi, n, +1);
            const std::size_t b = a == SIZE_MAX ? SIZE_MAX : best_in(mid_hi, n, +1, a);
            if (b != SIZE_MAX) options.push_back({a, b, +1});
        }
        if (l >= 1 && mid_hi > mid_lo) {
            const std::size_t a = best_in(mid_hi, n, +1), b = best_in(mid_lo, mid_hi, +1);
            if (a != SIZE_MAX && b != SIZE_MAX) options.push_back({a, b, +1});
        }
        if (k >= 1 && mid_hi > mid_lo) {
            const std::size_t a = best_in(0, k, -1), b = best_in(mid_lo, mid_hi, -1);
            if (a != SIZE_MAX && b != SIZE_MAX) options.push_back({a, b, -1});
        }
        if (options.empty()) return false;
        const auto cost = [&](const Option& o) { return gain(o.a, o.s) + gain(o.b, o.s); };
        const Option* best = &options.front();
        for (const Option& o : options)
            if (cost(o) < cost(*best)) best = &o;
        h_[best->a] += best->s;
        h_[best->b] += best->s;
        return true;
    }

    DegreeSequence h_;
    std::span<const double> z_;
    degree_t n_;
};

} // namespace

DegreePartition interior_repair(const DegreePartition& d, std::span<const double> z, std::size_t max_steps) {
    const std::size_t n = d.size();
    if (z.size() != n) throw InvalidArgument("length mismatch");
    if (n <= 3 || mle_exists(d).exists) return d;
    if (max_steps == 0) max_steps = 2 * n + 16;

    Repair repair(d.values(), z);
    for (std::size_t step = 0; step < max_steps; ++step) {
        const MleStatus status = mle_exists(DegreePartition(repair.degrees()));
        if (status.exists) break;
        if (!repair.step(*status.violated_condition)) return d;
    }
    DegreePartition result(repair.degrees());
    if (!mle_exists(result).exists || !is_graphical(result.span())) return d;
    return result;
}

} // namespace gdp
