#include <gdp/beta_model.hpp>
#include <gdp/errors.hpp>
#include <gdp/experiments.hpp>
#include <gdp/karate.hpp>
#include <gdp/projection.hpp>
#include <gdp/release.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>
#include <tuple>

namespace gdp {

namespace {

constexpr const char* kHh = "isotone-hh";
constexpr const char* kIsotone = "isotone";
constexpr const char* kOriginal = "original";

// Independent streams within one replication.
enum Stream : std::uint64_t { kGraphStream = 1, kNoiseStream = 2, kChainHh = 3, kChainIsotone = 4 };

std::uint64_t stream_seed(std::uint64_t base, std::size_t replication, Stream stream) {
    return derive_seed(derive_seed(base, replication), stream);
}

std::unique_ptr<NoiseSource> make_noise(const RunOptions& options, std::uint64_t seed) {
    if (options.noise) return options.noise(seed);
    return std::make_unique<LaplaceNoise>(seed);
}

std::vector<double> noisy_vector(const DegreePartition& d, double epsilon, NoiseSource& noise) {
    std::vector<double> z = noise.draw(d.size(), PrivacyParams(epsilon).scale());
    if (z.size() != d.size()) throw InvalidArgument("noise source returned the wrong length");
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += static_cast<double>(d[i]);
    return z;
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double proportion_se(double p, std::size_t count) {
    return count ? std::sqrt(p * (1.0 - p) / static_cast<double>(count)) : 0.0;
}

bool in_range_graphical(const DegreeSequence& c) {
    const auto top = static_cast<degree_t>(c.size()) - 1;
    for (degree_t x : c)
        if (x < 0 || x > top) return false;
    return is_graphical(c);
}

} // namespace

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

double ExperimentReport::value(const std::string& algorithm, const std::string& metric, const std::string& key) const {
    for (const ReportRow& r : rows)
        if (r.algorithm == algorithm && r.metric == metric && r.key == key) return r.value;
    throw InvalidArgument("no report row " + algorithm + "/" + metric + "/" + key);
}

void ExperimentReport::write_csv(std::ostream& out) const {
    for (const auto& [k, v] : metadata) out << "# " << k << ": " << v << '\n';
    out << "algorithm,metric,key,value\n";
    for (const ReportRow& r : rows) out << r.algorithm << ',' << r.metric << ',' << r.key << ',' << format_number(r.value) << '\n';
}

DegreePartition gen_powerlaw_partition(const PowerLawConfig& config, Rng& rng) {
    const std::size_t n = config.n;
    if (n < 2) throw InvalidArgument("power-law partition needs n >= 2");
    const double exponent = config.positive_exponent ? config.gamma : -config.gamma;
    std::vector<double> cumulative(n - 1);
    double total = 0.0;
    for (std::size_t x = 1; x < n; ++x) {
        total += std::pow(static_cast<double>(x), exponent);
        cumulative[x - 1] = total;
    }
    std::vector<degree_t> d(n);
    for (std::size_t attempt = 0;; ++attempt) {
        for (auto& di : d) {
            const double u = uniform_open01(rng) * total;
            const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
            di = static_cast<degree_t>(std::min<std::ptrdiff_t>(it - cumulative.begin(), static_cast<std::ptrdiff_t>(n) - 2)) + 1;
        }
        std::sort(d.begin(), d.end(), std::greater<>());
        if (is_graphical(d)) return DegreePartition(std::move(d));
        if (attempt + 1 >= config.max_redraws) break;
    }
    degree_t sum = 0;
    for (degree_t x : d) sum += x;
    if (sum % 2 != 0) --d.back();
    if (!is_graphical(d)) d = project_to_partition(d).sequence;
    return DegreePartition(std::move(d));
}

bool baseline_mle_exists(const DegreeSequence& c) {
    const auto top = static_cast<degree_t>(c.size()) - 1;
    for (degree_t x : c)
        if (x < 0 || x > top) return false;
    return mle_exists(DegreePartition(c)).exists;
}

ExperimentReport run_mle_coincidence(const PowerLawConfig& config, const RunOptions& options) {
    const std::size_t reps = config.replications;
    struct Outcome {
        bool truth = false, hh = false, isotone = false;
    };
    std::vector<Outcome> outcomes(reps);
    parallel_for(reps, options.threads, [&](std::size_t r) {
        Rng graph_rng(stream_seed(config.seed, r, kGraphStream));
        const DegreePartition d = gen_powerlaw_partition(config, graph_rng);
        auto noise = make_noise(options, stream_seed(config.seed, r, kNoiseStream));
        std::vector<double> z = noisy_vector(d, config.epsilon, *noise);
        Outcome& o = outcomes[r];
        o.truth = mle_exists(d).exists;
        o.isotone = baseline_mle_exists(isotonic_l1_integer(z));
        o.hh = mle_exists(release_from_noisy(std::move(z)).partition).exists;
    });

    std::size_t truth = 0, hh = 0, iso = 0, hh_same = 0, iso_same = 0;
    for (const Outcome& o : outcomes) {
        truth += o.truth;
        hh += o.hh;
        iso += o.isotone;
        hh_same += o.hh == o.truth;
        iso_same += o.isotone == o.truth;
    }
    ExperimentReport report;
    report.metadata = {{"experiment", "mle-coincidence"},
                       {"epsilon", format_number(config.epsilon)},
                       {"note", "epsilon defaults to 1; it is a harness choice"},
                       {"gamma", format_number(config.gamma)},
                       {"exponent_sign", config.positive_exponent ? "+" : "-"},
                       {"n", std::to_string(config.n)},
                       {"replications", std::to_string(reps)},
                       {"seed", std::to_string(config.seed)}};
    const std::string key = "gamma=" + format_number(config.gamma) + ",n=" + std::to_string(config.n);
    const auto rate = [&](std::size_t c) { return reps ? static_cast<double>(c) / static_cast<double>(reps) : 0.0; };
    for (auto [name, same, exists] : {std::tuple{kHh, hh_same, hh}, std::tuple{kIsotone, iso_same, iso}}) {
        report.rows.push_back({name, "p_coincide", key, rate(same)});
        report.rows.push_back({name, "p_coincide_se", key, proportion_se(rate(same), reps)});
        report.rows.push_back({name, "p_mle_exists", key, rate(exists)});
    }
    report.rows.push_back({kOriginal, "p_mle_exists", key, rate(truth)});
    return report;
}

ExperimentReport run_karate_study(double epsilon, std::size_t replications, std::uint64_t seed,
                                  const RunOptions& options) {
    const DegreePartition d = karate_partition();
    const std::size_t n = d.size();
    struct Outcome {
        bool exists = false, fit_failed = false;
        double l2 = 0.0, sq_l2 = 0.0;
        std::vector<double> beta;
    };
    std::vector<Outcome> hh(replications), iso(replications);

    const auto evaluate = [&](Outcome& o, const DegreeSequence& released, bool exists) {
        for (std::size_t i = 0; i < n; ++i) {
            const double e = static_cast<double>(released[i] - d[i]);
            o.sq_l2 += e * e;
        }
        o.l2 = std::sqrt(o.sq_l2);
        o.exists = exists;
        o.beta.assign(n, 0.0);
        if (!exists) return;
        try {
            o.beta = fit_beta(DegreePartition(released)).params.beta;
        } catch (const NoConvergence&) {
            o.fit_failed = true;
        }
    };

    parallel_for(replications, options.threads, [&](std::size_t r) {
        auto noise = make_noise(options, stream_seed(seed, r, kNoiseStream));
        std::vector<double> z = noisy_vector(d, epsilon, *noise);
        const DegreeSequence c = isotonic_l1_integer(z);
        evaluate(iso[r], c, baseline_mle_exists(c));
        const DegreePartition s = release_from_noisy(std::move(z)).partition;
        evaluate(hh[r], s.values(), mle_exists(s).exists);
    });

    ExperimentReport report;
    report.metadata = {{"experiment", "karate"},
                       {"epsilon", format_number(epsilon)},
                       {"note", "epsilon defaults to 1; it is a harness choice"},
                       {"n", std::to_string(n)},
                       {"replications", std::to_string(replications)},
                       {"seed", std::to_string(seed)},
                       {"beta_interval", "percentile 2.5%/97.5%; beta = 0 when the MLE does not exist"}};
    const auto reps = static_cast<double>(replications);
    for (auto [name, outcomes] : {std::pair{kHh, &hh}, std::pair{kIsotone, &iso}}) {
        std::size_t exists = 0, failed = 0, nonconverged = 0;
        std::vector<double> l2, sq;
        for (const Outcome& o : *outcomes) {
            exists += o.exists;
            failed += !o.exists || o.fit_failed;
            nonconverged += o.fit_failed;
            l2.push_back(o.l2);
            sq.push_back(o.sq_l2);
        }
        const double p = replications ? static_cast<double>(exists) / reps : 0.0;
        report.rows.push_back({name, "p_mle_exists", "", p});
        report.rows.push_back({name, "p_mle_exists_se", "", proportion_se(p, replications)});
        report.rows.push_back({name, "mean_l2_error", "", mean_of(l2)});
        report.rows.push_back({name, "mean_squared_l2_error", "", mean_of(sq)});
        report.rows.push_back({name, "mle_failed", "", static_cast<double>(failed)});
        report.rows.push_back({name, "fit_nonconverged", "", static_cast<double>(nonconverged)});
        if (replications == 0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> b;
            for (const Outcome& o : *outcomes) b.push_back(o.beta[i]);
            const std::string node = std::to_string(i + 1);
            report.rows.push_back({name, "beta_mean", node, mean_of(b)});
            report.rows.push_back({name, "beta_q025", node, quantile(b, 0.025)});
            report.rows.push_back({name, "beta_q975", node, quantile(b, 0.975)});
        }
    }
    const MleStatus truth = mle_exists(d);
    report.rows.push_back({kOriginal, "p_mle_exists", "", truth.exists ? 1.0 : 0.0});
    if (truth.exists) {
        const BetaFit fit = fit_beta(d);
        for (std::size_t i = 0; i < n; ++i) report.rows.push_back({kOriginal, "beta_mle", std::to_string(i + 1), fit.params.beta[i]});
    }
    return report;
}

ExperimentReport run_triangle_null_study(const TriangleStudyConfig& config, const RunOptions& options) {
    const SimpleGraph karate = karate_graph();
    const DegreePartition d = DegreePartition::from_unsorted(degrees_of(karate));
    const auto schedule = [&](const DegreePartition& p, std::uint64_t seed) {
        std::size_t m = static_cast<std::size_t>(p.sum() / 2);
        SwapChainConfig c = SwapChainConfig::defaults(m, config.samples, seed);
        if (!config.default_schedule) {
            c.burn_in = config.burn_in;
            c.thinning = config.thinning;
        }
        return c;
    };
    const EmpiricalNull truth = sample_chain(d, schedule(d, derive_seed(config.seed, ~std::uint64_t{0})));

    struct Outcome {
        std::optional<EmpiricalNull> hh, iso;
    };
    std::vector<Outcome> outcomes(config.runs);
    parallel_for(config.runs, options.threads, [&](std::size_t r) {
        auto noise = make_noise(options, stream_seed(config.seed, r, kNoiseStream));
        std::vector<double> z = noisy_vector(d, config.epsilon, *noise);
        const DegreeSequence c = isotonic_l1_integer(z);
        const DegreePartition s = release_from_noisy(std::move(z)).partition;
        outcomes[r].hh = sample_chain(s, schedule(s, stream_seed(config.seed, r, kChainHh)));
        if (in_range_graphical(c)) {
            const DegreePartition cp(c);
            outcomes[r].iso = sample_chain(cp, schedule(cp, stream_seed(config.seed, r, kChainIsotone)));
        }
    });

    ExperimentReport report;
    report.metadata = {{"experiment", "triangle-null"},
                       {"epsilon", format_number(config.epsilon)},
                       {"note", "epsilon defaults to 1; it is a harness choice"},
                       {"runs", std::to_string(config.runs)},
                       {"samples_per_null", std::to_string(config.samples)},
                       {"schedule", config.default_schedule ? "burn_in=10m,thinning=m"
                                                             : "burn_in=" + std::to_string(config.burn_in) +
                                                                   ",thinning=" + std::to_string(config.thinning)},
                       {"seed", std::to_string(config.seed)},
                       {"observed_triangles", std::to_string(count_triangles(karate))},
                       {"degenerate", "1 marks a non-graphical release with no null"}};

    const auto summarize = [&](const char* name, const std::string& key, const EmpiricalNull& null) {
        const NullSummary s = null_summary(null);
        report.rows.push_back({name, "null_min", key, static_cast<double>(s.min)});
        report.rows.push_back({name, "null_max", key, static_cast<double>(s.max)});
        report.rows.push_back({name, "null_mean", key, s.mean});
        report.rows.push_back({name, "null_q025", key, s.q025});
        report.rows.push_back({name, "null_q500", key, s.q500});
        report.rows.push_back({name, "null_q975", key, s.q975});
    };
    const auto histogram = [&](const char* name, const std::string& run, const EmpiricalNull& null) {
        const auto total = static_cast<double>(null.statistic_values.size());
        for (auto [t, count] : null_summary(null).histogram)
            report.rows.push_back({name, "histogram", run + ":" + std::to_string(t), static_cast<double>(count) / total});
    };
    summarize(kOriginal, "", truth);
    report.rows.push_back({kOriginal, "pvalue_observed", "",
                           empirical_pvalue(truth, count_triangles(karate))});
    histogram(kOriginal, "true", truth);

    std::size_t iso_degenerate = 0;
    double hh_overlap = 0.0, iso_overlap = 0.0;
    for (std::size_t r = 0; r < config.runs; ++r) {
        const std::string key = std::to_string(r);
        const Outcome& o = outcomes[r];
        summarize(kHh, key, *o.hh);
        const double ho = null_overlap(*o.hh, truth);
        hh_overlap += ho;
        report.rows.push_back({kHh, "degenerate", key, 0.0});
        report.rows.push_back({kHh, "overlap", key, ho});
        if (o.iso) {
            summarize(kIsotone, key, *o.iso);
            const double io = null_overlap(*o.iso, truth);
            iso_overlap += io;
            report.rows.push_back({kIsotone, "degenerate", key, 0.0});
            report.rows.push_back({kIsotone, "overlap", key, io});
        } else {
            ++iso_degenerate;
            report.rows.push_back({kIsotone, "degenerate", key, 1.0});
            report.rows.push_back({kIsotone, "overlap", key, 0.0});
        }
        if (r < config.histogram_runs) {
            histogram(kHh, key, *o.hh);
            if (o.iso) histogram(kIsotone, key, *o.iso);
        }
    }
    const auto runs = static_cast<double>(std::max<std::size_t>(config.runs, 1));
    report.rows.push_back({kHh, "fraction_valid", "", config.runs ? 1.0 : 0.0});
    report.rows.push_back({kIsotone, "fraction_valid", "",
                           config.runs ? 1.0 - static_cast<double>(iso_degenerate) / runs : 0.0});
    report.rows.push_back({kHh, "mean_overlap", "", hh_overlap / runs});
    report.rows.push_back({kIsotone, "mean_overlap", "", iso_overlap / runs});
    return report;
}

} // namespace gdp
