#include <gdp/beta_model.hpp>
#include <gdp/edge_list.hpp>
#include <gdp/errors.hpp>
#include <gdp/experiments.hpp>
#include <gdp/projection.hpp>
#include <gdp/release.hpp>
#include <gdp/swap_chain.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

constexpr int kParseError = 2;
constexpr int kPrecondition = 3;

// Raised for unreadable input files; reported like a parse error.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

gdp::DegreePartition read_partition(const std::string& path) {
    auto in = open_input(path);
    return gdp::DegreePartition::from_unsorted(gdp::read_degree_file(in));
}

// Writes to `path`, or stdout when empty or "-".
template <class F>
void with_output(const std::string& path, F&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    write(out);
}

void epsilon_note(double epsilon) {
    std::fprintf(stderr, "note: epsilon = %g; 1 is only a default, set --epsilon to change it\n", epsilon);
}

struct ReleaseArgs {
    std::string input;
    double epsilon = 1.0;
    std::uint64_t seed = 0;
    std::string algorithm = "hh";
    std::string output;
    std::string realization;
    std::string metadata;
    bool evaluate = false;
};

int run_release(const ReleaseArgs& a) {
    auto in = open_input(a.input);
    const gdp::SimpleGraph g = gdp::read_edge_list(in);
    const auto d = gdp::DegreePartition::from_unsorted(gdp::degrees_of(g));
    const gdp::PrivacyParams params(a.epsilon);
    gdp::LaplaceNoise noise(a.seed);

    nlohmann::ordered_json meta;
    meta["algorithm"] = a.algorithm;
    meta["epsilon"] = a.epsilon;
    meta["seed"] = a.seed;
    gdp::DegreeSequence released;
    if (a.algorithm == "hh") {
        const gdp::ReleaseResult r = gdp::release_partition_hh(d, params, noise);
        released = r.partition.values();
        meta["l1_to_noisy"] = r.l1_to_noisy;
        meta["graphical"] = true;
        if (!a.realization.empty()) with_output(a.realization, [&](std::ostream& out) { gdp::write_edge_list(out, r.realization); });
    } else {
        std::vector<double> noisy;
        released = gdp::release_partition_isotone(d, params, noise, &noisy);
        meta["l1_to_noisy"] = gdp::l1_distance(released, noisy);
        bool in_range = true;
        for (gdp::degree_t x : released) in_range = in_range && x >= 0 && x < static_cast<gdp::degree_t>(released.size());
        meta["graphical"] = in_range && gdp::is_graphical(released);
        if (!a.realization.empty()) std::fprintf(stderr, "warning: --realization ignored for the isotone algorithm\n");
    }
    if (a.evaluate) meta["l1_to_original"] = gdp::l1_distance(released, d.span());

    with_output(a.output, [&](std::ostream& out) { gdp::write_degrees(out, released); });
    const std::string text = meta.dump();
    if (a.metadata.empty()) std::cerr << text << '\n';
    else with_output(a.metadata, [&](std::ostream& out) { out << text << '\n'; });
    return 0;
}

int run_mle_check(const std::string& path) {
    const gdp::MleStatus s = gdp::mle_exists(read_partition(path));
    if (s.exists) std::cout << "exists\n";
    else std::cout << "does not exist: " << s.violated_condition->describe() << '\n';
    return 0;
}

struct FitArgs {
    std::string input;
    std::string output;
    double tol = 1e-10;
    std::size_t max_iter = 5000;
};

int run_fit(const FitArgs& a) {
    const gdp::DegreePartition d = read_partition(a.input);
    const gdp::BetaFit fit = gdp::fit_beta(d, {a.tol, a.max_iter});
    with_output(a.output, [&](std::ostream& out) {
        out << "# iterations: " << fit.iterations << "\n# residual: " << fit.residual << '\n';
        out << "node,degree,beta\n";
        char buf[64];
        for (std::size_t i = 0; i < d.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.12g", fit.params.beta[i]);
            out << i + 1 << ',' << d[i] << ',' << buf << '\n';
        }
    });
    return 0;
}

struct NullArgs {
    std::string input;
    std::string output;
    std::uint64_t samples = 1000;
    std::optional<std::uint64_t> burn_in, thinning, observed;
    std::uint64_t seed = 0;
};

int run_null(const NullArgs& a) {
    const gdp::DegreePartition d = read_partition(a.input);
    if (!gdp::is_graphical(d.span())) throw gdp::NotGraphical("partition is not graphical");
    const auto m = static_cast<std::size_t>(d.sum() / 2);
    gdp::SwapChainConfig config = gdp::SwapChainConfig::defaults(m, a.samples, a.seed);
    if (a.burn_in) config.burn_in = *a.burn_in;
    if (a.thinning) config.thinning = *a.thinning;
    const gdp::EmpiricalNull null = gdp::sample_chain(d, config);
    with_output(a.output, [&](std::ostream& out) { gdp::write_null_csv(out, null); });
    if (a.observed) std::fprintf(stderr, "p-value: %.6g\n", gdp::empirical_pvalue(null, *a.observed));
    return 0;
}

std::string csv_of(const gdp::ExperimentReport& r) {
    std::ostringstream out;
    r.write_csv(out);
    return out.str();
}

struct Table1Args {
    std::vector<double> gamma{1.0, 1.5, 2.0};
    gdp::PowerLawConfig base;
    unsigned threads = 0;
    std::string output;
};

int run_table1(const Table1Args& a) {
    epsilon_note(a.base.epsilon);
    gdp::ExperimentReport merged;
    std::string gammas;
    for (double g : a.gamma) {
        gdp::PowerLawConfig c = a.base;
        c.gamma = g;
        gdp::ExperimentReport r = gdp::run_mle_coincidence(c, {{}, a.threads});
        if (merged.metadata.empty()) merged.metadata = r.metadata;
        merged.rows.insert(merged.rows.end(), r.rows.begin(), r.rows.end());
        std::ostringstream s;
        s << g;
        gammas += (gammas.empty() ? "" : " ") + s.str();
    }
    for (auto& [k, v] : merged.metadata)
        if (k == "gamma") v = gammas;
    with_output(a.output, [&](std::ostream& out) { out << csv_of(merged); });
    return 0;
}

struct Table2Args {
    double epsilon = 1.0;
    std::size_t replications = 500;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::string output;
};

int run_table2(const Table2Args& a) {
    epsilon_note(a.epsilon);
    const auto r = gdp::run_karate_study(a.epsilon, a.replications, a.seed, {{}, a.threads});
    with_output(a.output, [&](std::ostream& out) { out << csv_of(r); });
    return 0;
}

struct TriangleArgs {
    gdp::TriangleStudyConfig config;
    std::optional<std::uint64_t> burn_in, thinning;
    unsigned threads = 0;
    std::string output;
};

int run_triangles(TriangleArgs a) {
    epsilon_note(a.config.epsilon);
    if (a.burn_in && a.thinning) {
        a.config.default_schedule = false;
        a.config.burn_in = *a.burn_in;
        a.config.thinning = *a.thinning;
    }
    const auto r = gdp::run_triangle_null_study(a.config, {{}, a.threads});
    with_output(a.output, [&](std::ostream& out) { out << csv_of(r); });
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Private release of graph degree partitions and beta-model inference"};
    app.set_config("--config", "", "TOML config file; command-line flags take precedence");
    app.require_subcommand(1);

    ReleaseArgs rel;
    auto* release = app.add_subcommand("release", "Release a graphical degree partition of an edge list");
    release->add_option("input", rel.input, "Edge list, 1-based `u v` per line")->required();
    release->add_option("--epsilon", rel.epsilon, "Privacy budget")->capture_default_str();
    release->add_option("--seed", rel.seed, "Noise seed")->capture_default_str();
    release->add_option("--algorithm", rel.algorithm, "hh or isotone")
        ->check(CLI::IsMember({"hh", "isotone"}))
        ->capture_default_str();
    release->add_option("-o,--output", rel.output, "Partition file (default stdout)");
    release->add_option("--realization", rel.realization, "Write a realizing edge list");
    release->add_option("--metadata", rel.metadata, "Write JSON metadata here instead of stderr");
    release->add_flag("--evaluate", rel.evaluate, "Also report the L1 distance to the true partition");

    std::string mle_path;
    auto* mle = app.add_subcommand("mle-check", "Whether the beta-model MLE exists for a partition");
    mle->add_option("input", mle_path, "Degree file")->required();

    FitArgs fit;
    auto* fitc = app.add_subcommand("fit-beta", "Fit the beta model to a partition");
    fitc->add_option("input", fit.input, "Degree file")->required();
    fitc->add_option("-o,--output", fit.output, "CSV output (default stdout)");
    fitc->add_option("--tol", fit.tol, "Degree residual tolerance")->capture_default_str();
    fitc->add_option("--max-iter", fit.max_iter, "Iteration cap")->capture_default_str();

    NullArgs nul;
    auto* gof = app.add_subcommand("gof-null", "Triangle-count null distribution by edge swaps");
    gof->add_option("input", nul.input, "Degree file")->required();
    gof->add_option("-o,--output", nul.output, "CSV output (default stdout)");
    gof->add_option("--samples", nul.samples, "Recorded samples")->capture_default_str();
    gof->add_option("--burn-in", nul.burn_in, "Proposals before the first sample (default 10 m)");
    gof->add_option("--thinning", nul.thinning, "Proposals between samples (default m)");
    gof->add_option("--seed", nul.seed, "Chain seed")->capture_default_str();
    gof->add_option("--observed", nul.observed, "Observed triangle count; prints its p-value");

    auto* exp = app.add_subcommand("experiment", "Reproduce the simulation studies");
    exp->require_subcommand(1);

    Table1Args t1;
    auto* table1 = exp->add_subcommand("table1", "MLE-existence coincidence on power-law partitions");
    table1->add_option("--gamma", t1.gamma, "Exponents")->capture_default_str();
    table1->add_option("--n", t1.base.n, "Nodes")->capture_default_str();
    table1->add_option("--replications", t1.base.replications, "Replications per exponent")->capture_default_str();
    table1->add_option("--epsilon", t1.base.epsilon, "Privacy budget")->capture_default_str();
    table1->add_option("--seed", t1.base.seed, "Base seed")->capture_default_str();
    table1->add_flag("--positive-exponent", t1.base.positive_exponent, "Sample P(x) proportional to x^gamma");
    table1->add_option("--threads", t1.threads, "Worker threads (0: all cores)");
    table1->add_option("-o,--output", t1.output, "CSV output (default stdout)");

    Table2Args t2;
    auto* table2 = exp->add_subcommand("table2", "Karate club: MLE existence, L2 error and beta intervals");
    table2->add_option("--epsilon", t2.epsilon, "Privacy budget")->capture_default_str();
    table2->add_option("--replications", t2.replications, "Replications")->capture_default_str();
    table2->add_option("--seed", t2.seed, "Base seed")->capture_default_str();
    table2->add_option("--threads", t2.threads, "Worker threads (0: all cores)");
    table2->add_option("-o,--output", t2.output, "CSV output (default stdout)");

    TriangleArgs tri;
    auto* triangles = exp->add_subcommand("triangles", "Karate club: triangle nulls of released partitions");
    triangles->add_option("--epsilon", tri.config.epsilon, "Privacy budget")->capture_default_str();
    triangles->add_option("--runs", tri.config.runs, "Releases")->capture_default_str();
    triangles->add_option("--samples", tri.config.samples, "Samples per null")->capture_default_str();
    auto* tri_burn = triangles->add_option("--burn-in", tri.burn_in, "Proposals before the first sample (default 10 m)");
    auto* tri_thin = triangles->add_option("--thinning", tri.thinning, "Proposals between samples (default m)");
    tri_burn->needs(tri_thin);
    tri_thin->needs(tri_burn);
    triangles->add_option("--seed", tri.config.seed, "Base seed")->capture_default_str();
    triangles->add_option("--histogram-runs", tri.config.histogram_runs, "Runs with full histograms")->capture_default_str();
    triangles->add_option("--threads", tri.threads, "Worker threads (0: all cores)");
    triangles->add_option("-o,--output", tri.output, "CSV output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    try {
        if (*release) return run_release(rel);
        if (*mle) return run_mle_check(mle_path);
        if (*fitc) return run_fit(fit);
        if (*gof) return run_null(nul);
        if (*table1) return run_table1(t1);
        if (*table2) return run_table2(t2);
        if (*triangles) return run_triangles(tri);
    } catch (const gdp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const gdp::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
