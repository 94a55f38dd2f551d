// kappa: distances, inequality verification, counterexample reproduction,
// and triangle-margin search for the kappa_p operator mean.
//
// JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 verification failed, 2 parse/validation failure, 3 numerical error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kappa/calculus.hpp"
#include "kappa/errors.hpp"
#include "kappa/json_io.hpp"
#include "kappa/means.hpp"
#include "kappa/norms.hpp"
#include "kappa/search.hpp"
#include "kappa/verify.hpp"

namespace {

using nlohmann::json;

kappa::NormSpec parse_norm(const std::string& text) {
    if (text == "trace") return kappa::NormSpec::trace_norm();
    if (text == "operator") return kappa::NormSpec::operator_norm();
    if (text.rfind("kyfan:", 0) == 0)
        return kappa::NormSpec::kyfan(std::stoul(text.substr(6)));
    if (text.rfind("schatten:", 0) == 0)
        return kappa::NormSpec::schatten(std::stod(text.substr(9)));
    throw kappa::InvalidNormSpec("unknown norm: " + text +
                                 " (expected trace|operator|kyfan:k|schatten:s)");
}

void echo_invocation(int argc, char** argv, const CLI::App& app) {
    std::cerr << "# invocation:";
    for (int i = 0; i < argc; ++i) std::cerr << " " << argv[i];
    std::cerr << "\n";
    // effective values including defaults, so the run is reproducible from stderr
    for (const auto* sub : app.get_subcommands()) {
        for (const auto* opt : sub->get_options()) {
            if (opt->get_name().empty()) continue;
            const std::string value =
                opt->count() > 0 ? opt->as<std::string>() : opt->get_default_str();
            std::cerr << "# " << sub->get_name() << " " << opt->get_name() << " = " << value
                      << "\n";
        }
    }
}

int run_dist(const std::string& a_path, const std::string& b_path, double p,
             const std::string& kind, bool pretty) {
    const auto a = kappa::load_psd_file(a_path);
    const auto b = kappa::load_psd_file(b_path);
    json out;
    if (kind == "dp") {
        if (!(p > 0.0)) throw kappa::InvalidExponent("p must be positive");
        out = kappa::to_json(kappa::d_p(a, b, p));
    } else if (kind == "hellinger") {
        out = json{{"kind", "hellinger"}, {"d", kappa::hellinger(a, b)}};
    } else if (kind == "bures") {
        out = json{{"kind", "bures"}, {"d", kappa::bures(a, b)}};
    } else {
        throw kappa::ConfigError("unknown --kind: " + kind);
    }
    std::cout << out.dump(pretty ? 2 : -1) << "\n";
    return 0;
}

int run_verify(const std::vector<double>& p_grid, std::size_t trials, std::size_t dim,
               std::uint64_t seed, const std::string& norm_text,
               const std::string& a_path, const std::string& b_path, bool pretty) {
    std::optional<kappa::NormSpec> spec;
    if (!norm_text.empty()) spec = parse_norm(norm_text);

    std::optional<std::pair<kappa::PsdMatrix, kappa::PsdMatrix>> fixed;
    if (!a_path.empty() || !b_path.empty()) {
        if (a_path.empty() || b_path.empty())
            throw kappa::ConfigError("provide both matrix files or neither");
        fixed.emplace(kappa::load_psd_file(a_path), kappa::load_psd_file(b_path));
        if (spec && spec->kind == kappa::NormSpec::Kind::kyfan && spec->k > fixed->first.dim())
            throw kappa::InvalidNormSpec("kyfan order exceeds matrix dimension");
    }
    if (spec && spec->kind == kappa::NormSpec::Kind::kyfan && spec->k > dim && !fixed)
        throw kappa::InvalidNormSpec("kyfan order exceeds --dim");

    bool all_passed = true;
    json per_p = json::array();
    for (double p : p_grid) {
        if (!(p > 0.0)) throw kappa::InvalidExponent("p must be positive");
        std::size_t passed = 0;
        double worst0 = std::numeric_limits<double>::infinity();
        double worst1 = worst0;
        const std::size_t n = fixed ? 1 : trials;
        for (std::size_t t = 0; t < n; ++t) {
            kappa::InequalityReport rep = [&] {
                const auto& a = fixed ? fixed->first
                                      : kappa::random_psd(dim, seed * 1000003ULL + t * 2, 1.0);
                const auto& b = fixed ? fixed->second
                                      : kappa::random_psd(dim, seed * 1000003ULL + t * 2 + 1, 1.0);
                return spec ? kappa::check_uinorm_inequality(a, b, p, *spec)
                            : kappa::check_trace_inequality(a, b, p);
            }();
            worst0 = std::min(worst0, rep.margins[0]);
            worst1 = std::min(worst1, rep.margins[1]);
            if (rep.passed)
                ++passed;
            else
                all_passed = false;
        }
        per_p.push_back(json{{"p", p},
                             {"instances", n},
                             {"passed", passed},
                             {"worst_margins", {worst0, worst1}}});
    }
    json out{{"norm", spec ? spec->kind_name() : "trace"},
             {"all_passed", all_passed},
             {"per_p", std::move(per_p)}};
    std::cout << out.dump(pretty ? 2 : -1) << "\n";
    return all_passed ? 0 : 1;
}

int run_counterexample(bool pretty) {
    const auto rep = kappa::reproduce_counterexample(/*throw_on_failure=*/false);
    std::cout << kappa::to_json(rep).dump(pretty ? 2 : -1) << "\n";
    return rep.passed ? 0 : 1;
}

int run_search(double p_min, double p_max, std::size_t p_steps, std::size_t dim,
               std::size_t trials, std::uint64_t seed, double scale,
               bool include_paper_triple, double perturb, std::size_t threads,
               double tol, const std::string& out_prefix) {
    kappa::SearchConfig cfg;
    if (p_steps < 1) throw kappa::ConfigError("--p-steps must be >= 1");
    for (std::size_t i = 0; i < p_steps; ++i) {
        const double p = p_steps == 1
                             ? p_min
                             : p_min + (p_max - p_min) * static_cast<double>(i) /
                                           static_cast<double>(p_steps - 1);
        cfg.p_grid.push_back(p);
    }
    cfg.dim = dim;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.scale = scale;
    cfg.include_paper_triple = include_paper_triple;
    cfg.perturbation_radius = perturb;
    cfg.threads = threads;
    cfg.noise_band = tol;

    const auto result = kappa::scan(cfg);
    if (out_prefix.empty()) {
        std::cout << result.summary_csv();
        std::cerr << result.violations_jsonl();
    } else {
        std::ofstream csv(out_prefix + ".csv");
        csv << result.summary_csv();
        std::ofstream jsonl(out_prefix + ".jsonl");
        jsonl << result.violations_jsonl();
        std::cout << result.summary_csv();
    }
    std::size_t total = 0;
    for (const auto& s : result.summary) total += s.violations;
    std::cerr << "# " << total << " violation(s) across " << cfg.p_grid.size()
              << " p value(s). Note: for 1 < p < 2 the metric question is open;"
              << " an empty scan only means no violation was found in these trials.\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kappa_p operator mean toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    // dist
    auto* dist = app.add_subcommand("dist", "d_p / Hellinger / Bures distance between two PSD matrices");
    double dist_p = 1.0;
    std::string dist_kind = "dp";
    std::string file_a, file_b;
    dist->add_option("--p", dist_p, "exponent p > 0")->capture_default_str();
    dist->add_option("--kind", dist_kind, "dp|hellinger|bures")->capture_default_str();
    dist->add_option("A", file_a, "matrix JSON file")->required();
    dist->add_option("B", file_b, "matrix JSON file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "randomized trace / norm inequality suite");
    std::vector<double> p_grid{1.0};
    std::size_t trials = 100, dim = 3;
    std::uint64_t seed = 0;
    std::string norm_text, va_path, vb_path;
    verify->add_option("--p,--p-grid", p_grid, "p values to test")->capture_default_str();
    verify->add_option("--trials", trials, "random pairs per p")->capture_default_str();
    verify->add_option("--dim", dim, "matrix dimension")->capture_default_str();
    verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
    verify->add_option("--norm", norm_text, "trace|operator|kyfan:k|schatten:s (default trace inequality)");
    verify->add_option("--matrix-a", va_path, "fixed matrix A instead of random pairs");
    verify->add_option("--matrix-b", vb_path, "fixed matrix B instead of random pairs");

    // counterexample
    app.add_subcommand("counterexample", "reproduce the built-in p=1/2 triangle violation");

    // search
    auto* search = app.add_subcommand("search", "scan triangle margins over a p grid");
    double p_min = 0.5, p_max = 0.5, scale = 1.0, perturb = 0.0;
    std::size_t p_steps = 1, sdim = 2, strials = 100, threads = 1;
    std::uint64_t sseed = 0;
    bool include_paper = false;
    search->add_option("--p-min", p_min)->capture_default_str();
    search->add_option("--p-max", p_max)->capture_default_str();
    search->add_option("--p-steps", p_steps)->capture_default_str();
    search->add_option("--dim", sdim)->capture_default_str();
    search->add_option("--trials", strials)->capture_default_str();
    search->add_option("--seed", sseed)->capture_default_str();
    search->add_option("--scale", scale)->capture_default_str();
    search->add_flag("--include-paper-triple", include_paper);
    search->add_option("--perturb", perturb, "perturbation radius around the paper triple")
        ->capture_default_str();
    search->add_option("--threads", threads)->capture_default_str();
    double search_tol = 1e-8;
    search->add_option("--tol", search_tol, "noise band: |margin| below this is inconclusive")
        ->capture_default_str();
    std::string out_prefix;
    search->add_option("--out", out_prefix, "write <out>.csv and <out>.jsonl");

    CLI11_PARSE(app, argc, argv);
    echo_invocation(argc, argv, app);

    try {
        if (dist->parsed()) return run_dist(file_a, file_b, dist_p, dist_kind, pretty);
        if (verify->parsed())
            return run_verify(p_grid, trials, dim, seed, norm_text, va_path, vb_path, pretty);
        if (app.get_subcommand("counterexample")->parsed()) return run_counterexample(pretty);
        if (search->parsed())
            return run_search(p_min, p_max, p_steps, sdim, strials, sseed, scale, include_paper,
                              perturb, threads, search_tol, out_prefix);
    } catch (const kappa::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kappa::DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kappa::NotFinite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kappa::NotHermitian& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kappa::NotPositiveSemidefinite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kappa::InvalidExponent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kappa::InvalidNormSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kappa::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kappa::Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
