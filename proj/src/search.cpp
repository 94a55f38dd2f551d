#include "kappa/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include "kappa/calculus.hpp"
#include "kappa/errors.hpp"
#include "kappa/json_io.hpp"
#include "kappa/verify.hpp"

namespace kappa {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// counter-based key for (seed, p index, trial, slot)
std::uint64_t trial_key(std::uint64_t seed, std::size_t pi, std::size_t trial, std::size_t slot) {
    std::uint64_t k = splitmix64(seed);
    k = splitmix64(k ^ (static_cast<std::uint64_t>(pi) << 32 | trial));
    return splitmix64(k ^ slot);
}

struct TrialOutcome {
    std::optional<ViolationReport> violation;
    bool inconclusive = false;
    bool error = false;
    double margin = std::numeric_limits<double>::quiet_NaN();
};

PsdMatrix perturbed(const PsdMatrix& base, double radius, std::uint64_t key) {
    ComplexMatrix h = random_hermitian(base.dim(), key);
    const double nf = h.frobenius_norm();
    if (nf > 0.0) h *= radius / nf;
    return PsdMatrix(HermitianMatrix(base.matrix() + h));
}

TrialOutcome run_trial(const SearchConfig& cfg, std::size_t pi, double p, std::size_t trial) {
    TrialOutcome out;
    try {
        std::string provenance;
        const bool paper_slot = cfg.include_paper_triple && trial == 0;
        const auto k = [&](std::size_t slot) { return trial_key(cfg.seed, pi, trial, slot); };
        auto make_triple = [&]() -> CounterexampleTriple {
            if (paper_slot) {
                provenance = "paper-triple";
                return counterexample_triple();
            }
            if (cfg.perturbation_radius > 0.0) {
                provenance = "perturbed-paper-triple";
                const auto base = counterexample_triple();
                return {perturbed(base.a, cfg.perturbation_radius, k(0)),
                        perturbed(base.b, cfg.perturbation_radius, k(1)),
                        perturbed(base.c, cfg.perturbation_radius, k(2))};
            }
            provenance = "random";
            return {random_psd(cfg.dim, k(0), cfg.scale), random_psd(cfg.dim, k(1), cfg.scale),
                    random_psd(cfg.dim, k(2), cfg.scale)};
        };
        const auto triple = make_triple();
        out.margin = check_triangle(triple.a, triple.b, triple.c, p);
        if (std::abs(out.margin) <= cfg.noise_band) {
            out.inconclusive = true;
        } else if (out.margin < 0.0) {
            ViolationReport v;
            v.p = p;
            v.a = matrix_to_json(triple.a.matrix());
            v.b = matrix_to_json(triple.b.matrix());
            v.c = matrix_to_json(triple.c.matrix());
            v.margin = out.margin;
            v.provenance = provenance;
            v.seed = cfg.seed;
            v.trial = trial;
            out.violation = std::move(v);
        }
    } catch (const Error&) {
        out.error = true;
    }
    return out;
}

}  // namespace

void SearchConfig::validate() const {
    if (p_grid.empty()) throw ConfigError("p_grid must be nonempty");
    for (double p : p_grid)
        if (!std::isfinite(p) || p <= 0.0) throw ConfigError("all p values must be positive");
    if (dim < 2) throw ConfigError("dim must be >= 2");
    if (trials < 1) throw ConfigError("trials must be >= 1");
    if (!(scale > 0.0)) throw ConfigError("scale must be positive");
    if (perturbation_radius < 0.0) throw ConfigError("perturbation_radius must be >= 0");
    if (!(noise_band >= 0.0)) throw ConfigError("noise band must be >= 0");
}

nlohmann::json ViolationReport::to_json() const {
    return nlohmann::json{
        {"p", p},       {"A", a},
        {"B", b},       {"C", c},
        {"margin", margin}, {"provenance", provenance},
        {"seed", seed}, {"trial", trial},
    };
}

std::string ScanResult::summary_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "p,trials,violations,min_margin\n";
    for (const auto& s : summary)
        os << s.p << "," << s.trials << "," << s.violations << "," << s.min_margin << "\n";
    return os.str();
}

std::string ScanResult::violations_jsonl() const {
    std::string out;
    for (const auto& v : violations) {
        out += v.to_json().dump();
        out += '\n';
    }
    return out;
}

ScanResult scan(const SearchConfig& config) {
    config.validate();
    ScanResult result;
    const std::size_t nthreads = std::max<std::size_t>(1, config.threads);

    for (std::size_t pi = 0; pi < config.p_grid.size(); ++pi) {
        const double p = config.p_grid[pi];
        std::vector<TrialOutcome> outcomes(config.trials);

        auto worker = [&](std::size_t tid) {
            for (std::size_t t = tid; t < config.trials; t += nthreads)
                outcomes[t] = run_trial(config, pi, p, t);
        };
        if (nthreads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(nthreads);
            for (std::size_t tid = 0; tid < nthreads; ++tid) pool.emplace_back(worker, tid);
            for (auto& th : pool) th.join();
        }

        // sequential merge in trial order keeps output thread-count independent
        PSummary s;
        s.p = p;
        s.trials = config.trials;
        s.min_margin = std::numeric_limits<double>::infinity();
        for (auto& out : outcomes) {
            if (out.error) {
                ++s.errors;
                continue;
            }
            s.min_margin = std::min(s.min_margin, out.margin);
            if (out.inconclusive) ++s.inconclusive;
            if (out.violation) {
                ++s.violations;
                result.violations.push_back(std::move(*out.violation));
            }
        }
        if (!std::isfinite(s.min_margin)) s.min_margin = 0.0;
        result.summary.push_back(s);
    }
    return result;
}

}  // namespace kappa
