// floorsum: decide nonnegativity of floor-sum step functions (equivalently,
// integrality of factorial ratio sequences), compute their Fourier/Parseval
// data, evaluate explicit mean-square lower bounds, and run bounded catalogue
// searches. Structured reports go to stdout, diagnostics to stderr; exit code
// 0 = positive result, 1 = negative result, 2 = usage or domain error.

#include "floorsum/bounds.hpp"
#include "floorsum/factorial_ratio.hpp"
#include "floorsum/fourier.hpp"
#include "floorsum/numeric.hpp"
#include "floorsum/param_set.hpp"
#include "floorsum/search.hpp"
#include "floorsum/step_function.hpp"
#include "floorsum/sweeps.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

using floorsum::BigM;
using floorsum::ParamSet;
using floorsum::Rational;
using floorsum::Real;
using nlohmann::ordered_json;

constexpr const char* kVersion = "floorsum 0.1.0";

unsigned default_thread_count() {
    if (const char* env = std::getenv("FLOORSUM_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
        std::cerr << "floorsum: ignoring invalid FLOORSUM_THREADS=\"" << env << "\"\n";
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

struct CheckArgs {
    std::vector<std::uint64_t> a, b;
    std::uint64_t horizon = 100;
};

int run_check(const CheckArgs& args, int digits) {
    const std::uint64_t sum_a = std::accumulate(args.a.begin(), args.a.end(), std::uint64_t(0));
    const std::uint64_t sum_b = std::accumulate(args.b.begin(), args.b.end(), std::uint64_t(0));
    if (sum_a != sum_b) {
        std::cerr << "check: unbalanced parameter sets: sum(a) = " << sum_a
                  << ", sum(b) = " << sum_b << "\n";
        return 2;
    }
    const ParamSet p = floorsum::canonicalize(args.a, args.b);

    const floorsum::Extrema ex = floorsum::extrema(p);
    const bool nonneg = ex.min >= 0;
    const Rational ms = floorsum::mean_square(p);
    const auto pp = floorsum::parseval_partial(p, 10'000);
    const auto fail = floorsum::integrality_scan(p, args.horizon);

    ordered_json j;
    j["a"] = p.a();
    j["b"] = p.b();
    j["balanced"] = p.balanced();
    j["reduced"] = p.reduced();
    j["primitive"] = p.primitive();
    j["sum"] = p.sum();
    j["length"] = p.length();
    j["height"] = p.height();
    j["min"] = ex.min;
    j["max"] = ex.max;
    j["nonnegative"] = nonneg;
    j["mean_square"] = floorsum::rational_str(ms);
    j["parseval"] = ordered_json{{"n_terms", 10'000},
                                 {"partial", floorsum::real_str(pp.partial, digits)},
                                 {"tail_bound", floorsum::real_str(pp.tail_bound, digits)}};
    j["horizon"] = args.horizon;
    if (fail) j["first_nonintegral_n"] = *fail;
    else j["first_nonintegral_n"] = nullptr;
    std::cout << j.dump() << "\n";
    return nonneg ? 0 : 1;
}

struct FourierArgs {
    std::vector<std::uint64_t> a, b;
    std::uint64_t n_max = 32;
};

int run_fourier(const FourierArgs& args, int digits) {
    const ParamSet p(args.a, args.b);
    std::cout << "n,c,magnitude\n";
    for (std::uint64_t n = 1; n <= args.n_max; ++n)
        std::cout << n << "," << floorsum::bracket(p, n) << ","
                  << floorsum::real_str(floorsum::coeff_magnitude(p, n), digits) << "\n";
    return 0;
}

struct BoundArgs {
    std::uint64_t n = 0;
    std::int64_t d = 0;
    std::optional<std::uint64_t> m;
    std::optional<std::uint64_t> m_base;
    std::string m_exponent;
    std::string mode = "sigma";
    std::string threshold_mode;  // empty: no threshold comparison
};

int run_bound(const BoundArgs& args, int digits) {
    if (args.m.has_value() == (args.m_base.has_value() || !args.m_exponent.empty())) {
        std::cerr << "bound: give either --m, or --m-base together with --m-exponent\n";
        return 2;
    }
    if (args.m_base.has_value() != !args.m_exponent.empty()) {
        std::cerr << "bound: --m-base and --m-exponent go together\n";
        return 2;
    }
    const BigM m = args.m ? BigM::from_integer(*args.m)
                          : BigM::from_power(*args.m_base, Real(args.m_exponent));
    const bool meansq = args.mode == "meansq";
    const floorsum::BoundReport rep = meansq ? floorsum::meansq_lower_bound(args.n, args.d, m)
                                             : floorsum::sigma_lower_bound(args.n, m);

    ordered_json j;
    j["mode"] = args.mode;
    j["n"] = args.n;
    j["d"] = args.d;
    j["m"] = m.describe();
    j["log_m"] = floorsum::real_str(m.log_value(), digits);
    j["mertens_factor"] = floorsum::real_str(rep.mertens_factor, digits);
    j["main_term"] = floorsum::real_str(rep.main_term, digits);
    j["error_term"] = floorsum::real_str(rep.error_term, digits);
    j["value"] = floorsum::real_str(rep.value, digits);

    int rc = 0;
    if (!args.threshold_mode.empty()) {
        const auto tm = args.threshold_mode == "strict" ? floorsum::ThresholdMode::strict
                                                        : floorsum::ThresholdMode::paper;
        const Rational thr = floorsum::threshold(args.d, tm);
        // the threshold applies to the sigma-mode quantity
        const Real sigma_value =
            meansq ? (rep.value - Real(args.d) * Real(args.d) / 4) / 2 : rep.value;
        const bool exceeds = sigma_value > Real(thr);
        j["threshold"] = floorsum::rational_str(thr);
        j["exceeds_threshold"] = exceeds;
        rc = exceeds ? 0 : 1;
    }
    std::cout << j.dump() << "\n";
    return rc;
}

struct BoundSearchArgs {
    std::int64_t d = 1;
    std::string threshold_mode = "paper";
    std::string variant = "nonneg";
    std::optional<std::int64_t> a_bound;
};

int run_bound_search(const BoundSearchArgs& args, int digits) {
    const auto tm = args.threshold_mode == "strict" ? floorsum::ThresholdMode::strict
                                                    : floorsum::ThresholdMode::paper;
    std::optional<std::int64_t> bounded;
    if (args.variant == "bounded") {
        if (!args.a_bound) {
            std::cerr << "bound-search: --variant bounded needs --a-bound\n";
            return 2;
        }
        bounded = args.a_bound;
    }
    const floorsum::LengthBound lb = floorsum::min_length_bound(args.d, tm, bounded);

    ordered_json j;
    j["d"] = args.d;
    j["threshold_mode"] = args.threshold_mode;
    j["variant"] = args.variant;
    if (bounded) j["a_bound"] = *bounded;
    j["threshold"] = floorsum::rational_str(floorsum::threshold(args.d, tm, bounded));
    j["n_star"] = lb.n_star;
    j["alpha"] = floorsum::real_str(lb.alpha, digits);
    j["value"] = floorsum::real_str(lb.value, digits);
    std::cout << j.dump() << "\n";
    return 0;
}

int run_search_cmd(floorsum::search::SearchConfig cfg) {
    floorsum::search::RunStats stats;
    const auto catalog = floorsum::search::run_search(cfg, &stats);
    if (cfg.output_path.empty()) floorsum::search::write_catalog(std::cout, catalog);
    std::cerr << "search: " << stats.survivors << " nonnegative sets among "
              << stats.candidates_examined << " tested candidates; " << stats.units_total
              << " units (" << stats.units_resumed << " resumed)\n";
    return 0;
}

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> cases;
};

int run_verify(const VerifyArgs& args) {
    floorsum::SweepResult r;
    if (args.suite == "mertens")
        r = floorsum::sweep_mertens(static_cast<std::uint32_t>(args.cases.value_or(100'000)));
    else if (args.suite == "zetam")
        r = floorsum::sweep_zetam(args.cases.value_or(1000), args.seed);
    else if (args.suite == "parseval")
        r = floorsum::sweep_parseval(args.cases.value_or(50), args.seed);
    else if (args.suite == "convolution")
        r = floorsum::sweep_convolution(args.cases.value_or(500), args.seed);
    else if (args.suite == "reflection")
        r = floorsum::sweep_reflection(args.cases.value_or(100'000), args.seed);
    else {
        std::cerr << "verify: unknown suite \"" << args.suite
                  << "\" (known: mertens, zetam, parseval, convolution, reflection)\n";
        return 2;
    }
    ordered_json j;
    j["suite"] = args.suite;
    j["cases"] = r.cases;
    j["pass"] = r.pass;
    if (!r.pass) j["counterexample"] = r.detail;
    std::cout << j.dump() << "\n";
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"floor-sum step functions, factorial ratio integrality, and explicit length bounds"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();  // global flags like --digits may follow the subcommand

    int digits = 15;
    app.add_option("--digits", digits, "significant digits for printed reals")
        ->capture_default_str()
        ->check(CLI::Range(1, 60));

    CheckArgs check_args;
    auto* check = app.add_subcommand(
        "check", "canonicalize a parameter set and decide nonnegativity / integrality");
    check->add_option("--a", check_args.a, "numerator multiset, comma separated")
        ->required()
        ->delimiter(',');
    check->add_option("--b", check_args.b, "denominator multiset, comma separated")
        ->required()
        ->delimiter(',');
    check->add_option("--horizon", check_args.horizon, "integrality scan horizon")
        ->capture_default_str();

    FourierArgs fourier_args;
    auto* fourier = app.add_subcommand("fourier", "Fourier brackets c_n and |fhat(n)| as CSV");
    fourier->add_option("--a", fourier_args.a)->required()->delimiter(',');
    fourier->add_option("--b", fourier_args.b)->required()->delimiter(',');
    fourier->add_option("--n-max", fourier_args.n_max, "largest n")->capture_default_str();

    BoundArgs bound_args;
    auto* bound = app.add_subcommand("bound", "evaluate the explicit mean-square lower bound");
    bound->add_option("--n", bound_args.n, "length K+L")->required();
    bound->add_option("--d", bound_args.d, "height L-K")->capture_default_str();
    bound->add_option("--m", bound_args.m, "Euler-product cutoff M (exact integer)");
    bound->add_option("--m-base", bound_args.m_base, "M = base^exponent: the base");
    bound->add_option("--m-exponent", bound_args.m_exponent, "M = base^exponent: the exponent");
    bound->add_option("--mode", bound_args.mode, "sigma | meansq")
        ->capture_default_str()
        ->check(CLI::IsMember({"sigma", "meansq"}));
    bound->add_option("--threshold", bound_args.threshold_mode,
                      "also compare against the height-D admissibility threshold: paper | strict")
        ->check(CLI::IsMember({"paper", "strict"}));

    BoundSearchArgs bs_args;
    auto* bound_search =
        app.add_subcommand("bound-search", "smallest N whose optimized bound exceeds the threshold");
    bound_search->add_option("--d", bs_args.d, "height L-K")->required();
    bound_search
        ->add_option("--threshold,--mode", bs_args.threshold_mode, "paper | strict")
        ->capture_default_str()
        ->check(CLI::IsMember({"paper", "strict"}));
    bound_search->add_option("--variant", bs_args.variant, "nonneg | bounded")
        ->capture_default_str()
        ->check(CLI::IsMember({"nonneg", "bounded"}));
    bound_search->add_option("--a-bound", bs_args.a_bound, "A for the bounded variant (|f| <= A)");

    floorsum::search::SearchConfig search_cfg;
    search_cfg.workers = default_thread_count();
    auto* search = app.add_subcommand(
        "search", "catalogue all nonnegative height-D sets with bounded sum and given lengths");
    search->add_option("--d", search_cfg.d, "height L-K")->capture_default_str();
    search->add_option("--max-sum", search_cfg.max_sum, "largest common sum s")->required();
    search->add_option("--lengths", search_cfg.lengths, "lengths K+L, comma separated")
        ->required()
        ->delimiter(',');
    search->add_option("--threads", search_cfg.workers, "worker count")->capture_default_str();
    search->add_option("--checkpoint", search_cfg.checkpoint_path, "checkpoint file (resumable)");
    search->add_option("--out", search_cfg.output_path, "catalogue file (default: stdout)");
    search->add_flag("--strict-resume", search_cfg.strict_resume,
                     "fail instead of restarting when the checkpoint is unusable");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run a named invariant sweep");
    verify->add_option("--suite", verify_args.suite,
                       "mertens | zetam | parseval | convolution | reflection")
        ->required();
    verify->add_option("--seed", verify_args.seed, "RNG seed")->capture_default_str();
    verify->add_option("--cases", verify_args.cases, "sample count / sweep limit override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return run_check(check_args, digits);
        if (fourier->parsed()) return run_fourier(fourier_args, digits);
        if (bound->parsed()) return run_bound(bound_args, digits);
        if (bound_search->parsed()) return run_bound_search(bs_args, digits);
        if (search->parsed()) return run_search_cmd(search_cfg);
        if (verify->parsed()) return run_verify(verify_args);
    } catch (const std::exception& e) {
        std::cerr << "floorsum: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
