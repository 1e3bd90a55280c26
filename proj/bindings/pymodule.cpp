#include "floorsum/bounds.hpp"
#include "floorsum/factorial_ratio.hpp"
#include "floorsum/fourier.hpp"
#include "floorsum/param_set.hpp"
#include "floorsum/search.hpp"
#include "floorsum/step_function.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

namespace py = pybind11;

namespace {

using Side = std::vector<std::uint64_t>;

floorsum::ParamSet make_set(const Side& a, const Side& b) {
    return floorsum::ParamSet(a, b);
}

py::dict set_info(const floorsum::ParamSet& p) {
    py::dict d;
    d["a"] = p.a();
    d["b"] = p.b();
    d["balanced"] = p.balanced();
    d["reduced"] = p.reduced();
    d["primitive"] = p.primitive();
    d["sum_a"] = p.sum_a();
    d["sum_b"] = p.sum_b();
    d["length"] = p.length();
    d["height"] = p.height();
    return d;
}

py::dict report_dict(const floorsum::BoundReport& rep) {
    py::dict d;
    d["mode"] = rep.mode == floorsum::BoundMode::sigma ? "sigma" : "meansq";
    d["n"] = rep.n;
    d["d"] = rep.d;
    d["m"] = rep.m.describe();
    d["log_m"] = static_cast<double>(rep.m.log_value());
    d["mertens_factor"] = static_cast<double>(rep.mertens_factor);
    d["main_term"] = static_cast<double>(rep.main_term);
    d["error_term"] = static_cast<double>(rep.error_term);
    d["value"] = static_cast<double>(rep.value);
    d["value_str"] = floorsum::real_str(rep.value, 30);
    return d;
}

floorsum::BigM parse_m(std::uint64_t m, std::optional<double> exponent) {
    if (exponent) return floorsum::BigM::from_power(m, floorsum::Real(*exponent));
    return floorsum::BigM::from_integer(m);
}

floorsum::ThresholdMode parse_mode(const std::string& mode) {
    if (mode == "paper") return floorsum::ThresholdMode::paper;
    if (mode == "strict") return floorsum::ThresholdMode::strict;
    throw std::invalid_argument("threshold mode must be \"paper\" or \"strict\"");
}

py::dict entry_dict(const floorsum::search::CatalogEntry& e) {
    py::dict d;
    d["a"] = e.a;
    d["b"] = e.b;
    d["s"] = e.s;
    d["length"] = e.length;
    d["height"] = e.height;
    d["min"] = e.min;
    d["max"] = e.max;
    d["mean_square"] = floorsum::rational_str(e.mean_square);
    d["verified_n"] = e.verified_n;
    return d;
}

}  // namespace

PYBIND11_MODULE(floorsum, m) {
    m.doc() =
        "Floor-sum step functions: nonnegativity (= factorial ratio integrality), "
        "Fourier data, explicit mean-square lower bounds, and bounded searches.";

    m.def("canonicalize",
          [](const Side& a, const Side& b) { return set_info(floorsum::canonicalize(a, b)); },
          py::arg("a"), py::arg("b"),
          "Cancel common values, divide by the gcd, and report the canonical form with flags.");

    m.def("evaluate",
          [](const Side& a, const Side& b, std::int64_t num, std::int64_t den) {
              if (den <= 0) throw std::invalid_argument("denominator must be positive");
              floorsum::Int v = floorsum::evaluate(
                  make_set(a, b), floorsum::Rational(floorsum::Int(num), floorsum::Int(den)));
              return py::int_(py::str(v.str()));
          },
          py::arg("a"), py::arg("b"), py::arg("num"), py::arg("den"),
          "f(num/den) = sum floor(a_k x) - sum floor(b_l x).");

    m.def("is_nonnegative",
          [](const Side& a, const Side& b) { return floorsum::is_nonnegative(make_set(a, b)); },
          py::arg("a"), py::arg("b"));

    m.def("extrema",
          [](const Side& a, const Side& b) {
              auto ex = floorsum::extrema(make_set(a, b));
              return py::make_tuple(ex.min, ex.max);
          },
          py::arg("a"), py::arg("b"));

    m.def("mean_square",
          [](const Side& a, const Side& b) {
              return floorsum::rational_str(floorsum::mean_square(make_set(a, b)));
          },
          py::arg("a"), py::arg("b"), "Exact integral of f^2 over one period, as \"num/den\".");

    m.def("un_term",
          [](const Side& a, const Side& b, std::uint64_t n) {
              return floorsum::rational_str(floorsum::un_term(make_set(a, b), n));
          },
          py::arg("a"), py::arg("b"), py::arg("n"),
          "u_n = prod (a_k n)! / prod (b_l n)! as \"num/den\".");

    m.def("integrality_scan",
          [](const Side& a, const Side& b, std::uint64_t n_max) {
              return floorsum::integrality_scan(make_set(a, b), n_max);
          },
          py::arg("a"), py::arg("b"), py::arg("n_max"),
          "First n <= n_max with u_n not an integer, or None.");

    m.def("g_of",
          [](const Side& a, const Side& b, std::uint64_t n) {
              return floorsum::g_of(make_set(a, b), n);
          },
          py::arg("a"), py::arg("b"), py::arg("n"));

    m.def("bracket",
          [](const Side& a, const Side& b, std::uint64_t n) {
              return floorsum::bracket(make_set(a, b), n);
          },
          py::arg("a"), py::arg("b"), py::arg("n"),
          "c_n = sum_{a_k | n} a_k - sum_{b_l | n} b_l.");

    m.def("coeff_magnitude",
          [](const Side& a, const Side& b, std::uint64_t n) {
              return static_cast<double>(floorsum::coeff_magnitude(make_set(a, b), n));
          },
          py::arg("a"), py::arg("b"), py::arg("n"), "|fhat(n)| = |c_n|/(2 pi n).");

    m.def("parseval_partial",
          [](const Side& a, const Side& b, std::uint64_t n_terms) {
              auto pp = floorsum::parseval_partial(make_set(a, b), n_terms);
              py::dict d;
              d["sum"] = floorsum::rational_str(pp.sum);
              d["partial"] = static_cast<double>(pp.partial);
              d["tail_bound"] = static_cast<double>(pp.tail_bound);
              return d;
          },
          py::arg("a"), py::arg("b"), py::arg("n_terms"));

    m.def("convolution_identity_check",
          [](const Side& a, const Side& b, std::uint64_t n_max) {
              return floorsum::convolution_identity_check(make_set(a, b), n_max);
          },
          py::arg("a"), py::arg("b"), py::arg("n_max"));

    m.def("zeta_m_exact",
          [](std::uint32_t m) { return floorsum::rational_str(floorsum::zeta_m_exact(m)); },
          py::arg("m"), "zeta_M(1) as an exact \"num/den\".");

    m.def("mertens_upper",
          [](std::uint64_t m, std::optional<double> exponent) {
              return static_cast<double>(floorsum::mertens_upper(parse_m(m, exponent)));
          },
          py::arg("m"), py::arg("exponent") = std::nullopt);

    m.def("sigma_lower_bound",
          [](std::uint64_t n, std::uint64_t m, std::optional<double> exponent) {
              return report_dict(floorsum::sigma_lower_bound(n, parse_m(m, exponent)));
          },
          py::arg("n"), py::arg("m"), py::arg("exponent") = std::nullopt,
          "Lower bound for sum_{n>=1} |fhat(n)|^2 at length n, cutoff M (or M = m^exponent).");

    m.def("meansq_lower_bound",
          [](std::uint64_t n, std::int64_t d, std::uint64_t m, std::optional<double> exponent) {
              return report_dict(floorsum::meansq_lower_bound(n, d, parse_m(m, exponent)));
          },
          py::arg("n"), py::arg("d"), py::arg("m"), py::arg("exponent") = std::nullopt);

    m.def("optimize_m",
          [](std::uint64_t n) {
              auto r = floorsum::optimize_m(n);
              py::dict d;
              d["m"] = r.m.describe();
              d["alpha"] = static_cast<double>(r.alpha);
              d["value"] = static_cast<double>(r.value);
              return d;
          },
          py::arg("n"));

    m.def("threshold",
          [](std::int64_t d, const std::string& mode, std::optional<std::int64_t> a_bound) {
              return floorsum::rational_str(floorsum::threshold(d, parse_mode(mode), a_bound));
          },
          py::arg("d"), py::arg("mode") = "paper", py::arg("a_bound") = std::nullopt);

    m.def("min_length_bound",
          [](std::int64_t d, const std::string& mode, std::optional<std::int64_t> a_bound) {
              auto lb = floorsum::min_length_bound(d, parse_mode(mode), a_bound);
              py::dict out;
              out["n_star"] = lb.n_star;
              out["alpha"] = static_cast<double>(lb.alpha);
              out["value"] = static_cast<double>(lb.value);
              return out;
          },
          py::arg("d"), py::arg("mode") = "paper", py::arg("a_bound") = std::nullopt,
          "Smallest N whose optimized bound exceeds the admissibility threshold for height d.");

    m.def("run_search",
          [](std::int64_t d, std::uint64_t max_sum, const std::vector<std::uint32_t>& lengths,
             unsigned workers) {
              floorsum::search::SearchConfig cfg;
              cfg.d = d;
              cfg.max_sum = max_sum;
              cfg.lengths = lengths;
              cfg.workers = workers;
              py::list out;
              for (const auto& e : floorsum::search::run_search(cfg)) out.append(entry_dict(e));
              return out;
          },
          py::arg("d"), py::arg("max_sum"), py::arg("lengths"), py::arg("workers") = 1,
          "Catalogue all nonnegative height-d sets with the given lengths and sum bound.");
}
