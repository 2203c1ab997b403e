#include <pybind11/gil_safe_call_once.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quaddiv/bounds.hpp"
#include "quaddiv/dirichlet.hpp"
#include "quaddiv/divisor_sums.hpp"
#include "quaddiv/quadroots.hpp"
#include "quaddiv/verify.hpp"

namespace py = pybind11;
using namespace quaddiv;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python side wraps them in Fraction.
std::string rat(const Rational& r) { return r.str(); }

py::dict bound_dict(const BoundReport& r) {
  py::dict d;
  d["b"] = r.b;
  d["c"] = r.c;
  d["N"] = r.N;
  d["delta"] = r.delta;
  d["Omega"] = r.omega;
  d["t"] = r.t;
  d["c_star"] = r.c_star;
  d["empty_range"] = r.empty_range;
  d["X"] = r.X;
  d["C_omega"] = r.c_omega;
  d["C1_omega"] = rat(r.c1_omega);
  d["bound"] = r.bound;
  d["exact"] = r.exact;
  d["dominates"] = r.dominates;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Divisor sums over reducible quadratics: root counts, exact sums and explicit bounds";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> hypothesis;
  hypothesis.call_once_and_store_result(
      [&]() { return py::exception<Error>(m, "HypothesisNotMet", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::InvalidInput: PyErr_SetString(PyExc_ValueError, e.what()); return;
        case ErrorKind::Overflow: PyErr_SetString(PyExc_OverflowError, e.what()); return;
        case ErrorKind::Resource: PyErr_SetString(PyExc_MemoryError, e.what()); return;
        case ErrorKind::HypothesisNotMet: py::set_error(hypothesis.get_stored(), e.what()); return;
      }
    }
  });

  // arith
  m.def("factorize", [](u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (const auto& pp : factorize(n).factors()) out.emplace_back(pp.p, pp.e);
    return out;
  }, py::arg("n"));
  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("tau", [](u64 n) { return tau(n); }, py::arg("n"));
  m.def("_sigma", [](int a, u64 n) { return rat(sigma(a, n)); }, py::arg("a"), py::arg("n"));
  m.def("_theta", [](int a, u64 q) { return rat(theta(a, q)); }, py::arg("a"), py::arg("q"));
  m.def("jacobi", &jacobi, py::arg("a"), py::arg("n"));
  m.def("mu_squared", [](u64 n) { return mu_squared(n); }, py::arg("n"));

  // quadroots
  py::class_<DeltaDecomposition>(m, "DeltaDecomposition")
      .def_readonly("b", &DeltaDecomposition::b)
      .def_readonly("c", &DeltaDecomposition::c)
      .def_readonly("delta", &DeltaDecomposition::delta)
      .def_readonly("r", &DeltaDecomposition::r)
      .def_readonly("t", &DeltaDecomposition::t)
      .def_readonly("t_half", &DeltaDecomposition::t_half)
      .def_readonly("omega", &DeltaDecomposition::omega)
      .def_readonly("c_star", &DeltaDecomposition::c_star)
      .def("__repr__", [](const DeltaDecomposition& d) {
        return "DeltaDecomposition(b=" + std::to_string(d.b) + ", c=" + std::to_string(d.c) +
               ", delta=" + std::to_string(d.delta) + ", t=" + std::to_string(d.t) +
               ", omega=" + std::to_string(d.omega) + ", c_star=" + std::to_string(d.c_star) + ")";
      });
  m.def("decompose_delta", &decompose_delta, py::arg("b"), py::arg("c"));
  m.def("decompose_delta_value", &decompose_delta_value, py::arg("delta"));
  m.def("rho_prime_power", &rho_prime_power, py::arg("p"), py::arg("alpha"), py::arg("dec"));
  m.def("rho", [](u64 d, const DeltaDecomposition& dec) { return rho(d, dec); }, py::arg("d"),
        py::arg("dec"));
  m.def("rho_bruteforce", [](u64 d, u64 k) { return rho_bruteforce(d, k); }, py::arg("d"),
        py::arg("k"));
  m.def("roots_mod", [](u64 d, const DeltaDecomposition& dec) { return roots_mod(d, dec).roots; },
        py::arg("d"), py::arg("dec"));
  m.def("count_roots_in_range",
        [](u64 x, u64 d, const DeltaDecomposition& dec) { return count_roots_in_range(x, d, dec); },
        py::arg("x"), py::arg("d"), py::arg("dec"));
  m.def("rho_partial_sum",
        [](u64 N, const DeltaDecomposition& dec, unsigned threads) {
          py::gil_scoped_release release;
          return rho_partial_sum(N, dec, nullptr, threads);
        },
        py::arg("N"), py::arg("dec"), py::arg("threads") = 1);
  m.def("rho_over_lambda_sum",
        [](u64 N, const DeltaDecomposition& dec) { return rho_over_lambda_sum(N, dec); },
        py::arg("N"), py::arg("dec"));

  // dirichlet
  m.def("a_alpha", &a_alpha, py::arg("alpha"), py::arg("t"));
  m.def("chi_d", &chi_d, py::arg("l"), py::arg("omega"), py::arg("d"));
  m.def("xi_d", &xi_d, py::arg("n"), py::arg("omega"), py::arg("d"));
  m.def("xi_partial_sum", &xi_partial_sum, py::arg("Y"), py::arg("omega"), py::arg("d"));
  m.def("verify_identity",
        [](u64 X, const DeltaDecomposition& dec) {
          const auto r = verify_identity(X, dec);
          py::dict d;
          d["X"] = r.X;
          d["lhs"] = r.lhs;
          d["rhs"] = r.rhs;
          d["equal"] = r.equal;
          return d;
        },
        py::arg("X"), py::arg("dec"));
  m.def("_euler_factor_at_one",
        [](u64 p, const DeltaDecomposition& dec) { return rat(euler_factor_at_one(p, dec)); },
        py::arg("p"), py::arg("dec"));
  m.def("_g_at_one", [](const DeltaDecomposition& dec) { return rat(g_at_one(dec)); },
        py::arg("dec"));
  m.def("_k_at_one", [](unsigned t) { return rat(k_at_one(t)); }, py::arg("t"));

  // divisor sums
  m.def("tau_quad_sum_exact",
        [](i64 b, i64 c, i64 N, unsigned threads) {
          py::gil_scoped_release release;
          return tau_quad_sum_exact(b, c, N, threads);
        },
        py::arg("b"), py::arg("c"), py::arg("N"), py::arg("threads") = 1);
  m.def("tau_quad_sum_hyperbola",
        [](i64 b, i64 c, i64 N) {
          py::gil_scoped_release release;
          return tau_quad_sum_hyperbola(decompose_delta(b, c), N);
        },
        py::arg("b"), py::arg("c"), py::arg("N"));
  m.def("asymptotic_scan",
        [](i64 b, i64 c, const std::vector<i64>& grid, bool fit, unsigned threads) {
          ScanTable t;
          {
            py::gil_scoped_release release;
            t = asymptotic_scan(b, c, grid, threads);
            if (fit) fit_leading_coefficient(t);
          }
          py::list rows;
          for (const auto& r : t.rows) rows.append(py::make_tuple(r.N, r.exact, r.ratio));
          py::dict d;
          d["rows"] = rows;
          if (t.fit)
            d["fit"] = py::dict(py::arg("a") = t.fit->a, py::arg("b2") = t.fit->b2,
                                py::arg("c3") = t.fit->c3);
          else
            d["fit"] = py::none();
          return d;
        },
        py::arg("b"), py::arg("c"), py::arg("grid"), py::arg("fit") = false,
        py::arg("threads") = 1);
  m.def("fit_leading_terms",
        [](const std::vector<double>& ns, const std::vector<double>& values) {
          const auto f = fit_leading_terms(ns, values);
          return py::make_tuple(f.a, f.b2, f.c3);
        },
        py::arg("N"), py::arg("S"));

  // bounds
  m.attr("SIX_OVER_PI_SQUARED") = kSixOverPiSquared;
  m.def("_condition_check", [](u64 omega) {
    const auto c = condition_check(omega);
    return py::make_tuple(rat(c.sigma_m1), c.passes);
  }, py::arg("omega"));
  m.def("big_c", &big_c, py::arg("omega"));
  m.def("big_c2", &big_c2, py::arg("omega"));
  m.def("_c1", [](u64 omega) { return rat(c1(omega)); }, py::arg("omega"));
  m.def("ramare_rhs", &ramare_rhs, py::arg("x"));
  m.def("verify_ramare", [](u64 limit) { return verify_ramare(limit).holds; }, py::arg("limit"));
  m.def("rho_sum_upper", &rho_sum_upper, py::arg("X"), py::arg("omega"));
  m.def("rho_over_lambda_upper", &rho_over_lambda_upper, py::arg("X"), py::arg("omega"));
  m.def("theorem3_bound",
        [](i64 b, i64 c, i64 N, unsigned threads) {
          BoundReport r;
          {
            py::gil_scoped_release release;
            r = theorem3_bound(b, c, N, threads);
          }
          return bound_dict(r);
        },
        py::arg("b"), py::arg("c"), py::arg("N"), py::arg("threads") = 1);
  m.def("corollary4_rho_bound", &corollary4_rho_bound, py::arg("N"));
  m.def("corollary4_tau_bound", &corollary4_tau_bound, py::arg("N"));
  m.def("dominance_report",
        [](i64 b, i64 c, i64 N, unsigned threads) {
          DominanceReport r;
          {
            py::gil_scoped_release release;
            r = dominance_report(b, c, N, threads);
          }
          py::dict d = bound_dict(r.theorem3);
          d["corollary4_bound"] = r.corollary4_bound ? py::cast(*r.corollary4_bound) : py::none();
          d["corollary4_dominates"] =
              r.corollary4_bound ? py::cast(r.corollary4_dominates) : py::none();
          d["dominates"] = r.dominates;
          return d;
        },
        py::arg("b"), py::arg("c"), py::arg("N"), py::arg("threads") = 1);

  // self-checks
  m.def("suite_names", &suite_names);
  m.def("run_suite",
        [](const std::string& name, const std::string& level) {
          require(level == "quick" || level == "full", "level must be 'quick' or 'full'");
          SuiteResult r;
          {
            py::gil_scoped_release release;
            r = run_suite(name, level == "full" ? VerifyLevel::Full : VerifyLevel::Quick);
          }
          py::dict d;
          d["name"] = r.name;
          d["checks"] = r.checks;
          d["failures"] = r.failures;
          d["passed"] = r.passed();
          d["notes"] = r.notes;
          return d;
        },
        py::arg("name"), py::arg("level") = "quick");
}
