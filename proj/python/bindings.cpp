// Python bindings. Supports are 0-based index sequences here, matching numpy.

#include "wcs/bounds.hpp"
#include "wcs/experiments.hpp"
#include "wcs/montecarlo.hpp"
#include "wcs/signals.hpp"
#include "wcs/solver.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace wcs;

namespace {

SupportSet to_support(const std::vector<Index>& indices, Index n) { return SupportSet(indices, n); }

py::dict report_dict(const bounds::SampleComplexityReport& r) {
  py::dict d;
  d["m_min"] = r.m_min;
  d["rhs"] = r.rhs;
  d["s"] = r.s;
  d["k"] = r.k;
  d["gamma"] = r.gamma ? py::object(py::float_(*r.gamma)) : py::object(py::none());
  d["delta"] = r.delta;
  d["zeta"] = r.zeta;
  d["term_sqrt_k"] = r.term_sqrt_k;
  d["term_confidence"] = r.term_confidence;
  d["term_width"] = r.term_width;
  return d;
}

py::dict estimate_dict(const montecarlo::WidthEstimate& e) {
  py::dict d;
  d["mean"] = e.mean;
  d["std_error"] = e.std_error;
  d["n_samples"] = e.n_samples;
  return d;
}

signals::WeightScheme make_scheme(const std::string& scheme, double theta, double low, double high,
                                  const std::vector<Index>& estimate, double w2, Index n) {
  if (scheme == "uniform") return signals::UniformWeights{};
  if (scheme == "polynomial") return signals::PolynomialWeights{theta};
  if (scheme == "random") return signals::RandomUniformWeights{low, high};
  if (scheme == "two-weight") return signals::TwoWeights{to_support(estimate, n), w2};
  throw ValidationError("unknown weight scheme '" + scheme + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weighted l1 recovery: bounds, solver, generators and campaigns";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<solver::InfeasibleStall>(m, "InfeasibleStall", PyExc_RuntimeError);

  m.def("weighted_l1_norm",
        [](const Vector& x, const Vector& w) { return weighted_l1_norm(x, WeightVector(w)); },
        py::arg("x"), py::arg("weights"));
  m.def("weighted_cardinality",
        [](const std::vector<Index>& support, const Vector& w) {
          return weighted_cardinality(to_support(support, static_cast<Index>(w.size())), WeightVector(w));
        },
        py::arg("support"), py::arg("weights"));

  m.def("soft_threshold", &bounds::soft_threshold, py::arg("x"), py::arg("lam"));
  m.def("soft_threshold_second_moment",
        [](double lam) {
          const auto r = bounds::soft_threshold_second_moment(lam);
          return py::make_tuple(r.exact, r.upper_bound);
        },
        py::arg("lam"), "(exact, upper_bound) of E S_lam(g)^2");
  m.def("gaussian_mean_length",
        [](std::uint64_t dim) {
          const auto r = bounds::gaussian_mean_length(dim);
          return py::make_tuple(r.exact, r.lower, r.upper);
        },
        py::arg("m"), "(exact, lower, upper) for E||g||_2");
  m.def("width_bound",
        [](const Vector& w, const std::vector<Index>& support) {
          const auto r = bounds::width_bound(WeightVector(w), to_support(support, static_cast<Index>(w.size())));
          py::dict d;
          d["bound"] = r.bound;
          d["optimal_h"] = r.optimal_h;
          d["term_sqrt_k"] = r.term_sqrt_k;
          d["term_h_sqrt_s"] = r.term_h_sqrt_s;
          d["term_tail"] = r.term_tail;
          return d;
        },
        py::arg("weights"), py::arg("support"));
  m.def("min_measurements", &bounds::min_measurements, py::arg("rhs"));
  m.def("sample_complexity_lemma",
        [](const Vector& w, const std::vector<Index>& support, double delta, double zeta) {
          return report_dict(bounds::sample_complexity_lemma(
              WeightVector(w), to_support(support, static_cast<Index>(w.size())), delta, zeta));
        },
        py::arg("weights"), py::arg("support"), py::arg("delta"), py::arg("zeta"));
  m.def("sample_complexity_theorem",
        [](double s, double k, double gamma, double delta, double zeta) {
          return report_dict(bounds::sample_complexity_theorem(s, k, gamma, delta, zeta));
        },
        py::arg("s"), py::arg("k"), py::arg("gamma"), py::arg("delta"), py::arg("zeta"));
  m.def("gamma_uniform", &bounds::gamma_uniform, py::arg("n"), py::arg("k"));
  m.def("gamma_two_weight", &bounds::gamma_two_weight, py::arg("n"), py::arg("s"), py::arg("rho"));

  m.def("gen_weights",
        [](const std::string& scheme, Index n, std::uint64_t seed, double theta, double low, double high,
           const std::vector<Index>& estimate, double w2) {
          return signals::gen_weights(make_scheme(scheme, theta, low, high, estimate, w2, n), n, seed).values();
        },
        py::arg("scheme"), py::arg("n"), py::arg("seed") = 0, py::arg("theta") = 0.2, py::arg("low") = 1.0,
        py::arg("high") = 3.0, py::arg("estimate") = std::vector<Index>{}, py::arg("w2") = 2.0);
  m.def("gaussian_matrix", &signals::gen_gaussian_matrix, py::arg("m"), py::arg("n"), py::arg("seed"));
  m.def("add_noise", &signals::add_noise, py::arg("y"), py::arg("eta"), py::arg("seed"));
  m.def("sample_signal",
        [](double s, const Vector& w, double stddev, std::uint64_t seed) {
          const signals::SignalModelConfig c{static_cast<Index>(w.size()), s, WeightVector(w), stddev, seed};
          c.validate();
          const auto r = signals::sample_weighted_sparse_signal(c);
          return py::make_tuple(r.signal.values(), r.capped);
        },
        py::arg("s"), py::arg("weights"), py::arg("stddev") = 1.0, py::arg("seed") = 0,
        "(x, capped) drawn with inclusion probabilities min(1, s / (N w_j^2))");

  py::class_<solver::SolveResult>(m, "SolveResult")
      .def_readonly("x", &solver::SolveResult::minimizer)
      .def_readonly("objective", &solver::SolveResult::objective)
      .def_readonly("residual_norm", &solver::SolveResult::residual_norm)
      .def_readonly("iterations", &solver::SolveResult::iterations)
      .def_readonly("converged", &solver::SolveResult::converged)
      .def_readonly("polished", &solver::SolveResult::polished)
      .def("__repr__", [](const solver::SolveResult& r) {
        return "SolveResult(objective=" + std::to_string(r.objective) +
               ", converged=" + (r.converged ? "True" : "False") +
               ", iterations=" + std::to_string(r.iterations) + ")";
      });
  m.def("solve",
        [](const Matrix& A, const Vector& y, std::optional<Vector> weights, double eta, int max_iterations,
           double gap_tolerance) {
          solver::SolverOptions o;
          o.max_iterations = max_iterations;
          o.gap_tolerance = gap_tolerance;
          o.validate();
          WeightVector w = weights ? WeightVector(*weights) : WeightVector::ones(static_cast<Index>(A.cols()));
          const ProblemInstance inst(A, y, std::move(w), eta);
          py::gil_scoped_release release;
          return solver::solve_weighted_l1(inst, o);
        },
        py::arg("A"), py::arg("y"), py::arg("weights") = py::none(), py::arg("eta") = 0.0,
        py::arg("max_iterations") = 50000, py::arg("gap_tolerance") = 1e-6,
        "minimize sum_j w_j |z_j| subject to ||A z - y||_2 <= eta");

  m.def("empirical_dual_width",
        [](const Vector& w, const std::vector<Index>& support, std::uint64_t n_samples, std::uint64_t seed) {
          return estimate_dict(montecarlo::empirical_dual_width(
              WeightVector(w), to_support(support, static_cast<Index>(w.size())), n_samples, seed));
        },
        py::arg("weights"), py::arg("support"), py::arg("n_samples"), py::arg("seed") = 0);
  m.def("empirical_mean_length",
        [](std::uint64_t dim, std::uint64_t n_samples, std::uint64_t seed) {
          return estimate_dict(montecarlo::empirical_mean_length(dim, n_samples, seed));
        },
        py::arg("m"), py::arg("n_samples"), py::arg("seed") = 0);

  m.def("phase_transition",
        [](Index n, std::vector<double> m_over_n, std::vector<double> s_over_m, int trials, double eta,
           double theta, std::uint64_t seed, unsigned jobs) {
          experiments::PhaseConfig c;
          c.n = n;
          c.m_over_n = std::move(m_over_n);
          c.s_over_m = std::move(s_over_m);
          c.trials = trials;
          c.eta = eta;
          c.weights = signals::PolynomialWeights{theta};
          c.master_seed = seed;
          c.validate();
          experiments::PhaseGrid g;
          {
            py::gil_scoped_release release;
            g = experiments::run_phase_transition(c, jobs);
          }
          Matrix wl1(g.rows(), g.cols()), l1(g.rows(), g.cols());
          for (std::size_t r = 0; r < g.rows(); ++r) {
            for (std::size_t col = 0; col < g.cols(); ++col) {
              wl1(r, col) = g.prob(r, col, experiments::Method::weighted);
              l1(r, col) = g.prob(r, col, experiments::Method::unweighted);
            }
          }
          py::dict d;
          d["m"] = g.m_values;
          d["s_over_m"] = g.s_over_m;
          d["wl1"] = wl1;
          d["l1"] = l1;
          return d;
        },
        py::arg("n"), py::arg("m_over_n"), py::arg("s_over_m"), py::arg("trials") = 20, py::arg("eta") = 1e-6,
        py::arg("theta") = 0.2, py::arg("seed") = 0, py::arg("jobs") = 1,
        "success probabilities per (m, s/m) cell for both methods; polynomial weights j^theta");
}
