// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "wcs/bounds.hpp"
#include "wcs/csv.hpp"
#include "wcs/experiments.hpp"
#include "wcs/montecarlo.hpp"
#include "wcs/random.hpp"
#include "wcs/signals.hpp"
#include "wcs/solver.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace wcs;
using experiments::Method;

namespace {

constexpr std::uint64_t kMasterSeed = 42;

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

SupportSet random_support(Index k, Index n, std::uint64_t seed) {
  std::vector<Index> idx(n);
  std::iota(idx.begin(), idx.end(), Index{0});
  Rng rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(k);
  return SupportSet(idx, n);
}

// 1. Width-bound domination over 20 configs.
Outcome width_domination() {
  Timer t;
  const Index ns[] = {50, 100, 200};
  const Index ks[] = {1, 5, 10};
  int ok = 0;
  double worst = -INFINITY;
  for (int i = 0; i < 20; ++i) {
    const Index n = ns[i % 3];
    const Index k = ks[(i / 4) % 3];
    const std::uint64_t seed = derive_seed({kMasterSeed, 1, static_cast<std::uint64_t>(i)});
    const SupportSet s = random_support(k, n, seed);
    signals::WeightScheme scheme;
    switch (i % 4) {
      case 0: scheme = signals::UniformWeights{}; break;
      case 1: scheme = signals::PolynomialWeights{0.2}; break;
      case 2: scheme = signals::RandomUniformWeights{1.0, 3.0}; break;
      default: scheme = signals::TwoWeights{random_support(k, n, seed + 1), 2.0}; break;
    }
    const WeightVector w = signals::gen_weights(scheme, n, seed + 2);
    const double bound = bounds::width_bound(w, s).bound;
    const auto est = montecarlo::empirical_dual_width(w, s, 2000, seed + 3);
    ok += est.mean <= bound + 3 * est.std_error;
    worst = std::max(worst, (est.mean - 3 * est.std_error) / bound);
  }
  const double secs = t.seconds();
  return {ok == 20 && secs <= 60.0,
          format("%d/20 configs with estimate <= bound + 3 stderr, max (estimate - 3 se)/bound %.3f, %.1f s",
                 ok, worst, secs)};
}

// 2. Mean-length sandwich.
Outcome mean_length_sandwich() {
  int inside = 0;
  double worst_oracle = 0.0;
  for (int i = 0; i < 40; ++i) {
    const auto m = static_cast<std::uint64_t>(std::llround(std::pow(10.0, 6.0 * i / 39.0)));
    const auto r = bounds::gaussian_mean_length(m);
    inside += r.lower <= r.exact && r.exact <= r.upper;
    worst_oracle = std::max(worst_oracle, std::abs(r.exact / oracles::mean_length(m) - 1));
  }
  const double one = bounds::gaussian_mean_length(1).exact;
  const double one_err = std::abs(one - std::sqrt(2.0 / std::numbers::pi));
  const double exact100 = bounds::gaussian_mean_length(100).exact;
  const auto est = montecarlo::empirical_mean_length(100, 100000, kMasterSeed);
  const double z = std::abs(est.mean - exact100) / est.std_error;
  return {inside == 40 && one_err <= 1e-12 && z <= 3.0,
          format("%d/40 inside [m/sqrt(m+1), sqrt(m)], |c_1 - sqrt(2/pi)| = %.1e, m=100 estimate %.2f "
                 "stderr from exact, recursion oracle rel. diff %.1e",
                 inside, one_err, z, worst_oracle)};
}

// 3. Soft-threshold second moment.
Outcome soft_threshold_moment() {
  int below = 0;
  double worst_q = 0.0;
  for (double lambda : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    const auto r = bounds::soft_threshold_second_moment(lambda);
    below += r.exact <= r.upper_bound;
    const double ref = oracles::soft_threshold_moment(lambda);
    worst_q = std::max(worst_q, std::abs(r.exact - ref) / ref);
  }
  const double near_zero = bounds::soft_threshold_second_moment_exact(1e-9);
  const double zero_err = std::abs(near_zero - 1.0);
  return {below == 6 && zero_err <= 1e-6,
          format("%d/6 lambdas with exact <= upper bound, |E S_{1e-9}(g)^2 - 1| = %.1e, Simpson "
                 "rel. diff %.1e",
                 below, zero_err, worst_q)};
}

// 4. Solver against the vertex-enumeration LP oracle.
Outcome solver_oracle() {
  Timer t;
  int ok = 0;
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::uint64_t seed = derive_seed({kMasterSeed, 4, i});
    Rng rng(seed);
    const Index m = std::uniform_int_distribution<Index>(2, 8)(rng);
    const Index n = std::uniform_int_distribution<Index>(m, 10)(rng);
    const Matrix A = signals::gen_gaussian_matrix(m, n, seed + 1);
    const WeightVector w = signals::gen_weights(signals::RandomUniformWeights{1.0, 3.0}, n, seed + 2);
    Vector y;
    if (i % 2 == 0) {
      const Index k = std::uniform_int_distribution<Index>(1, m)(rng);
      y = A * signals::signal_on_support(random_support(k, n, seed + 3), 1.0, seed + 4).values();
    } else {
      std::normal_distribution<double> g;
      y = Vector::NullaryExpr(static_cast<Eigen::Index>(m), [&]() { return g(rng); });
    }
    const auto r = solver::solve_weighted_l1(ProblemInstance(A, y, w, 0.0));
    const double ref = oracles::lp_vertex_minimum(A, y, w.values());
    const double rel = std::abs(r.objective - ref) / std::max(ref, 1e-300);
    worst = std::max(worst, rel);
    ok += r.converged && rel <= 1e-6;
  }
  const double secs = t.seconds();
  return {ok == 50 && secs <= 120.0,
          format("%d/50 instances within 1e-6 relative, max rel. diff %.1e, %.1f s", ok, worst, secs)};
}

// 5. Minimality of m_min and lemma <= theorem under floor weights.
Outcome sample_complexity() {
  Rng rng(derive_seed({kMasterSeed, 5}));
  std::uniform_int_distribution<Index> nd(20, 1000);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto minimal = [](const bounds::SampleComplexityReport& r) {
    const double m = static_cast<double>(r.m_min);
    return m / std::sqrt(m + 1) >= r.rhs && (r.m_min == 1 || (m - 1) / std::sqrt(m) < r.rhs);
  };
  int min_ok = 0, order_ok = 0;
  for (int i = 0; i < 200; ++i) {
    const Index n = nd(rng);
    const Index k = 1 + static_cast<Index>(u(rng) * 0.2 * static_cast<double>(n));
    const double gamma = 0.02 + 0.98 * u(rng);
    const double delta = 0.01 + 0.5 * u(rng);
    const double zeta = 0.01 + u(rng);
    const SupportSet support = SupportSet::first(k, n);
    const WeightVector w = bounds::growth_floor_weights(WeightVector::ones(n), support, k, gamma);
    const double s = weighted_cardinality(support, w);
    const auto lemma = bounds::sample_complexity_lemma(w, support, delta, zeta);
    const auto thm = bounds::sample_complexity_theorem(s, static_cast<double>(k), gamma, delta, zeta);
    min_ok += minimal(lemma) && minimal(thm);
    order_ok += lemma.m_min <= thm.m_min;
  }
  return {min_ok == 200 && order_ok == 200,
          format("%d/200 minimal, %d/200 with lemma m_min <= theorem m_min", min_ok, order_ok)};
}

// 6. Expected weighted sparsity of the signal model.
Outcome signal_model() {
  int ok = 0, used = 0;
  double worst = 0.0;
  for (double s : {10.0, 25.0, 50.0}) {
    for (int scheme = 0; scheme < 2; ++scheme) {
      const std::uint64_t seed = derive_seed({kMasterSeed, 6, static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(scheme)});
      const WeightVector w =
          scheme == 0 ? signals::gen_weights(signals::PolynomialWeights{0.2}, 500, seed)
                      : signals::gen_weights(signals::RandomUniformWeights{1.0, 3.0}, 500, seed);
      signals::SignalModelConfig c{500, s, w, 1.0, 0};
      if (signals::inclusion_probabilities(c).maxCoeff() >= 1.0) continue;
      ++used;
      double sum = 0, sum2 = 0;
      for (int d = 0; d < 2000; ++d) {
        c.seed = derive_seed({seed, static_cast<std::uint64_t>(d)});
        const double o = weighted_cardinality(signals::sample_weighted_sparse_signal(c).signal.support(), w);
        sum += o;
        sum2 += o * o;
      }
      const double mean = sum / 2000;
      const double se = std::sqrt((sum2 - 2000 * mean * mean) / 1999 / 2000);
      const double z = std::abs(mean - s) / se;
      worst = std::max(worst, z);
      ok += z <= 3.0;
    }
  }
  return {used > 0 && ok == used,
          format("%d/%d uncapped configs with mean omega(S) within 3 stderr of s, max %.2f stderr", ok,
                 used, worst)};
}

experiments::PhaseConfig desk_phase() {
  experiments::PhaseConfig c;
  c.n = 100;
  c.m_over_n = experiments::linspace(0.05, 0.5, 6);
  c.s_over_m = experiments::linspace(0.2, 2.5, 6);
  c.trials = 20;
  c.eta = 1e-6;
  c.success_threshold = 1e-5;
  c.weights = signals::PolynomialWeights{0.2};
  c.master_seed = kMasterSeed;
  return c;
}

// Drop from `lower` to `upper` within two standard deviations of the
// difference of two independent binomial rates with pooled p.
bool within_band(double lower, double upper, int trials) {
  const double p = 0.5 * (lower + upper);
  return upper >= lower - 2.0 * std::sqrt(2.0 * p * (1 - p) / trials);
}

std::string render_phase(const experiments::PhaseGrid& g) {
  std::ostringstream out;
  csv::write_phase_csv(out, g);
  return out.str();
}

// 7. Desk-scale phase transition.
Outcome desk_phase_transition(std::string& phase_csv) {
  Timer t;
  const auto c = desk_phase();
  const auto g = experiments::run_phase_transition(c);
  const double secs = t.seconds();
  phase_csv = render_phase(g);

  double worst_gap = INFINITY;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t col = 0; col < g.cols(); ++col) {
      worst_gap = std::min(worst_gap, g.prob(r, col, Method::weighted) - g.prob(r, col, Method::unweighted));
    }
  }
  int interior = 0, better = 0;
  for (std::size_t r = 1; r + 1 < g.rows(); ++r) {
    for (std::size_t col = 1; col + 1 < g.cols(); ++col) {
      ++interior;
      better += g.prob(r, col, Method::weighted) > g.prob(r, col, Method::unweighted);
    }
  }
  int mono_bad = 0;
  for (Method m : {Method::weighted, Method::unweighted}) {
    for (std::size_t col = 0; col < g.cols(); ++col) {
      for (std::size_t r = 0; r + 1 < g.rows(); ++r) {
        mono_bad += !within_band(g.prob(r, col, m), g.prob(r + 1, col, m), c.trials);
      }
    }
  }
  const bool pass = worst_gap >= -0.2 - 1e-12 && better >= 0.3 * interior && mono_bad == 0 && secs <= 900.0;
  return {pass, format("min(WL1 - L1) %.2f, WL1 > L1 on %d/%d interior cells, %d monotonicity "
                       "violations, %.1f s",
                       worst_gap, better, interior, mono_bad, secs)};
}

// 8. Prior-support study.
Outcome prior_support() {
  experiments::PriorSupportConfig c;
  c.n = 100;
  c.m = 25;
  c.alphas = {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};
  c.beta = 1.0;
  c.trials = 20;
  c.master_seed = kMasterSeed;
  const auto g = experiments::run_prior_support(c);

  const std::size_t top = g.rows() - 1;
  double alpha1_min = INFINITY;
  for (std::size_t col = 0; col < g.cols(); ++col) {
    if (g.s_over_m_std[col] <= 0.8 + 1e-12) alpha1_min = std::min(alpha1_min, g.prob(top, col, Method::weighted));
  }
  double alpha0_gap = 0.0;
  for (std::size_t col = 0; col < g.cols(); ++col) {
    alpha0_gap = std::max(alpha0_gap, std::abs(g.prob(0, col, Method::weighted) - g.prob(0, col, Method::unweighted)));
  }
  int mono_bad = 0;
  for (std::size_t col = 0; col < g.cols(); ++col) {
    for (std::size_t r = 0; r < top; ++r) {
      mono_bad += !within_band(g.prob(r, col, Method::weighted), g.prob(r + 1, col, Method::weighted), c.trials);
    }
  }
  const bool pass = alpha1_min >= 0.9 && alpha0_gap <= 0.2 + 1e-12 && mono_bad == 0;
  return {pass, format("alpha=1 min WL1 success %.2f up to standardized 0.8, alpha=0 max |WL1 - L1| "
                       "%.2f, %d alpha-monotonicity violations",
                       alpha1_min, alpha0_gap, mono_bad)};
}

// 9. Noisy error-bound audit.
Outcome error_bound_audit() {
  experiments::AuditConfig c;
  c.master_seed = kMasterSeed;
  const auto r = experiments::run_error_bound_audit(c);
  const int both = r.both_hold();
  return {r.zeta > 0.0 && static_cast<int>(r.trials.size()) == 100 && both >= 85,
          format("zeta %.3f, both bounds hold in %d/100 trials", r.zeta, both)};
}

// 10. Determinism of the desk campaign.
Outcome determinism(const std::string& first) {
  const auto g = experiments::run_phase_transition(desk_phase(), 2);
  const std::string second = render_phase(g);
  return {!first.empty() && first == second,
          format("rerun with 2 workers: phase.csv %s (%zu bytes)", first == second ? "identical" : "differs",
                 second.size())};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& run) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
  };
  std::string phase_csv;
  report(1, "width bound domination", width_domination);
  report(2, "mean length sandwich", mean_length_sandwich);
  report(3, "soft-threshold moment", soft_threshold_moment);
  report(4, "solver vs LP oracle", solver_oracle);
  report(5, "sample complexity", sample_complexity);
  report(6, "signal model expectation", signal_model);
  report(7, "desk phase transition", [&] { return desk_phase_transition(phase_csv); });
  report(8, "prior support study", prior_support);
  report(9, "error bound audit", error_bound_audit);
  report(10, "determinism", [&] { return determinism(phase_csv); });
  return failed ? 1 : 0;
}
