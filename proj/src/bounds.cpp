#include "wcs/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

namespace wcs::bounds {

namespace {

const double kTailConstant = std::sqrt(2.0 / (std::numbers::pi * std::numbers::e));

// Quadrature window and tolerance for the soft-threshold moment.
constexpr double kQuadratureSpan = 12.0;
constexpr double kQuadratureTolerance = 1e-13;

// Log grid for the width-bound infimum over h.
constexpr double kGridLogMin = -4.0;
constexpr double kGridLogMax = 2.0;
constexpr int kGridPoints = 400;
constexpr double kGoldenRelTol = 1e-8;

double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  // Split into panels first so the recursion starts from a resolved shape.
  constexpr int panels = 24;
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * width;
    const double hi = lo + width;
    const double flo = f(lo);
    const double fmid = f(0.5 * (lo + hi));
    const double fhi = f(hi);
    total += adaptive_simpson(f, lo, hi, flo, fmid, fhi, simpson(flo, fmid, fhi, lo, hi),
                              tol / panels, 40);
  }
  return total;
}

template <typename F>
double golden_section(F&& f, double lo, double hi, double rel_tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 500 && (b - a) > rel_tol * std::max(std::abs(a) + std::abs(b), 1e-300);
       ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? c : d;
}

void check_delta_zeta(double delta, double zeta) {
  if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("delta must lie in (0, 1)");
  if (!(zeta > 0.0) || !std::isfinite(zeta)) throw ValidationError("zeta must be positive");
}

double confidence_term(double delta) { return std::sqrt(2.0 * std::log(1.0 / delta)); }

double mean_length_lower(double m) { return m / std::sqrt(m + 1.0); }

}  // namespace

double soft_threshold(double x, double lambda) {
  const double mag = std::abs(x) - lambda;
  if (mag <= 0.0) return 0.0;
  return std::copysign(mag, x);
}

double soft_threshold_second_moment_exact(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("soft_threshold_second_moment_exact: lambda must be finite and >= 0");
  }
  // v = u - lambda, with exp(-lambda^2 / 2) factored out of the integrand.
  const double scale = std::sqrt(2.0 / std::numbers::pi);
  auto integrand = [lambda, scale](double v) {
    return scale * v * v * std::exp(-0.5 * v * v - lambda * v);
  };
  return std::exp(-0.5 * lambda * lambda) *
         integrate(integrand, 0.0, kQuadratureSpan, kQuadratureTolerance);
}

SecondMoment soft_threshold_second_moment(double lambda) {
  if (!(lambda > 0.0)) {
    throw ValidationError("soft_threshold_second_moment: lambda must be positive");
  }
  return {soft_threshold_second_moment_exact(lambda),
          kTailConstant * std::exp(-0.5 * lambda * lambda) / (lambda * lambda)};
}

MeanLength gaussian_mean_length(std::uint64_t m) {
  if (m < 1) throw ValidationError("gaussian_mean_length: m must be >= 1");
  const double md = static_cast<double>(m);
  const double log_ratio = std::lgamma(0.5 * (md + 1.0)) - std::lgamma(0.5 * md);
  return {std::sqrt(2.0) * std::exp(log_ratio), mean_length_lower(md), std::sqrt(md)};
}

double width_tail(const WeightVector& w, const SupportSet& s, double h) {
  if (s.universe() != w.size()) throw ValidationError("width_tail: support/weight mismatch");
  const double h2 = h * h;
  double sum = 0.0;
  const auto mask = s.mask();
  for (Index j = 0; j < w.size(); ++j) {
    if (mask[j]) continue;
    const double hw2 = h2 * w[j] * w[j];
    sum += std::exp(-0.5 * hw2) / hw2;
  }
  return std::sqrt(kTailConstant * sum);
}

double width_objective(const WeightVector& w, const SupportSet& s, double h) {
  return h * std::sqrt(weighted_cardinality(s, w)) + width_tail(w, s, h);
}

WidthBoundReport width_bound(const WeightVector& w, const SupportSet& s) {
  const double k = static_cast<double>(s.cardinality());
  const double weighted = weighted_cardinality(s, w);
  WidthBoundReport report;
  report.term_sqrt_k = std::sqrt(k);

  if (s.cardinality() == w.size()) {
    // No tail: h sqrt(s) is minimized as h -> 0.
    report.bound = report.term_sqrt_k;
    return report;
  }

  const double root_s = std::sqrt(weighted);
  auto objective = [&](double h) { return h * root_s + width_tail(w, s, h); };

  int best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  std::vector<double> grid(kGridPoints);
  for (int i = 0; i < kGridPoints; ++i) {
    grid[i] = std::pow(10.0, kGridLogMin + (kGridLogMax - kGridLogMin) * i / (kGridPoints - 1));
    const double v = objective(grid[i]);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  const double lo = grid[std::max(best - 1, 0)];
  const double hi = grid[std::min(best + 1, kGridPoints - 1)];
  double h = golden_section(objective, lo, hi, kGoldenRelTol);
  if (objective(h) > best_value) h = grid[best];

  report.optimal_h = h;
  report.term_h_sqrt_s = h * root_s;
  report.term_tail = width_tail(w, s, h);
  report.bound = report.term_sqrt_k + report.term_h_sqrt_s + report.term_tail;
  return report;
}

std::uint64_t min_measurements(double rhs) {
  if (!std::isfinite(rhs)) throw ValidationError("min_measurements: rhs must be finite");
  if (rhs <= 0.0) return 1;
  const double r2 = rhs * rhs;
  const double root = 0.5 * (r2 + rhs * std::sqrt(r2 + 4.0));
  auto m = static_cast<std::uint64_t>(std::max(1.0, std::ceil(root)));
  while (m > 1 && mean_length_lower(static_cast<double>(m - 1)) >= rhs) --m;
  while (mean_length_lower(static_cast<double>(m)) < rhs) ++m;
  return m;
}

SampleComplexityReport sample_complexity_lemma(const WeightVector& w, const SupportSet& s,
                                               double delta, double zeta) {
  check_delta_zeta(delta, zeta);
  const WidthBoundReport width = width_bound(w, s);
  SampleComplexityReport r;
  r.s = weighted_cardinality(s, w);
  r.k = static_cast<double>(s.cardinality());
  r.delta = delta;
  r.zeta = zeta;
  r.term_sqrt_k = std::sqrt(r.k);
  r.term_confidence = confidence_term(delta);
  r.term_width = width.infimum();
  r.rhs = r.term_sqrt_k + r.term_confidence + zeta + r.term_width;
  r.m_min = min_measurements(r.rhs);
  return r;
}

SampleComplexityReport sample_complexity_theorem(double s, double k, double gamma, double delta,
                                                 double zeta) {
  check_delta_zeta(delta, zeta);
  if (!(k >= 1.0) || !(s >= k) || !std::isfinite(s)) {
    throw ValidationError("sample_complexity_theorem: requires s >= k >= 1");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ValidationError("sample_complexity_theorem: gamma must be positive and finite");
  }
  SampleComplexityReport r;
  r.s = s;
  r.k = k;
  r.gamma = gamma;
  r.delta = delta;
  r.zeta = zeta;
  r.term_sqrt_k = std::sqrt(k);
  r.term_confidence = confidence_term(delta);
  r.term_width = std::sqrt(2.0 * s / gamma) + std::sqrt(gamma * s);
  r.rhs = r.term_width + r.term_sqrt_k + r.term_confidence + zeta;
  r.m_min = min_measurements(r.rhs);
  return r;
}

double gamma_uniform(std::uint64_t n, double k) {
  if (!(k >= 1.0) || !(k < static_cast<double>(n))) {
    throw ValidationError("gamma_uniform: requires 1 <= k < N");
  }
  return 1.0 / (2.0 * std::log(static_cast<double>(n) / k));
}

double gamma_two_weight(std::uint64_t n, double s, double rho) {
  if (!(s > 0.0) || !(s < static_cast<double>(n))) {
    throw ValidationError("gamma_two_weight: requires 0 < s < N");
  }
  if (!(rho > 0.0 && rho <= 1.0)) throw ValidationError("gamma_two_weight: rho must lie in (0, 1]");
  return std::min(1.0, 1.0 / (2.0 * rho * rho * std::log(static_cast<double>(n) / s)));
}

double weighted_sparsity_prior(const SupportSet& s, const SupportSet& s_tilde, double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw ValidationError("weighted_sparsity_prior: rho must lie in (0, 1]");
  }
  const auto inside = static_cast<double>(s.intersect(s_tilde).cardinality());
  const auto outside = static_cast<double>(s.cardinality()) - inside;
  return inside + outside / (rho * rho);
}

std::uint64_t generic_sparsity_from_weighted(double s, double alpha, double beta, double w2) {
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0)) {
    throw ValidationError("generic_sparsity_from_weighted: alpha and beta must lie in [0, 1]");
  }
  if (!(w2 >= 1.0)) throw ValidationError("generic_sparsity_from_weighted: w2 must be >= 1");
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw ValidationError("generic_sparsity_from_weighted: s must be finite and >= 0");
  }
  const double ab = alpha * beta;
  const double off = 1.0 - ab;
  const double denominator = off == 0.0 ? ab : ab + w2 * w2 * off;
  if (!(denominator > 0.0)) {
    throw ValidationError("generic_sparsity_from_weighted: nonpositive denominator");
  }
  const double ratio = s / denominator;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-12 * std::max(1.0, ratio)) {
    return static_cast<std::uint64_t>(nearest);
  }
  return static_cast<std::uint64_t>(std::ceil(ratio));
}

WeightVector growth_floor_weights(const WeightVector& base, const SupportSet& support, double s,
                                  double gamma) {
  if (!(s > 0.0) || !(gamma > 0.0)) {
    throw ValidationError("growth_floor_weights: s and gamma must be positive");
  }
  Vector out = base.values();
  const auto mask = support.mask();
  double rank = 0.0;
  for (Index j = 0; j < base.size(); ++j) {
    if (mask[j]) continue;
    rank += 1.0;
    const double g = 2.0 * gamma * std::log(rank / s);
    out[static_cast<Eigen::Index>(j)] = std::max(1.0, g > 0.0 ? std::sqrt(g) : 0.0);
  }
  return WeightVector(std::move(out));
}

double max_growth_gamma(const WeightVector& w, const SupportSet& support, double s) {
  if (!(s > 0.0)) throw ValidationError("max_growth_gamma: s must be positive");
  std::vector<double> off;
  const auto mask = support.mask();
  for (Index j = 0; j < w.size(); ++j) {
    if (!mask[j]) off.push_back(w[j]);
  }
  std::sort(off.begin(), off.end());
  double gamma = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < off.size(); ++r) {
    const double ratio = static_cast<double>(r + 1) / s;
    if (ratio <= 1.0) continue;
    gamma = std::min(gamma, off[r] * off[r] / (2.0 * std::log(ratio)));
  }
  return gamma;
}

}  // namespace wcs::bounds
