#include "wcs/montecarlo.hpp"

#include "wcs/bounds.hpp"
#include "wcs/random.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace wcs::montecarlo {

namespace {

constexpr double kHTolerance = 1e-10;

struct Moments {
  double mean;
  double std_error;
};

// Fixed-order accumulation keeps results independent of any later parallel split.
Moments moments(const std::vector<double>& values) {
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double var = values.size() > 1 ? ss / (n - 1.0) : 0.0;
  return {mean, std::sqrt(var / n)};
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double objective_squared(const Vector& abs_g, const WeightVector& w,
                         const std::vector<bool>& mask, double h) {
  double total = 0.0;
  for (Index j = 0; j < w.size(); ++j) {
    const double g = abs_g[static_cast<Eigen::Index>(j)];
    const double hw = h * w[j];
    if (mask[j]) {
      total += (g + hw) * (g + hw);
    } else if (g > hw) {
      total += (g - hw) * (g - hw);
    }
  }
  return total;
}

}  // namespace

double dual_objective_squared(const Vector& abs_g, const WeightVector& w, const SupportSet& s,
                              double h) {
  return objective_squared(abs_g, w, s.mask(), h);
}

DualSample dual_sample_minimum(const Vector& abs_g, const WeightVector& w, const SupportSet& s) {
  // Past h_max every complement term is zero and the objective only grows.
  double h_max = 0.0;
  const auto mask = s.mask();
  for (Index j = 0; j < w.size(); ++j) {
    if (!mask[j]) h_max = std::max(h_max, abs_g[static_cast<Eigen::Index>(j)] / w[j]);
  }
  auto f = [&](double h) { return objective_squared(abs_g, w, mask, h); };
  if (h_max == 0.0) return {std::sqrt(f(0.0)), 0.0};

  constexpr double inv_phi = 0.6180339887498949;
  double a = 0.0;
  double b = h_max;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > kHTolerance) {
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
  double h = 0.5 * (a + b);
  double best = f(h);
  // The convex objective may sit at an endpoint.
  for (double edge : {0.0, h_max}) {
    const double v = f(edge);
    if (v < best) {
      best = v;
      h = edge;
    }
  }
  return {std::sqrt(best), h};
}

WidthEstimate empirical_dual_width(const WeightVector& w, const SupportSet& s,
                                   std::uint64_t n_samples, std::uint64_t seed) {
  if (n_samples < 2) throw ValidationError("empirical_dual_width: n_samples must be >= 2");
  if (s.universe() != w.size()) {
    throw ValidationError("empirical_dual_width: support/weight mismatch");
  }
  Rng rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(w.size());
  Vector abs_g(n);
  std::vector<double> values(n_samples);
  std::vector<double> hs(n_samples);
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) abs_g[j] = std::abs(dist(rng));
    const DualSample sample = dual_sample_minimum(abs_g, w, s);
    values[i] = sample.value;
    hs[i] = sample.h;
  }
  const Moments mo = moments(values);
  WidthEstimate est;
  est.mean = mo.mean;
  est.std_error = mo.std_error;
  est.n_samples = n_samples;
  est.h.min = *std::min_element(hs.begin(), hs.end());
  est.h.max = *std::max_element(hs.begin(), hs.end());
  est.h.median = median_of(std::move(hs));
  return est;
}

WidthEstimate empirical_mean_length(std::uint64_t m, std::uint64_t n_samples, std::uint64_t seed) {
  if (n_samples < 2) throw ValidationError("empirical_mean_length: n_samples must be >= 2");
  if (m < 1) throw ValidationError("empirical_mean_length: m must be >= 1");
  Rng rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<double> values(n_samples);
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    double sq = 0.0;
    for (std::uint64_t j = 0; j < m; ++j) {
      const double g = dist(rng);
      sq += g * g;
    }
    values[i] = std::sqrt(sq);
  }
  const Moments mo = moments(values);
  WidthEstimate est;
  est.mean = mo.mean;
  est.std_error = mo.std_error;
  est.n_samples = n_samples;
  return est;
}

double zeta_lower_bound(std::uint64_t m, double delta, double width) {
  if (m < 1) throw ValidationError("zeta_lower_bound: m must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("zeta_lower_bound: delta must lie in (0, 1)");
  if (!(width >= 0.0)) throw ValidationError("zeta_lower_bound: width must be >= 0");
  const double md = static_cast<double>(m);
  const double value = md / std::sqrt(md + 1.0) - width - std::sqrt(2.0 * std::log(1.0 / delta));
  return std::max(0.0, value);
}

double zeta_lower_bound(std::uint64_t m, const WeightVector& w, const SupportSet& s, double delta) {
  return zeta_lower_bound(m, delta, bounds::width_bound(w, s).bound);
}

}  // namespace wcs::montecarlo
