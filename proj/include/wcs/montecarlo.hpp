#pragma once

// Monte-Carlo estimators that check the closed-form bounds from the other side.

#include "wcs/core.hpp"

#include <cstdint>

namespace wcs::montecarlo {

struct HStats {
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
};

struct WidthEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample stddev / sqrt(n)
  std::uint64_t n_samples = 0;
  HStats h;  // per-sample minimizing h (dual-width estimator only)
};

/// Exact inner minimum over u in the dual-cone subset for one sample with
/// coordinates |g|, returning (value, argmin h).
struct DualSample {
  double value;
  double h;
};
DualSample dual_sample_minimum(const Vector& abs_g, const WeightVector& w, const SupportSet& s);

/// Squared per-sample objective at a fixed h.
double dual_objective_squared(const Vector& abs_g, const WeightVector& w, const SupportSet& s,
                              double h);

/// Mean over Gaussian samples of min_{h >= 0} ||u + |g|||_2 with u restricted to
/// the dual-cone subset; an upper-bound estimator of the cone's Gaussian width.
WidthEstimate empirical_dual_width(const WeightVector& w, const SupportSet& s,
                                   std::uint64_t n_samples, std::uint64_t seed);

/// Monte-Carlo mean of ||g||_2 for g standard normal in dimension m.
WidthEstimate empirical_mean_length(std::uint64_t m, std::uint64_t n_samples, std::uint64_t seed);

/// max(0, m / sqrt(m+1) - width - sqrt(2 ln(1/delta))).
double zeta_lower_bound(std::uint64_t m, double delta, double width);

/// Same, with the width taken from the closed-form bound for (w, s).
double zeta_lower_bound(std::uint64_t m, const WeightVector& w, const SupportSet& s, double delta);

}  // namespace wcs::montecarlo
