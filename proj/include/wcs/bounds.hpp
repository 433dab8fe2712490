#pragma once

// Closed-form width and sample-complexity bounds for weighted l1 recovery
// with Gaussian measurements. All logarithms are natural.

#include "wcs/core.hpp"

#include <cstdint>
#include <optional>

namespace wcs::bounds {

/// sign(x) * max(0, |x| - lambda).
double soft_threshold(double x, double lambda);

struct SecondMoment {
  double exact;        // E S_lambda(g)^2, g ~ N(0, 1), by quadrature
  double upper_bound;  // sqrt(2 / (pi e)) lambda^-2 exp(-lambda^2 / 2)
};

/// Requires lambda > 0; the upper bound diverges at zero.
SecondMoment soft_threshold_second_moment(double lambda);

/// Quadrature value alone, defined for lambda >= 0 (equals 1 at zero).
double soft_threshold_second_moment_exact(double lambda);

struct MeanLength {
  double exact;  // sqrt(2) Gamma((m+1)/2) / Gamma(m/2)
  double lower;  // m / sqrt(m+1)
  double upper;  // sqrt(m)
};

MeanLength gaussian_mean_length(std::uint64_t m);

struct WidthBoundReport {
  double bound = 0.0;
  double optimal_h = 0.0;  // 0 when the complement of the support is empty
  double term_sqrt_k = 0.0;
  double term_h_sqrt_s = 0.0;
  double term_tail = 0.0;

  /// h sqrt(s) + tail at the optimal h; the infimum part of the bound.
  double infimum() const { return term_h_sqrt_s + term_tail; }
};

/// The h-dependent part of the width bound: h sqrt(s) + tail(h).
double width_objective(const WeightVector& w, const SupportSet& s, double h);

/// Tail term (sqrt(2/(pi e)) sum_{j in S^c} exp(-h^2 w_j^2 / 2) / (h^2 w_j^2))^{1/2}.
double width_tail(const WeightVector& w, const SupportSet& s, double h);

/// Upper bound on the Gaussian width of the violation cone intersected with
/// the sphere, minimized over h on a log grid and refined by golden section.
WidthBoundReport width_bound(const WeightVector& w, const SupportSet& s);

struct SampleComplexityReport {
  std::uint64_t m_min = 1;
  double rhs = 0.0;
  double s = 0.0;
  double k = 0.0;
  std::optional<double> gamma;  // theorem form only
  double delta = 0.0;
  double zeta = 0.0;
  // rhs decomposition
  double term_sqrt_k = 0.0;
  double term_confidence = 0.0;  // sqrt(2 ln(1/delta))
  double term_width = 0.0;       // infimum term (lemma) or sqrt(2s/gamma) + sqrt(gamma s)
};

/// Smallest integer m >= 1 with m / sqrt(m + 1) >= rhs.
std::uint64_t min_measurements(double rhs);

SampleComplexityReport sample_complexity_lemma(const WeightVector& w, const SupportSet& s,
                                               double delta, double zeta);

SampleComplexityReport sample_complexity_theorem(double s, double k, double gamma, double delta,
                                                 double zeta);

/// 1 / (2 ln(N/k)); requires 1 <= k < N.
double gamma_uniform(std::uint64_t n, double k);

/// min{1, 1 / (2 rho^2 ln(N/s))}; requires s < N and rho in (0, 1].
double gamma_two_weight(std::uint64_t n, double s, double rho);

/// |S cap S~| + rho^-2 |S cap S~^c|.
double weighted_sparsity_prior(const SupportSet& s, const SupportSet& s_tilde, double rho);

/// ceil(s / (alpha beta + w2^2 (1 - alpha beta))). The w2 term is dropped when
/// alpha beta == 1 so an infinite w2 is accepted there. A ratio within 1e-12
/// relative of an integer is taken as that integer.
std::uint64_t generic_sparsity_from_weighted(double s, double alpha, double beta, double w2);

/// Weights max{1, sqrt(2 gamma ln(rank / s))} on the complement of `support`,
/// assigned by rank 1, 2, ... in index order; entries on the support are kept.
WeightVector growth_floor_weights(const WeightVector& base, const SupportSet& support, double s,
                                  double gamma);

/// Largest gamma for which the complement weights, sorted increasingly, satisfy
/// w_(j) >= max{1, sqrt(2 gamma ln(j / s))}. Infinite when no rank exceeds s.
double max_growth_gamma(const WeightVector& w, const SupportSet& support, double s);

}  // namespace wcs::bounds
