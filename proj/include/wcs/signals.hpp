#pragma once

// Generators: weight schemes, the weighted sparse signal model, Gaussian
// measurement matrices and exact-norm noise. Every generator is a pure
// function of its arguments and seed.

#include "wcs/core.hpp"

#include <cstdint>
#include <string>
#include <variant>

namespace wcs::signals {

struct UniformWeights {};
struct PolynomialWeights {
  double theta = 0.2;
};
/// i.i.d. uniform on [low, high], rescaled so the minimum equals 1.
struct RandomUniformWeights {
  double low = 1.0;
  double high = 3.0;
};
/// 1 on the estimate, w2 elsewhere.
struct TwoWeights {
  SupportSet estimate;
  double w2 = 1.0;
};

using WeightScheme =
    std::variant<UniformWeights, PolynomialWeights, RandomUniformWeights, TwoWeights>;

std::string scheme_name(const WeightScheme& scheme);

WeightVector gen_weights(const WeightScheme& scheme, Index n, std::uint64_t seed);

struct SignalModelConfig {
  Index n = 0;
  double target_weighted_sparsity = 0.0;
  WeightVector weights = WeightVector::ones(1);
  double value_stddev = 1.0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SampledSignal {
  SparseSignal signal;
  /// Some inclusion probability s / (N w_j^2) exceeded 1 and was capped.
  bool capped = false;
};

/// Inclusion probabilities min(1, s / (N w_j^2)).
Vector inclusion_probabilities(const SignalModelConfig& config);

SampledSignal sample_weighted_sparse_signal(const SignalModelConfig& config);

/// Signal with the given support, values i.i.d. N(0, stddev^2), redrawn if zero.
SparseSignal signal_on_support(const SupportSet& support, double stddev, std::uint64_t seed);

Matrix gen_gaussian_matrix(Index m, Index n, std::uint64_t seed);

/// y_clean + e with e a Gaussian direction scaled to ||e||_2 = eta.
Vector add_noise(const Vector& y_clean, double eta, std::uint64_t seed);

}  // namespace wcs::signals
