#include "wcs/signals.hpp"

#include "wcs/random.hpp"

#include <cmath>
#include <type_traits>

namespace wcs::signals {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string scheme_name(const WeightScheme& scheme) {
  return std::visit(overloaded{[](const UniformWeights&) { return std::string("uniform"); },
                               [](const PolynomialWeights&) { return std::string("polynomial"); },
                               [](const RandomUniformWeights&) { return std::string("random"); },
                               [](const TwoWeights&) { return std::string("two-weight"); }},
                    scheme);
}

WeightVector gen_weights(const WeightScheme& scheme, Index n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("gen_weights: N must be >= 1");
  const auto len = static_cast<Eigen::Index>(n);
  return std::visit(
      overloaded{
          [&](const UniformWeights&) { return WeightVector::ones(n); },
          [&](const PolynomialWeights& p) {
            if (!(p.theta > 0.0) || !std::isfinite(p.theta)) {
              throw ValidationError("gen_weights: polynomial exponent must be positive");
            }
            Vector w(len);
            for (Eigen::Index j = 0; j < len; ++j) {
              w[j] = std::pow(static_cast<double>(j + 1), p.theta);
            }
            return WeightVector(std::move(w));
          },
          [&](const RandomUniformWeights& r) {
            if (!(r.low > 0.0) || !(r.high > r.low) || !std::isfinite(r.high)) {
              throw ValidationError("gen_weights: random weights need 0 < low < high");
            }
            Rng rng(seed);
            std::uniform_real_distribution<double> dist(r.low, r.high);
            Vector w(len);
            for (Eigen::Index j = 0; j < len; ++j) w[j] = dist(rng);
            w /= w.minCoeff();
            // Division can leave the minimum a rounding step below 1.
            for (Eigen::Index j = 0; j < len; ++j) w[j] = std::max(w[j], 1.0);
            return WeightVector(std::move(w));
          },
          [&](const TwoWeights& t) {
            if (!(t.w2 >= 1.0)) throw ValidationError("gen_weights: w2 must be >= 1");
            if (t.estimate.universe() != n) {
              throw ValidationError("gen_weights: support estimate has the wrong universe");
            }
            Vector w = Vector::Constant(len, t.w2);
            for (Index j : t.estimate.indices()) w[static_cast<Eigen::Index>(j)] = 1.0;
            return WeightVector(std::move(w));
          }},
      scheme);
}

void SignalModelConfig::validate() const {
  if (n < 1) throw ValidationError("SignalModelConfig: N must be >= 1");
  if (weights.size() != n) throw ValidationError("SignalModelConfig: weights length differs from N");
  if (!(value_stddev > 0.0)) throw ValidationError("SignalModelConfig: stddev must be positive");
  const double total = weights.values().squaredNorm();
  if (!(target_weighted_sparsity > 0.0) || target_weighted_sparsity > total) {
    throw ValidationError("SignalModelConfig: weighted sparsity must lie in (0, sum w_j^2]");
  }
}

Vector inclusion_probabilities(const SignalModelConfig& config) {
  config.validate();
  const double scale = config.target_weighted_sparsity / static_cast<double>(config.n);
  Vector p = scale * config.weights.values().array().square().inverse().matrix();
  return p.cwiseMin(1.0);
}

SampledSignal sample_weighted_sparse_signal(const SignalModelConfig& config) {
  config.validate();
  const double scale = config.target_weighted_sparsity / static_cast<double>(config.n);
  Rng rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> value(0.0, config.value_stddev);

  bool capped = false;
  Vector x = Vector::Zero(static_cast<Eigen::Index>(config.n));
  for (Index j = 0; j < config.n; ++j) {
    const double wj = config.weights[j];
    double p = scale / (wj * wj);
    if (p > 1.0) {
      p = 1.0;
      capped = true;
    }
    // Draw the value unconditionally so index j always consumes the same
    // number of variates.
    const double u = unit(rng);
    double v = value(rng);
    while (v == 0.0) v = value(rng);
    if (u < p) x[static_cast<Eigen::Index>(j)] = v;
  }
  return {SparseSignal(std::move(x)), capped};
}

SparseSignal signal_on_support(const SupportSet& support, double stddev, std::uint64_t seed) {
  if (!(stddev > 0.0)) throw ValidationError("signal_on_support: stddev must be positive");
  Rng rng(seed);
  std::normal_distribution<double> value(0.0, stddev);
  Vector x = Vector::Zero(static_cast<Eigen::Index>(support.universe()));
  for (Index j : support.indices()) {
    double v = value(rng);
    while (v == 0.0) v = value(rng);
    x[static_cast<Eigen::Index>(j)] = v;
  }
  return SparseSignal(std::move(x));
}

Matrix gen_gaussian_matrix(Index m, Index n, std::uint64_t seed) {
  if (m < 1 || n < 1) throw ValidationError("gen_gaussian_matrix: dimensions must be >= 1");
  Rng rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  // Row-major draw order.
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = dist(rng);
  }
  return a;
}

Vector add_noise(const Vector& y_clean, double eta, std::uint64_t seed) {
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw ValidationError("add_noise: eta must be finite and >= 0");
  }
  if (eta == 0.0) return y_clean;
  Rng rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Vector e(y_clean.size());
  double norm = 0.0;
  while (norm == 0.0) {
    for (Eigen::Index i = 0; i < e.size(); ++i) e[i] = dist(rng);
    norm = e.norm();
  }
  return y_clean + (eta / norm) * e;
}

}  // namespace wcs::signals
