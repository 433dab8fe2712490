#include "wcs/signals.hpp"

#include <doctest.h>

#include <cmath>

using namespace wcs;
using doctest::Approx;

TEST_CASE("weight schemes") {
  const WeightVector poly = signals::gen_weights(signals::PolynomialWeights{0.2}, 40, 0);
  CHECK(poly[31] == Approx(2.0).epsilon(1e-14));
  CHECK(poly[0] == 1.0);

  const WeightVector ones = signals::gen_weights(signals::UniformWeights{}, 17, 5);
  CHECK(ones.values().isOnes());

  const SupportSet est({2, 5}, 8);
  const WeightVector two = signals::gen_weights(signals::TwoWeights{est, 3.0}, 8, 0);
  for (Index j = 0; j < 8; ++j) CHECK(two[j] == (est.contains(j) ? 1.0 : 3.0));

  const WeightVector rnd = signals::gen_weights(signals::RandomUniformWeights{1.0, 3.0}, 50, 9);
  CHECK(rnd.values().minCoeff() == 1.0);
  CHECK(rnd.values().maxCoeff() <= 3.0);
  CHECK(rnd.values() == signals::gen_weights(signals::RandomUniformWeights{1.0, 3.0}, 50, 9).values());
  CHECK(rnd.values() != signals::gen_weights(signals::RandomUniformWeights{1.0, 3.0}, 50, 10).values());

  CHECK_THROWS_AS(signals::gen_weights(signals::PolynomialWeights{0.0}, 5, 0), ValidationError);
  CHECK_THROWS_AS(signals::gen_weights(signals::TwoWeights{est, 0.5}, 8, 0), ValidationError);
  CHECK_THROWS_AS(signals::gen_weights(signals::UniformWeights{}, 0, 0), ValidationError);
}

TEST_CASE("inclusion probabilities") {
  signals::SignalModelConfig c{500, 25, WeightVector::ones(500), 1.0, 0};
  CHECK(signals::inclusion_probabilities(c).isConstant(0.05));
  c.target_weighted_sparsity = 500;
  CHECK(signals::inclusion_probabilities(c).isOnes());
  const auto full = signals::sample_weighted_sparse_signal(c);
  CHECK(full.signal.support().cardinality() == 500);
  CHECK_FALSE(full.capped);
  c.target_weighted_sparsity = 501;
  CHECK_THROWS_AS(signals::sample_weighted_sparse_signal(c), ValidationError);
  std::vector<double> w(10, 1.0);
  w[9] = 10.0;
  const signals::SignalModelConfig capped{10, 20, WeightVector(w), 1.0, 0};
  CHECK(signals::inclusion_probabilities(capped)[0] == 1.0);
  CHECK(signals::inclusion_probabilities(capped)[9] == doctest::Approx(0.02));
  CHECK(signals::sample_weighted_sparse_signal(capped).capped);
}

TEST_CASE("sampled weighted sparsity matches its target in expectation") {
  const WeightVector w = signals::gen_weights(signals::PolynomialWeights{0.2}, 500, 0);
  const double s = 25;
  double sum = 0, sum2 = 0;
  const int draws = 2000;
  for (int i = 0; i < draws; ++i) {
    const auto x = signals::sample_weighted_sparse_signal({500, s, w, 1.0, static_cast<std::uint64_t>(i)});
    const double o = weighted_cardinality(x.signal.support(), w);
    sum += o;
    sum2 += o * o;
  }
  const double mean = sum / draws;
  const double se = std::sqrt((sum2 / draws - mean * mean) / (draws - 1));
  CHECK(std::abs(mean - s) <= 3 * se);
}

TEST_CASE("signal on a fixed support") {
  const SupportSet s({1, 4, 7}, 10);
  const SparseSignal x = signals::signal_on_support(s, 2.0, 3);
  CHECK(x.support() == s);
  CHECK(x.values() == signals::signal_on_support(s, 2.0, 3).values());
}

TEST_CASE("gaussian matrices") {
  const Matrix a = signals::gen_gaussian_matrix(1000, 1000, 42);
  const double mean = a.mean();
  const double var = (a.array() - mean).square().sum() / (a.size() - 1);
  CHECK(std::abs(mean) <= 3e-3);
  CHECK(std::abs(var - 1.0) <= 5e-3);
  CHECK(a == signals::gen_gaussian_matrix(1000, 1000, 42));
  CHECK(signals::gen_gaussian_matrix(3, 4, 1) != signals::gen_gaussian_matrix(3, 4, 2));
}

TEST_CASE("exact-norm noise") {
  const Vector y = Vector::LinSpaced(20, -1, 1);
  CHECK(signals::add_noise(y, 0.0, 5) == y);
  const Vector a = signals::add_noise(y, 0.3, 5);
  const Vector b = signals::add_noise(y, 0.3, 6);
  CHECK((a - y).norm() == Approx(0.3).epsilon(1e-14));
  CHECK((b - y).norm() == Approx(0.3).epsilon(1e-14));
  CHECK(a != b);
  CHECK_THROWS_AS(signals::add_noise(y, -1.0, 5), ValidationError);
}
