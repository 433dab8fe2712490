#include "wcs/bounds.hpp"
#include "wcs/montecarlo.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace wcs;
using doctest::Approx;

TEST_CASE("dual width estimator") {
  SUBCASE("full support reduces to the mean length") {
    const auto est = montecarlo::empirical_dual_width(WeightVector::ones(30), SupportSet::full(30), 4000, 1);
    CHECK(std::abs(est.mean - oracles::mean_length(30)) <= 3 * est.std_error);
    CHECK(est.h.max == 0.0);
  }
  SUBCASE("empty support goes to zero") {
    const auto est = montecarlo::empirical_dual_width(WeightVector::ones(30), SupportSet({}, 30), 500, 1);
    CHECK(est.mean <= 3 * est.std_error + 1e-6);
  }
  SUBCASE("closed-form bound dominates") {
    const WeightVector w = WeightVector::ones(200);
    const SupportSet s = SupportSet::first(10, 200);
    const auto est = montecarlo::empirical_dual_width(w, s, 2000, 3);
    CHECK(est.n_samples == 2000);
    CHECK(est.mean <= bounds::width_bound(w, s).bound + 3 * est.std_error);
  }
}

TEST_CASE("per-sample minimum is the minimum over h") {
  Vector g(6);
  g << 0.3, 2.1, 0.7, 1.5, 0.05, 1.1;
  const WeightVector w(std::vector<double>{1, 1.5, 2, 1, 3, 1.2});
  const SupportSet s({0, 3}, 6);
  const auto best = montecarlo::dual_sample_minimum(g, w, s);
  CHECK(best.value * best.value == Approx(montecarlo::dual_objective_squared(g, w, s, best.h)));
  for (double h = 0.0; h < 5.0; h += 1e-3) {
    CHECK(best.value * best.value <= montecarlo::dual_objective_squared(g, w, s, h) + 1e-12);
  }
}

TEST_CASE("mean length estimator") {
  const auto one = montecarlo::empirical_mean_length(1, 100000, 4);
  CHECK(std::abs(one.mean - std::sqrt(2.0 / 3.141592653589793)) <= 3 * one.std_error);
  const auto hundred = montecarlo::empirical_mean_length(100, 100000, 4);
  CHECK(std::abs(hundred.mean - oracles::mean_length(100)) <= 3 * hundred.std_error);
  CHECK(hundred.mean >= 100 / std::sqrt(101.0));
  CHECK(hundred.mean <= 10.0);
  CHECK(hundred.mean == montecarlo::empirical_mean_length(100, 100000, 4).mean);
}

TEST_CASE("zeta lower bound") {
  CHECK(montecarlo::zeta_lower_bound(10, 0.1, 10.0) == 0.0);
  const double w = 2.0;
  CHECK(montecarlo::zeta_lower_bound(50, 1.0 - 1e-12, w) == Approx(50 / std::sqrt(51.0) - w).epsilon(1e-5));
  const WeightVector ones = WeightVector::ones(300);
  const SupportSet s = SupportSet::first(5, 300);
  const auto lemma = bounds::sample_complexity_lemma(ones, s, 0.05, 0.2);
  CHECK(montecarlo::zeta_lower_bound(lemma.m_min, ones, s, 0.05) >= 0.2 - 1e-12);
}
