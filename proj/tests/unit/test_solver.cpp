#include "wcs/signals.hpp"
#include "wcs/solver.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <Eigen/LU>

#include <cmath>
#include <random>

using namespace wcs;
using doctest::Approx;

namespace {

ProblemInstance instance(Index m, Index n, Index k, double eta, std::uint64_t seed, WeightVector w) {
  const SparseSignal x = signals::signal_on_support(SupportSet::first(k, n), 1.0, seed);
  const Matrix A = signals::gen_gaussian_matrix(m, n, seed + 1);
  const Vector y = signals::add_noise(A * x.values(), eta, seed + 2);
  return ProblemInstance(A, y, std::move(w), eta, x);
}

}  // namespace

TEST_CASE("square systems have a single feasible point") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const WeightVector w = signals::gen_weights(signals::RandomUniformWeights{1, 3}, 12, seed);
    const ProblemInstance p = instance(12, 12, 4, 0.0, seed, w);
    const Vector exact = p.A.lu().solve(p.y);
    const auto r = solver::solve_weighted_l1(p);
    CHECK(r.converged);
    CHECK((r.minimizer - exact).norm() <= 1e-8 * std::max(1.0, exact.norm()));
    CHECK((solver::solve_l1(p).minimizer - exact).norm() <= 1e-8 * std::max(1.0, exact.norm()));
  }
}

TEST_CASE("equality-constrained solves match the vertex oracle") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Index n = 8, m = 5;
    const WeightVector w = signals::gen_weights(signals::RandomUniformWeights{1, 3}, n, 100 + seed);
    const ProblemInstance p = instance(m, n, 2, 0.0, seed, w);
    const auto r = solver::solve_weighted_l1(p);
    const double ref = oracles::lp_vertex_minimum(p.A, p.y, w.values());
    CAPTURE(seed);
    CHECK(r.converged);
    CHECK(r.objective == Approx(ref).epsilon(1e-6));
  }
}

TEST_CASE("result invariants") {
  const WeightVector w = signals::gen_weights(signals::PolynomialWeights{0.2}, 60, 0);
  const ProblemInstance p = instance(30, 60, 4, 1e-2, 3, w);
  const solver::SolverOptions opt;
  const auto r = solver::solve_weighted_l1(p, opt);
  CHECK(r.converged);
  CHECK(r.residual_norm <= p.noise_level + solver::feasibility_slack(opt, p.y));
  CHECK(r.objective == weighted_l1_norm(r.minimizer, w));
  CHECK(r.residual_norm == Approx((p.A * r.minimizer - p.y).norm()));
}

TEST_CASE("unweighted solve is the unit-weight solve") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ProblemInstance p = instance(10, 25, 3, seed % 2 ? 1e-3 : 0.0, seed, WeightVector::ones(25));
    const ProblemInstance q(p.A, p.y, signals::gen_weights(signals::PolynomialWeights{0.5}, 25, 0), p.noise_level);
    const auto a = solver::solve_l1(q);
    const auto b = solver::solve_weighted_l1(p);
    CHECK(a.minimizer == b.minimizer);
    CHECK(a.iterations == b.iterations);
  }
}

TEST_CASE("generic l1 recovers a 1-sparse vector from 4 of 6") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ProblemInstance p = instance(4, 6, 1, 0.0, seed, WeightVector::ones(6));
    const auto r = solver::solve_l1(p);
    CHECK(r.converged);
    CHECK(r.objective <= p.truth->values().lpNorm<1>() + 1e-8);
    CHECK(r.residual_norm <= solver::feasibility_slack({}, p.y));
    CHECK(r.objective == Approx(oracles::lp_vertex_minimum(p.A, p.y, Vector::Ones(6))).epsilon(1e-6));
  }
}

TEST_CASE("huge weights act as hard zeros") {
  const Index n = 40, k = 4;
  const SparseSignal x = signals::signal_on_support(SupportSet::first(k, n), 1.0, 8);
  std::vector<double> w(n, 1e12);
  for (Index j = 0; j < k; ++j) w[j] = 1.0;
  const Matrix A = signals::gen_gaussian_matrix(k + 1, n, 9);
  const ProblemInstance p(A, A * x.values(), WeightVector(w), 0.0, x);
  const auto r = solver::solve_weighted_l1(p);
  CHECK(r.converged);
  CHECK((r.minimizer - x.values()).norm() <= 1e-8);
}

TEST_CASE("zero is optimal when y is inside the noise ball") {
  const Matrix A = signals::gen_gaussian_matrix(5, 10, 1);
  const Vector y = Vector::Constant(5, 0.01);
  const auto r = solver::solve_weighted_l1(ProblemInstance(A, y, WeightVector::ones(10), 1.0));
  CHECK(r.converged);
  CHECK(r.minimizer.isZero());
  CHECK(r.objective == 0.0);
}

TEST_CASE("infeasible constraint is reported") {
  Matrix A = Matrix::Zero(3, 2);
  A(0, 0) = 1;
  A(1, 1) = 1;
  const Vector y = Eigen::Vector3d(1, 1, 1);
  CHECK_THROWS_AS(solver::solve_weighted_l1(ProblemInstance(A, y, WeightVector::ones(2), 0.5)),
                  solver::InfeasibleStall);
}

TEST_CASE("solver options are validated") {
  solver::SolverOptions o;
  o.max_iterations = 0;
  CHECK_THROWS_AS(o.validate(), ValidationError);
  o = {};
  o.penalty_parameter = -1;
  CHECK_THROWS_AS(o.validate(), ValidationError);
  o = {};
  o.primal_tolerance = 0;
  CHECK_THROWS_AS(o.validate(), ValidationError);
}
