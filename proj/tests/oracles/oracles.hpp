#pragma once

// Reference computations used by the tests. None of them call into the
// library's numerical code.

#include <Eigen/Core>
#include <Eigen/LU>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

namespace oracles {

/// Composite Simpson rule on [a, b] with an even number of panels.
template <class F>
double simpson(F&& f, double a, double b, int panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

/// E[S_lambda(g)^2] = 2 int_lambda^inf (x - lambda)^2 phi(x) dx.
inline double soft_threshold_moment(double lambda) {
  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  auto f = [&](double x) { return 2.0 * (x - lambda) * (x - lambda) * inv_sqrt_2pi * std::exp(-x * x / 2); };
  return simpson(f, lambda, lambda + 40.0, 200000);
}

/// E||g||_2 in dimension m from c_1 = sqrt(2/pi) and c_m c_{m+1} = m.
inline double mean_length(std::uint64_t m) {
  double c = std::sqrt(2.0 / std::numbers::pi);
  for (std::uint64_t j = 1; j < m; ++j) c = static_cast<double>(j) / c;
  return c;
}

/// Smallest m >= 1 with m / sqrt(m + 1) >= rhs, by linear scan.
inline std::uint64_t scan_measurements(double rhs) {
  std::uint64_t m = 1;
  while (static_cast<double>(m) / std::sqrt(static_cast<double>(m) + 1.0) < rhs) ++m;
  return m;
}

/// min sum_j w_j |z_j| subject to A z = y, for A with full row rank m <= N.
/// The split LP over (z+, z-) has its basic solutions on column subsets S
/// with |S| = m and A_S invertible, z_S = A_S^{-1} y; the optimum is the
/// cheapest of them.
inline double lp_vertex_minimum(const Eigen::MatrixXd& A, const Eigen::VectorXd& y,
                                const Eigen::VectorXd& w) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> pick(m);
  for (int i = 0; i < m; ++i) pick[i] = i;
  while (true) {
    Eigen::MatrixXd B(m, m);
    for (int i = 0; i < m; ++i) B.col(i) = A.col(pick[i]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
    if (lu.rank() == m) {
      const Eigen::VectorXd z = lu.solve(y);
      double cost = 0.0;
      for (int i = 0; i < m; ++i) cost += w[pick[i]] * std::abs(z[i]);
      if (cost < best) best = cost;
    }
    int i = m - 1;
    while (i >= 0 && pick[i] == n - m + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace oracles
