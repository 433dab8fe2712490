#include "wcs/solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace wcs::solver {

namespace {

constexpr double kPolishObjectiveTolerance = 1e-7;
constexpr int kCertifyEvery = 50;
constexpr int kPolishRounds = 20;
constexpr double kDualFeasibilityTolerance = 1e-12;
constexpr int kPivotsPerRow = 50;

struct Reduced {
  Matrix storage;
  const Matrix* A = nullptr;
  Vector weights;
  std::vector<Eigen::Index> columns;  // reduced column -> original column
};

Reduced eliminate_hard_zeros(const Matrix& A, const Vector& weights, double cap) {
  Reduced out;
  const auto n = A.cols();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (weights[j] <= cap) out.columns.push_back(j);
  }
  const auto kept = static_cast<Eigen::Index>(out.columns.size());
  if (kept == n) {
    out.A = &A;
    out.weights = weights;
    return out;
  }
  out.storage.resize(A.rows(), kept);
  out.weights.resize(kept);
  for (Eigen::Index c = 0; c < kept; ++c) {
    out.storage.col(c) = A.col(out.columns[static_cast<std::size_t>(c)]);
    out.weights[c] = weights[out.columns[static_cast<std::size_t>(c)]];
  }
  out.A = &out.storage;
  return out;
}

Vector project_ball(const Vector& v, const Vector& center, double radius) {
  if (radius == 0.0) return center;
  Vector d = v - center;
  const double norm = d.norm();
  if (norm <= radius) return v;
  return center + (radius / norm) * d;
}

void soft_threshold_into(const Vector& v, const Vector& thresholds, Vector& out) {
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    const double mag = std::abs(v[j]) - thresholds[j];
    out[j] = mag > 0.0 ? std::copysign(mag, v[j]) : 0.0;
  }
}

double weighted_abs_sum(const Vector& x, const Vector& w) { return w.cwiseProduct(x.cwiseAbs()).sum(); }

// z = (I + A^T A)^{-1} b, also returning A z.
class NormalOperator {
 public:
  explicit NormalOperator(const Matrix& A) : A_(A), wide_(A.rows() < A.cols()) {
    if (wide_) {
      Matrix k = A * A.transpose();
      k.diagonal().array() += 1.0;
      llt_.compute(k);
    } else {
      Matrix k = A.transpose() * A;
      k.diagonal().array() += 1.0;
      llt_.compute(k);
    }
  }

  void apply(const Vector& b, Vector& z, Vector& az) const {
    if (wide_) {
      az = llt_.solve(A_ * b);
      z = b - A_.transpose() * az;
    } else {
      z = llt_.solve(b);
      az = A_ * z;
    }
  }

 private:
  const Matrix& A_;
  bool wide_;
  Eigen::LLT<Matrix> llt_;
};

struct Polished {
  Vector x;
  Vector dual;  // multiplier certifying x on its support
  bool accepted = false;
};

struct Restricted {
  Vector coef;
  Vector dual;
  bool ok = false;
  bool infeasible = false;  // y is farther than eta from the span of A_T
};

// Minimizes c^T v, c = w_T * signs, over ||A_T v - y||_2 <= eta: the least
// squares point pushed along -G^{-1} c to the boundary, with G = A_T^T A_T.
// The multiplier nu satisfies A_T^T nu = c.
Restricted solve_restricted(const Matrix& A, const Vector& y, const Vector& weights,
                            const std::vector<Eigen::Index>& support, const Vector& signs,
                            double eta, double slack) {
  Restricted out;
  const auto t = static_cast<Eigen::Index>(support.size());
  if (t == 0 || t > A.rows()) return out;
  Matrix sub(A.rows(), t);
  Vector c(t);
  for (Eigen::Index i = 0; i < t; ++i) {
    const Eigen::Index j = support[static_cast<std::size_t>(i)];
    sub.col(i) = A.col(j);
    c[i] = signs[i] * weights[j];
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(sub);
  if (qr.rank() < t) return out;
  out.coef = qr.solve(y);
  const double r0 = (sub * out.coef - y).norm();
  if (r0 > eta + slack) {
    out.infeasible = true;
    return out;
  }

  const Eigen::LDLT<Matrix> gram(sub.transpose() * sub);
  const Vector g = gram.solve(c);
  const double q = c.dot(g);
  if (!(q > 0.0)) return out;
  const double d = std::sqrt(std::max(0.0, eta * eta - r0 * r0));
  if (d > 0.0) {
    out.coef -= (d / std::sqrt(q)) * g;
    out.dual = (std::sqrt(q) / d) * (y - sub * out.coef);
  } else {
    out.dual = sub * g;
  }
  out.ok = true;
  return out;
}

// True when the restricted solution keeps its signs and its multiplier is
// dual feasible, so it solves the full program.
bool settled(const Matrix& A, const Vector& weights, const std::vector<Eigen::Index>& support,
             const std::vector<double>& signs, const Restricted& r) {
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (!(r.coef[static_cast<Eigen::Index>(i)] * signs[i] > 0.0)) return false;
  }
  const Vector atv = A.transpose() * r.dual;
  for (Eigen::Index j = 0; j < atv.size(); ++j) {
    if (std::abs(atv[j]) > weights[j] * (1.0 + kDualFeasibilityTolerance) &&
        !std::binary_search(support.begin(), support.end(), j)) {
      return false;
    }
  }
  return true;
}

// Primal simplex on the split form z = z+ - z- of the eta = 0 program,
// started from a square basis. On the optimal basis B the point
// A_B^{-1} (y - eta nu / ||nu||), nu = A_B^{-T} (w_B * signs), solves the
// eta > 0 program whenever it keeps the signs; otherwise the vertex itself is
// returned, which is feasible with duality gap eta ||nu||.
Polished exchange(const Matrix& A, const Vector& y, const Vector& weights,
                  std::vector<Eigen::Index> basis, double eta) {
  Polished out;
  const Eigen::Index m = A.rows();
  Matrix sub(m, m);
  for (Eigen::Index i = 0; i < m; ++i) sub.col(i) = A.col(basis[static_cast<std::size_t>(i)]);
  Eigen::PartialPivLU<Matrix> lu(sub);
  Vector xb = lu.solve(y);
  if (!((sub * xb - y).norm() <= 1e-9 * std::max(1.0, y.norm()))) return out;
  Vector signs(m);
  for (Eigen::Index i = 0; i < m; ++i) signs[i] = xb[i] < 0.0 ? -1.0 : 1.0;

  std::vector<char> in_basis(static_cast<std::size_t>(A.cols()), 0);
  for (auto j : basis) in_basis[static_cast<std::size_t>(j)] = 1;

  const int max_pivots = kPivotsPerRow * static_cast<int>(m) + 100;
  for (int pivot = 0; pivot < max_pivots; ++pivot) {
    Vector c(m);
    for (Eigen::Index i = 0; i < m; ++i) c[i] = signs[i] * weights[basis[static_cast<std::size_t>(i)]];
    const Vector nu = lu.transpose().solve(c);
    const Vector atv = A.transpose() * nu;
    Eigen::Index enter = -1;
    double worst = 1.0 + kDualFeasibilityTolerance;
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      if (in_basis[static_cast<std::size_t>(j)]) continue;
      const double ratio = std::abs(atv[j]) / weights[j];
      if (ratio > worst) {
        worst = ratio;
        enter = j;
      }
    }
    if (enter < 0) {
      const double nu_norm = nu.norm();
      if (eta > 0.0 && nu_norm > 0.0) {
        const Vector shifted = lu.solve(Vector(y - (eta / nu_norm) * nu));
        if ((shifted.array() * signs.array() >= 0.0).all()) xb = shifted;
      }
      out.x = Vector::Zero(A.cols());
      for (Eigen::Index i = 0; i < m; ++i) out.x[basis[static_cast<std::size_t>(i)]] = xb[i];
      out.dual = nu;
      out.accepted = true;
      return out;
    }
    const double sigma = atv[enter] > 0.0 ? 1.0 : -1.0;
    const Vector d = sigma * lu.solve(A.col(enter));
    Eigen::Index leave = -1;
    double step = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      if (signs[i] * d[i] <= 0.0) continue;
      const double theta = std::abs(xb[i]) / std::abs(d[i]);
      if (theta < step) {
        step = theta;
        leave = i;
      }
    }
    if (leave < 0) return out;
    xb -= step * d;
    xb[leave] = sigma * step;
    signs[leave] = sigma;
    in_basis[static_cast<std::size_t>(basis[static_cast<std::size_t>(leave)])] = 0;
    in_basis[static_cast<std::size_t>(enter)] = 1;
    basis[static_cast<std::size_t>(leave)] = enter;
    sub.col(leave) = A.col(enter);
    lu.compute(sub);
  }
  return out;
}

// Active-set refinement started from the support and signs of x: drop
// coordinates whose sign flips, add the worst dual violator, repeat. While the
// support cannot reach the constraint it grows by the largest entry of the
// dense iterate `hint`.
Polished polish(const Matrix& A, const Vector& y, const Vector& weights, const Vector& x,
                const Vector& hint, double eta, double slack, bool require_descent) {
  Polished out{x, Vector(), false};
  std::vector<Eigen::Index> support;
  std::vector<double> sign_list;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (x[j] != 0.0) {
      support.push_back(j);
      sign_list.push_back(x[j] > 0.0 ? 1.0 : -1.0);
    }
  }

  std::optional<Vector> best;
  Vector best_dual;
  int rounds_extra = 0;
  const int rounds = kPolishRounds + 2 * static_cast<int>(support.size());
  for (int round = 0; round < rounds + rounds_extra && !support.empty(); ++round) {
    const Vector signs = Eigen::Map<const Vector>(sign_list.data(),
                                                  static_cast<Eigen::Index>(sign_list.size()));
    const Restricted r = solve_restricted(A, y, weights, support, signs, eta, slack);
    if (r.infeasible && static_cast<Eigen::Index>(support.size()) < A.rows()) {
      Eigen::Index pick = -1;
      for (Eigen::Index j = 0; j < hint.size(); ++j) {
        if (std::binary_search(support.begin(), support.end(), j) || hint[j] == 0.0) continue;
        if (pick < 0 || std::abs(hint[j]) > std::abs(hint[pick])) pick = j;
      }
      if (pick < 0) break;
      const auto at = std::upper_bound(support.begin(), support.end(), pick);
      sign_list.insert(sign_list.begin() + (at - support.begin()), hint[pick] > 0.0 ? 1.0 : -1.0);
      support.insert(at, pick);
      ++rounds_extra;
      continue;
    }
    if (!r.ok) break;
    if (static_cast<Eigen::Index>(support.size()) == A.rows() &&
        !settled(A, weights, support, sign_list, r)) {
      Polished p = exchange(A, y, weights, support, eta);
      if (p.accepted) {
        best = std::move(p.x);
        best_dual = std::move(p.dual);
      }
      break;
    }

    std::vector<Eigen::Index> kept;
    std::vector<double> kept_signs;
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (r.coef[static_cast<Eigen::Index>(i)] * sign_list[i] > 0.0) {
        kept.push_back(support[i]);
        kept_signs.push_back(sign_list[i]);
      }
    }
    if (kept.size() < support.size()) {
      support = std::move(kept);
      sign_list = std::move(kept_signs);
      continue;
    }

    Vector candidate = Vector::Zero(x.size());
    for (std::size_t i = 0; i < support.size(); ++i) {
      candidate[support[i]] = r.coef[static_cast<Eigen::Index>(i)];
    }
    best = std::move(candidate);
    best_dual = r.dual;

    const Vector atv = A.transpose() * r.dual;
    Eigen::Index worst = -1;
    double worst_ratio = 1.0 + kDualFeasibilityTolerance;
    for (Eigen::Index j = 0; j < atv.size(); ++j) {
      const double ratio = std::abs(atv[j]) / weights[j];
      if (ratio > worst_ratio && (*best)[j] == 0.0) {
        worst_ratio = ratio;
        worst = j;
      }
    }
    if (worst < 0) break;
    const auto at = std::upper_bound(support.begin(), support.end(), worst);
    sign_list.insert(sign_list.begin() + (at - support.begin()), atv[worst] > 0.0 ? 1.0 : -1.0);
    support.insert(at, worst);
  }
  if (!best) return out;

  const double obj_old = weighted_abs_sum(x, weights);
  const double obj_new = weighted_abs_sum(*best, weights);
  if (!require_descent ||
      obj_new <= obj_old + kPolishObjectiveTolerance * std::max(obj_old, 1e-300)) {
    out.x = std::move(*best);
    out.dual = std::move(best_dual);
    out.accepted = true;
  }
  return out;
}

// Lower bound <y, v> - eta ||v|| on the optimal value, after scaling v into
// the dual feasible set |A^T v|_j <= w_j.
double dual_bound(const Matrix& A, const Vector& y, const Vector& weights, Vector v, double eta) {
  const Vector atv = A.transpose() * v;
  const double scale = atv.cwiseAbs().cwiseQuotient(weights).maxCoeff();
  if (!(scale > 0.0)) return 0.0;
  if (scale > 1.0) v /= scale;
  return y.dot(v) - eta * v.norm();
}

}  // namespace

void SolverOptions::validate() const {
  if (max_iterations < 1) throw ValidationError("SolverOptions: max_iterations must be >= 1");
  if (!(primal_tolerance > 0.0) || !(dual_tolerance > 0.0) || !(gap_tolerance > 0.0)) {
    throw ValidationError("SolverOptions: tolerances must be positive");
  }
  if (!(penalty_parameter > 0.0) || !std::isfinite(penalty_parameter)) {
    throw ValidationError("SolverOptions: penalty_parameter must be positive");
  }
  if (!(hard_weight_cap >= 1.0)) throw ValidationError("SolverOptions: hard_weight_cap must be >= 1");
}

double feasibility_slack(const SolverOptions& options, const Vector& y) {
  return 10.0 * options.primal_tolerance * std::max(1.0, y.norm());
}

namespace {

SolveResult solve_impl(const Matrix& A_full, const Vector& y, const WeightVector& weights,
                       double eta, const SolverOptions& options) {
  const double slack = feasibility_slack(options, y);
  const auto n_full = A_full.cols();

  SolveResult result;
  result.minimizer = Vector::Zero(n_full);

  const Reduced reduced = eliminate_hard_zeros(A_full, weights.values(), options.hard_weight_cap);
  const Matrix& A = *reduced.A;
  const Eigen::Index n = A.cols();
  const Eigen::Index m = A.rows();

  auto finish = [&](const Vector& reduced_x) {
    for (Eigen::Index c = 0; c < n; ++c) {
      result.minimizer[reduced.columns[static_cast<std::size_t>(c)]] = reduced_x[c];
    }
    result.objective = weighted_l1_norm(result.minimizer, weights);
    result.residual_norm = (A_full * result.minimizer - y).norm();
  };

  if (n == 0) {
    finish(Vector());
    if (result.residual_norm > eta + slack) {
      throw InfeasibleStall("solve_weighted_l1: every coordinate is constrained to zero and "
                            "||y||_2 exceeds the noise level");
    }
    result.converged = true;
    return result;
  }

  const Eigen::ColPivHouseholderQR<Matrix> full_qr(A);
  const double reachable = (A * full_qr.solve(y) - y).norm();
  if (reachable > eta + slack) {
    std::ostringstream os;
    os << "solve_weighted_l1: least-squares residual " << reachable
       << " exceeds the noise level " << eta << "; no feasible point";
    throw InfeasibleStall(os.str());
  }

  const NormalOperator normal(A);
  double rho = options.penalty_parameter;
  const double eps_primal = options.primal_tolerance * std::max(1.0, y.norm());

  Vector z = Vector::Zero(n);
  Vector w = Vector::Zero(n);
  Vector w_old(n);
  Vector az = Vector::Zero(m);
  Vector r = project_ball(Vector::Zero(m), y, eta);
  Vector r_old(m);
  Vector u1 = Vector::Zero(m);
  Vector u2 = Vector::Zero(n);
  Vector b(n);
  Vector thresholds(n);
  Vector dual_vec(n);

  std::optional<Vector> certified;
  double primal = std::numeric_limits<double>::infinity();
  double dual = std::numeric_limits<double>::infinity();
  int it = 0;
  int next_certify = kCertifyEvery;
  for (it = 1; it <= options.max_iterations; ++it) {
    b.noalias() = A.transpose() * (r - u1);
    b += w - u2;
    normal.apply(b, z, az);

    w_old = w;
    r_old = r;
    thresholds = reduced.weights / rho;
    soft_threshold_into(z + u2, thresholds, w);
    r = project_ball(az + u1, y, eta);

    u1 += az - r;
    u2 += z - w;

    const bool check = (it % 10 == 0) || it == options.max_iterations;
    if (!check) continue;

    primal = std::sqrt((az - r).squaredNorm() + (z - w).squaredNorm());
    dual_vec.noalias() = A.transpose() * (r - r_old);
    dual_vec += w - w_old;
    dual = rho * dual_vec.norm();
    dual_vec.noalias() = A.transpose() * u1;
    dual_vec += u2;
    const double eps_dual = options.dual_tolerance * std::max(1.0, rho * dual_vec.norm());

    if (primal <= eps_primal && dual <= eps_dual) {
      const double residual = (A * w - y).norm();
      if (residual <= eta + slack) {
        result.converged = true;
        break;
      }
    }

    if (it >= next_certify) {
      next_certify = it + std::max(kCertifyEvery, it / 10);
      Vector candidate = w;
      double lower = dual_bound(A, y, reduced.weights, -rho * u1, eta);
      if (options.polish) {
        Polished p = polish(A, y, reduced.weights, w, z, eta, slack, false);
        if (p.accepted) {
          candidate = std::move(p.x);
          lower = std::max(lower, dual_bound(A, y, reduced.weights, p.dual, eta));
        }
      }
      if ((A * candidate - y).norm() <= eta + slack) {
        const double obj = weighted_abs_sum(candidate, reduced.weights);
        const double gap = obj - lower;
        if (gap <= options.gap_tolerance * std::max(1.0, obj)) {
          certified = std::move(candidate);
          result.converged = true;
          break;
        }
      }
    }

    if (options.penalty_adaptation && it <= options.max_iterations / 2) {
      const double p_ratio = primal / eps_primal;
      const double d_ratio = dual / eps_dual;
      if (p_ratio > 10.0 * d_ratio) {
        rho *= 2.0;
        u1 /= 2.0;
        u2 /= 2.0;
      } else if (d_ratio > 10.0 * p_ratio) {
        rho /= 2.0;
        u1 *= 2.0;
        u2 *= 2.0;
      }
    }

  }

  result.iterations = std::min(it, options.max_iterations);
  result.primal_residual = primal;
  result.dual_residual = dual;

  Vector x = w;
  if (certified) {
    x = std::move(*certified);
    result.polished = options.polish;
  } else if (options.polish && result.converged) {
    Polished p = polish(A, y, reduced.weights, w, z, eta, slack, true);
    if (p.accepted && (A * p.x - y).norm() <= eta + slack) {
      x = std::move(p.x);
      result.polished = true;
    }
  }
  finish(x);
  if (result.converged && result.residual_norm > eta + slack) result.converged = false;
  return result;
}

}  // namespace

SolveResult solve_weighted_l1(const ProblemInstance& instance, const SolverOptions& options) {
  instance.validate();
  options.validate();
  return solve_impl(instance.A, instance.y, instance.weights, instance.noise_level, options);
}

SolveResult solve_l1(const ProblemInstance& instance, const SolverOptions& options) {
  instance.validate();
  options.validate();
  return solve_impl(instance.A, instance.y, WeightVector::ones(instance.cols()),
                    instance.noise_level, options);
}

}  // namespace wcs::solver
