#pragma once

// Domain types shared by every module: weights, supports, sparse signals and
// recovery instances, plus the weighted norms and cone predicates built on them.
//
// Indices are 0-based in memory. Anything that crosses an I/O boundary
// (CSV, config, CLI) is 1-based; see to_one_based / from_one_based.

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wcs {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = std::size_t;

/// Raised when an argument violates a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Per-index penalties, every entry finite and >= 1.
class WeightVector {
 public:
  explicit WeightVector(Vector values);
  explicit WeightVector(const std::vector<double>& values);

  static WeightVector ones(Index n);

  Index size() const { return static_cast<Index>(values_.size()); }
  double operator[](Index j) const { return values_[static_cast<Eigen::Index>(j)]; }
  const Vector& values() const { return values_; }

  /// Returns c * w. The scale must keep every entry >= 1.
  WeightVector scaled(double c) const;

 private:
  Vector values_;
};

/// Strictly increasing list of 0-based indices into [0, n).
class SupportSet {
 public:
  SupportSet() = default;
  /// Sorts and de-duplicates. Throws if an index is >= n.
  SupportSet(std::vector<Index> indices, Index n);

  static SupportSet from_one_based(const std::vector<long long>& indices, Index n);
  static SupportSet first(Index k, Index n);
  static SupportSet full(Index n);
  static SupportSet from_nonzeros(const Vector& x);

  Index universe() const { return n_; }
  Index cardinality() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(Index j) const;
  std::span<const Index> indices() const { return indices_; }

  SupportSet complement() const;
  SupportSet intersect(const SupportSet& other) const;
  SupportSet unite(const SupportSet& other) const;
  /// Same universe, membership mask of length n.
  std::vector<bool> mask() const;
  std::vector<long long> to_one_based() const;

  bool operator==(const SupportSet&) const = default;

 private:
  std::vector<Index> indices_;
  Index n_ = 0;
};

/// Dense vector plus the support derived from its exact nonzeros.
class SparseSignal {
 public:
  explicit SparseSignal(Vector x);

  const Vector& values() const { return x_; }
  const SupportSet& support() const { return support_; }
  Index size() const { return static_cast<Index>(x_.size()); }

 private:
  Vector x_;
  SupportSet support_;
};

/// One recovery trial: y = A x + e with ||e||_2 <= noise_level.
struct ProblemInstance {
  Matrix A;
  Vector y;
  WeightVector weights;
  double noise_level = 0.0;
  std::optional<SparseSignal> truth;
  std::uint64_t seed = 0;

  ProblemInstance(Matrix a, Vector y_meas, WeightVector w, double eta,
                  std::optional<SparseSignal> x = std::nullopt, std::uint64_t s = 0);

  Index rows() const { return static_cast<Index>(A.rows()); }
  Index cols() const { return static_cast<Index>(A.cols()); }

  /// Throws ValidationError on inconsistent dimensions or a negative noise level.
  void validate() const;
};

double weighted_l1_norm(const Vector& x, const WeightVector& w);
/// Weighted l1 norm of x restricted to the indices of s.
double weighted_l1_norm(const Vector& x, const WeightVector& w, const SupportSet& s);

/// (||z_S||_{w,1}, ||z_{S^c}||_{w,1}), each accumulated separately.
std::pair<double, double> split_weighted_l1(const Vector& z, const SupportSet& s,
                                            const WeightVector& w);

/// Sum over j in s of w_j^2.
double weighted_cardinality(const SupportSet& s, const WeightVector& w);

/// True iff ||z_S||_{w,1} >= ||z_{S^c}||_{w,1}. `slack` loosens the comparison
/// by an absolute amount for checks against numerically computed vectors.
bool in_violation_cone(const Vector& z, const SupportSet& s, const WeightVector& w,
                       double slack = 0.0);

/// Per-vector check of the nonuniform weighted robust null space inequality
/// ||z_S||_{w,1} <= rho ||z_{S^c}||_{w,1} + tau ||A z||_2.
bool rnsp_holds(const Matrix& A, const Vector& z, const SupportSet& s, const WeightVector& w,
                double rho, double tau);

}  // namespace wcs
