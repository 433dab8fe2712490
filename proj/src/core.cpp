#include "wcs/core.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>

namespace wcs {

namespace {

void require_same_length(Index a, Index b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw ValidationError(os.str());
  }
}

}  // namespace

std::pair<double, double> split_weighted_l1(const Vector& z, const SupportSet& s,
                                            const WeightVector& w) {
  require_same_length(static_cast<Index>(z.size()), w.size(), "split_weighted_l1");
  require_same_length(s.universe(), w.size(), "split_weighted_l1 support");
  double on = 0.0;
  double off = 0.0;
  auto it = s.indices().begin();
  for (Index j = 0; j < w.size(); ++j) {
    const double term = w[j] * std::abs(z[static_cast<Eigen::Index>(j)]);
    if (it != s.indices().end() && *it == j) {
      on += term;
      ++it;
    } else {
      off += term;
    }
  }
  return {on, off};
}

WeightVector::WeightVector(Vector values) : values_(std::move(values)) {
  if (values_.size() == 0) throw ValidationError("WeightVector: length must be >= 1");
  for (Eigen::Index j = 0; j < values_.size(); ++j) {
    const double v = values_[j];
    if (!std::isfinite(v)) {
      throw ValidationError("WeightVector: entry " + std::to_string(j + 1) + " is not finite");
    }
    if (v < 1.0) {
      std::ostringstream os;
      os.precision(17);
      os << "WeightVector: entry " << (j + 1) << " = " << v << " is below 1";
      throw ValidationError(os.str());
    }
  }
}

WeightVector::WeightVector(const std::vector<double>& values)
    : WeightVector(Vector(Eigen::Map<const Vector>(values.data(),
                                                   static_cast<Eigen::Index>(values.size())))) {}

WeightVector WeightVector::ones(Index n) {
  return WeightVector(Vector::Ones(static_cast<Eigen::Index>(n)));
}

WeightVector WeightVector::scaled(double c) const { return WeightVector(Vector(c * values_)); }

SupportSet::SupportSet(std::vector<Index> indices, Index n) : indices_(std::move(indices)), n_(n) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (!indices_.empty() && indices_.back() >= n_) {
    throw ValidationError("SupportSet: index " + std::to_string(indices_.back() + 1) +
                          " outside [1, " + std::to_string(n_) + "]");
  }
}

SupportSet SupportSet::from_one_based(const std::vector<long long>& indices, Index n) {
  std::vector<Index> zero_based;
  zero_based.reserve(indices.size());
  for (long long j : indices) {
    if (j < 1 || static_cast<unsigned long long>(j) > n) {
      throw ValidationError("SupportSet: index " + std::to_string(j) + " outside [1, " +
                            std::to_string(n) + "]");
    }
    zero_based.push_back(static_cast<Index>(j - 1));
  }
  return SupportSet(std::move(zero_based), n);
}

SupportSet SupportSet::first(Index k, Index n) {
  if (k > n) throw ValidationError("SupportSet::first: k exceeds n");
  std::vector<Index> idx(k);
  for (Index j = 0; j < k; ++j) idx[j] = j;
  return SupportSet(std::move(idx), n);
}

SupportSet SupportSet::full(Index n) { return first(n, n); }

SupportSet SupportSet::from_nonzeros(const Vector& x) {
  std::vector<Index> idx;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (x[j] != 0.0) idx.push_back(static_cast<Index>(j));
  }
  return SupportSet(std::move(idx), static_cast<Index>(x.size()));
}

bool SupportSet::contains(Index j) const {
  return std::binary_search(indices_.begin(), indices_.end(), j);
}

SupportSet SupportSet::complement() const {
  std::vector<Index> out;
  out.reserve(n_ - indices_.size());
  auto it = indices_.begin();
  for (Index j = 0; j < n_; ++j) {
    if (it != indices_.end() && *it == j) {
      ++it;
    } else {
      out.push_back(j);
    }
  }
  return SupportSet(std::move(out), n_);
}

SupportSet SupportSet::intersect(const SupportSet& other) const {
  require_same_length(n_, other.n_, "SupportSet::intersect");
  std::vector<Index> out;
  std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(),
                        other.indices_.end(), std::back_inserter(out));
  return SupportSet(std::move(out), n_);
}

SupportSet SupportSet::unite(const SupportSet& other) const {
  require_same_length(n_, other.n_, "SupportSet::unite");
  std::vector<Index> out;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                 std::back_inserter(out));
  return SupportSet(std::move(out), n_);
}

std::vector<bool> SupportSet::mask() const {
  std::vector<bool> m(n_, false);
  for (Index j : indices_) m[j] = true;
  return m;
}

std::vector<long long> SupportSet::to_one_based() const {
  std::vector<long long> out;
  out.reserve(indices_.size());
  for (Index j : indices_) out.push_back(static_cast<long long>(j) + 1);
  return out;
}

SparseSignal::SparseSignal(Vector x) : x_(std::move(x)), support_(SupportSet::from_nonzeros(x_)) {}

ProblemInstance::ProblemInstance(Matrix a, Vector y_meas, WeightVector w, double eta,
                                 std::optional<SparseSignal> x, std::uint64_t s)
    : A(std::move(a)),
      y(std::move(y_meas)),
      weights(std::move(w)),
      noise_level(eta),
      truth(std::move(x)),
      seed(s) {
  validate();
}

void ProblemInstance::validate() const {
  require_same_length(static_cast<Index>(A.cols()), weights.size(), "ProblemInstance columns");
  require_same_length(static_cast<Index>(A.rows()), static_cast<Index>(y.size()),
                      "ProblemInstance rows");
  if (!(noise_level >= 0.0) || !std::isfinite(noise_level)) {
    throw ValidationError("ProblemInstance: noise level must be finite and >= 0");
  }
  if (truth) {
    require_same_length(truth->size(), weights.size(), "ProblemInstance truth");
    const double residual = (A * truth->values() - y).norm();
    if (residual > noise_level + 1e-9 * std::max(1.0, y.norm())) {
      throw ValidationError("ProblemInstance: ||A x - y|| exceeds the noise level for the stored truth");
    }
  }
}

double weighted_l1_norm(const Vector& x, const WeightVector& w) {
  require_same_length(static_cast<Index>(x.size()), w.size(), "weighted_l1_norm");
  return w.values().cwiseProduct(x.cwiseAbs()).sum();
}

double weighted_l1_norm(const Vector& x, const WeightVector& w, const SupportSet& s) {
  require_same_length(static_cast<Index>(x.size()), w.size(), "weighted_l1_norm");
  require_same_length(s.universe(), w.size(), "weighted_l1_norm support");
  double total = 0.0;
  for (Index j : s.indices()) total += w[j] * std::abs(x[static_cast<Eigen::Index>(j)]);
  return total;
}

double weighted_cardinality(const SupportSet& s, const WeightVector& w) {
  require_same_length(s.universe(), w.size(), "weighted_cardinality");
  double total = 0.0;
  for (Index j : s.indices()) total += w[j] * w[j];
  return total;
}

bool in_violation_cone(const Vector& z, const SupportSet& s, const WeightVector& w,
                       double slack) {
  const auto [on, off] = split_weighted_l1(z, s, w);
  return on + slack >= off;
}

bool rnsp_holds(const Matrix& A, const Vector& z, const SupportSet& s, const WeightVector& w,
                double rho, double tau) {
  require_same_length(static_cast<Index>(A.cols()), static_cast<Index>(z.size()), "rnsp_holds");
  if (!(rho > 0.0 && rho <= 1.0)) throw ValidationError("rnsp_holds: rho must lie in (0, 1]");
  if (!(tau > 0.0)) throw ValidationError("rnsp_holds: tau must be positive");
  const auto [on, off] = split_weighted_l1(z, s, w);
  return on <= rho * off + tau * (A * z).norm();
}

}  // namespace wcs
