#include "wcs/core.hpp"

#include <doctest.h>

using namespace wcs;

TEST_CASE("weighted l1 norm") {
  CHECK(weighted_l1_norm(Eigen::Vector3d(1, -2, 3), WeightVector::ones(3)) == 6.0);
  CHECK(weighted_l1_norm(Eigen::Vector3d(1, 1, 1), WeightVector(std::vector<double>{1, 2, 3})) == 6.0);
  CHECK(weighted_l1_norm(Vector::Zero(4), WeightVector(std::vector<double>{1, 5, 2, 3})) == 0.0);
}

TEST_CASE("weight vectors reject entries below one or non-finite") {
  CHECK_THROWS_AS(WeightVector(std::vector<double>{1, 0.5}), ValidationError);
  CHECK_THROWS_AS(WeightVector(std::vector<double>{1, INFINITY}), ValidationError);
  CHECK_THROWS_AS(WeightVector(std::vector<double>{}), ValidationError);
  CHECK_THROWS_AS(WeightVector::ones(3).scaled(0.5), ValidationError);
  CHECK(WeightVector::ones(3).scaled(2.0)[1] == 2.0);
}

TEST_CASE("weighted cardinality") {
  CHECK(weighted_cardinality(SupportSet::first(7, 20), WeightVector::ones(20)) == 7.0);
  const WeightVector w(std::vector<double>{2, 3, 5});
  CHECK(weighted_cardinality(SupportSet({0, 1}, 3), w) == 13.0);
  CHECK(weighted_cardinality(SupportSet({}, 3), w) == 0.0);
  CHECK(weighted_cardinality(SupportSet::full(3), w) >= 3.0);
}

TEST_CASE("support sets") {
  const SupportSet s({4, 1, 1, 3}, 6);
  CHECK(s.cardinality() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.to_one_based() == std::vector<long long>{2, 4, 5});
  CHECK(SupportSet::from_one_based({2, 4, 5}, 6) == s);
  CHECK(s.complement().cardinality() == 3);
  CHECK(s.unite(s.complement()) == SupportSet::full(6));
  CHECK(s.intersect(s.complement()).empty());
  CHECK_THROWS_AS(SupportSet({6}, 6), ValidationError);
  CHECK_THROWS_AS(SupportSet::from_one_based({0}, 6), ValidationError);
  CHECK_THROWS_AS(SupportSet::from_one_based({7}, 6), ValidationError);
  CHECK(SupportSet::from_nonzeros(Eigen::Vector4d(0, 2, 0, -1)) == SupportSet({1, 3}, 4));
}

TEST_CASE("sparse signal support follows exact nonzeros") {
  const SparseSignal x(Eigen::Vector4d(0, 1e-300, 0, 3));
  CHECK(x.support() == SupportSet({1, 3}, 4));
}

TEST_CASE("violation cone") {
  const WeightVector w(std::vector<double>{1, 2, 3, 4});
  const SupportSet s({0, 1}, 4);
  CHECK(in_violation_cone(Eigen::Vector4d(1, -1, 0, 0), s, w));
  CHECK_FALSE(in_violation_cone(Eigen::Vector4d(0, 0, 1, 0), s, w));
  CHECK(in_violation_cone(Vector::Zero(4), s, w));
  // 1 + 2 = 3 on S against 3 on the complement: boundary counts as inside
  CHECK(in_violation_cone(Eigen::Vector4d(1, 1, 1, 0), s, w));
  const auto [on, off] = split_weighted_l1(Eigen::Vector4d(1, 1, 1, 0), s, w);
  CHECK(on == 3.0);
  CHECK(off == 3.0);
}

TEST_CASE("robust null space property at one vector") {
  Matrix A(1, 2);
  A << 0, 1;  // e_1 spans the kernel
  const WeightVector w = WeightVector::ones(2);
  const SupportSet s({1}, 2);
  CHECK(rnsp_holds(A, Vector::Zero(2), s, w, 0.5, 1.0));
  CHECK(rnsp_holds(A, Eigen::Vector2d(1, 0), s, w, 0.5, 1.0));
  CHECK_FALSE(rnsp_holds(A, Eigen::Vector2d(1, 0), SupportSet({0}, 2), w, 0.5, 1.0));
  CHECK_THROWS_AS(rnsp_holds(A, Vector::Zero(2), s, w, 0.0, 1.0), ValidationError);
}

TEST_CASE("problem instance validation") {
  Matrix A = Matrix::Identity(3, 3);
  Vector y = Vector::Ones(3);
  CHECK_NOTHROW(ProblemInstance(A, y, WeightVector::ones(3), 0.0).validate());
  CHECK_THROWS_AS(ProblemInstance(A, Vector::Ones(2), WeightVector::ones(3), 0.0).validate(),
                  ValidationError);
  CHECK_THROWS_AS(ProblemInstance(A, y, WeightVector::ones(4), 0.0).validate(), ValidationError);
  CHECK_THROWS_AS(ProblemInstance(A, y, WeightVector::ones(3), -1.0).validate(), ValidationError);
  // truth inconsistent with y beyond eta
  CHECK_THROWS_AS(ProblemInstance(A, y, WeightVector::ones(3), 0.1, SparseSignal(Vector::Zero(3))).validate(),
                  ValidationError);
  CHECK_NOTHROW(ProblemInstance(A, y, WeightVector::ones(3), 0.0, SparseSignal(Vector::Ones(3))).validate());
}
