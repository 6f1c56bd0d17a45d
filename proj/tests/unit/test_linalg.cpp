#include "doctest.h"

#include <random>

#include "chmhd/linalg.hpp"

using namespace chmhd;

TEST_CASE("lu solve: identity") {
  std::vector<Triplet> trip;
  for (int i = 0; i < 5; ++i) trip.emplace_back(i, i, 1.0);
  SparseMatrix A = from_triplets(5, 5, trip);
  Eigen::VectorXd b(5);
  b << 1, 2, 3, 4, 5;
  CHECK((lu_factor(A).solve(b) - b).norm() == doctest::Approx(0.0));
}

TEST_CASE("lu solve: 2x2 hand elimination") {
  // [[2,1],[1,3]] x = [3,4] -> x = [1,1]
  std::vector<Triplet> trip = {{0, 0, 2.0}, {0, 1, 1.0}, {1, 0, 1.0}, {1, 1, 3.0}};
  SparseMatrix A = from_triplets(2, 2, trip);
  Eigen::VectorXd b(2);
  b << 3, 4;
  Eigen::VectorXd x = lu_factor(A).solve(b);
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("lu solve: random sparse 50x50 residual") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::uniform_int_distribution<int> col(0, 49);
  std::vector<Triplet> trip;
  for (int i = 0; i < 50; ++i) {
    trip.emplace_back(i, i, 10.0 + dist(rng));  // diagonally dominant
    for (int k = 0; k < 5; ++k) trip.emplace_back(i, col(rng), dist(rng));
  }
  SparseMatrix A = from_triplets(50, 50, trip);
  Eigen::VectorXd b(50);
  for (int i = 0; i < 50; ++i) b[i] = dist(rng);
  Eigen::VectorXd x = lu_factor(A).solve(b);
  CHECK((A * x - b).norm() / b.norm() <= 1e-12);
}

TEST_CASE("singular matrix reported") {
  std::vector<Triplet> trip = {{0, 0, 1.0}, {1, 0, 1.0}};  // rank 1
  SparseMatrix A = from_triplets(2, 2, trip);
  CHECK_THROWS_AS(lu_factor(A), std::runtime_error);
}

TEST_CASE("compose_block: block-diagonal equals independent solves") {
  std::vector<Triplet> ta = {{0, 0, 2.0}, {1, 1, 3.0}};
  std::vector<Triplet> tb = {{0, 0, 5.0}};
  SparseMatrix A = from_triplets(2, 2, ta);
  SparseMatrix B = from_triplets(1, 1, tb);
  BlockSystem sys = compose_block(3, {{0, 0, &A}, {2, 2, &B}}, {}, {});
  Eigen::VectorXd rhs(3);
  rhs << 2, 6, 10;
  sys.rhs = rhs;
  Eigen::VectorXd x = lu_factor(sys.matrix).solve(sys.rhs);
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(2.0));
  CHECK(x[2] == doctest::Approx(2.0));
}

TEST_CASE("compose_block: BC elimination is idempotent and exact") {
  std::vector<Triplet> ta;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ta.emplace_back(i, j, i == j ? 4.0 : 1.0);
  SparseMatrix A = from_triplets(4, 4, ta);
  EssentialBc bc{{1, 3}};
  BlockSystem s1 = compose_block(4, {{0, 0, &A}}, {&bc}, {0});
  // constrained dofs solve to exactly zero
  s1.rhs = Eigen::VectorXd::Ones(4);
  for (int d : bc.dofs) s1.rhs[d] = 0.0;
  Eigen::VectorXd x = lu_factor(s1.matrix).solve(s1.rhs);
  CHECK(x[1] == 0.0);
  CHECK(x[3] == 0.0);

  // applying the same constraints again yields the same matrix
  BlockSystem s2 = compose_block(4, {{0, 0, &A}}, {&bc, &bc}, {0, 0});
  CHECK((Eigen::MatrixXd(s1.matrix) - Eigen::MatrixXd(s2.matrix)).norm() == 0.0);
}

TEST_CASE("compose_block: transpose placement") {
  std::vector<Triplet> td = {{0, 1, 7.0}};
  SparseMatrix D = from_triplets(1, 2, td);  // 1x2
  BlockSystem sys = compose_block(3, {{2, 0, &D}, {0, 2, &D, -1.0, true}}, {}, {});
  Eigen::MatrixXd M(sys.matrix);
  CHECK(M(2, 1) == 7.0);
  CHECK(M(1, 2) == -7.0);
}
