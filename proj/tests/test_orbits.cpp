#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schubert/orbits.hpp"

using namespace schubert;

namespace {

Matrix from(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.front().size(); ++j) m(i, j) = Rat(rows[i][j]);
  return m;
}

} // namespace

TEST_CASE("nilpotency test") {
  CHECK(is_nilpotent(Matrix(3, 3)));
  CHECK(is_nilpotent(from({{0, 1}, {0, 0}})));
  CHECK(is_nilpotent(from({{2, 4}, {-1, -2}})));
  CHECK_FALSE(is_nilpotent(Matrix::identity(2)));
  CHECK_FALSE(is_nilpotent(from({{0, 1}, {1, 0}})));
}

TEST_CASE("jordan matrices") {
  CHECK(jordan_matrix({1, 1}) == Matrix(2, 2));
  Matrix j21 = jordan_matrix({2, 1});
  CHECK(j21.rows() == 3);
  CHECK(j21(0, 1) == Rat(1));
  CHECK(rank(j21) == 1);
  CHECK(is_nilpotent(j21));
  // rank(J_mu^i) drops by the number of blocks of size > i
  Matrix j32 = jordan_matrix({3, 2});
  CHECK(rank(j32) == 3);
  CHECK(rank(j32 * j32) == 1);
  CHECK(rank(j32 * j32 * j32) == 0);
}

TEST_CASE("membership anchors") {
  Matrix j21 = jordan_matrix({2, 1});
  OrbitMembership m = orbit_membership(j21, {2, 1});
  CHECK(m.in_closure);
  CHECK(m.in_open_orbit);
  m = orbit_membership(j21, {3});
  CHECK(m.in_closure);
  CHECK_FALSE(m.in_open_orbit);
  m = orbit_membership(jordan_matrix({3}), {2, 1});
  CHECK_FALSE(m.in_closure);
  m = orbit_membership(Matrix(3, 3), {2, 1});
  CHECK(m.in_closure);
  CHECK_FALSE(m.in_open_orbit);
  CHECK_THROWS_WITH_AS((void)orbit_membership(Matrix::identity(2), {2}), "not nilpotent",
                       std::invalid_argument);
}

TEST_CASE("closure order is dominance order") {
  for (int n : {4, 5}) {
    auto parts = partitions_of(n);
    for (const Partition& a : parts) {
      Matrix ja = jordan_matrix(a);
      for (const Partition& b : parts)
        CHECK(orbit_membership(ja, b).in_closure == dominance_leq(a, b));
    }
  }
}

TEST_CASE("random orbit points stay in the open orbit") {
  RandomSource rng(2718);
  for (int n : {2, 3, 4}) {
    for (const Partition& mu : partitions_of(n)) {
      for (int trial = 0; trial < 5; ++trial) {
        Matrix N = random_orbit_point(mu, rng);
        CHECK(is_nilpotent(N));
        OrbitMembership m = orbit_membership(N, mu);
        CHECK(m.in_closure);
        CHECK(m.in_open_orbit);
        for (std::size_t i = 0; i < N.rows(); ++i)
          for (std::size_t j = 0; j < N.cols(); ++j) CHECK(N(i, j).get_den() == 1);
      }
    }
  }
  RandomSource a(5), b(5);
  CHECK(random_orbit_point({2, 1}, a) == random_orbit_point({2, 1}, b));
}

TEST_CASE("stacked-powers embedding") {
  Matrix N = from({{2, 4}, {-1, -2}});
  Matrix L = lusztig_embed(N);
  REQUIRE(L.rows() == 4);
  REQUIRE(L.cols() == 2);
  // top block is N, bottom block the identity
  CHECK(L(0, 0) == Rat(2));
  CHECK(L(1, 1) == Rat(-2));
  CHECK(L(2, 0) == Rat(1));
  CHECK(L(3, 1) == Rat(1));
  // maximal minors (p_{12}, p_{13}, p_{14}, p_{23}, p_{24}, p_{34})
  CHECK(minor_det(L, {1, 2}, {1, 2}) == Rat(0));
  CHECK(minor_det(L, {1, 3}, {1, 2}) == Rat(-4));
  CHECK(minor_det(L, {1, 4}, {1, 2}) == Rat(2));
  CHECK(minor_det(L, {2, 3}, {1, 2}) == Rat(2));
  CHECK(minor_det(L, {2, 4}, {1, 2}) == Rat(-1));
  CHECK(minor_det(L, {3, 4}, {1, 2}) == Rat(1));
  CHECK_THROWS_WITH_AS((void)lusztig_embed(Matrix::identity(2)), "not nilpotent",
                       std::invalid_argument);
  // full column rank always (identity block), shape n^2 x n
  Matrix L3 = lusztig_embed(jordan_matrix({2, 1}));
  CHECK(L3.rows() == 9);
  CHECK(L3.cols() == 3);
  CHECK(rank(L3) == 3);
}
