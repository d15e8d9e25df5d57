#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "schubert/orbit_equations.hpp"

using namespace schubert;

TEST_CASE("invariant sums are char-poly coefficients") {
  RandomSource rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix x(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) x(i, j) = Rat(rng.uniform(-5, 5));
    OrbitEquation tr{0, 1, {}, {}};
    OrbitEquation dt{0, 2, {}, {}};
    CHECK(tr.evaluate(x) == x(0, 0) + x(1, 1));
    CHECK(dt.evaluate(x) == det(x));
  }
}

TEST_CASE("partial trace identity at level one") {
  RandomSource rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix x(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) x(i, j) = Rat(rng.uniform(-5, 5));
    Matrix x2 = x * x;
    Rat trace = x(0, 0) + x(1, 1) + x(2, 2);
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        OrbitEquation eq{1, 2, {a}, {b}};
        CHECK(eq.evaluate(x) == x(a - 1, b - 1) * trace - x2(a - 1, b - 1));
      }
  }
}

TEST_CASE("equation space shapes") {
  // mu = (2,1,1): invariants p=1..4, V_{1,2} (16 eqs), V_{2,2} (36 eqs)
  auto eqs = orbit_equation_spaces({2, 1, 1});
  CHECK(eqs.size() == 4 + 16 + 36);
  int invariants = 0, level1 = 0, level2 = 0;
  for (const OrbitEquation& e : eqs) {
    if (e.i == 0) ++invariants;
    if (e.i == 1) {
      ++level1;
      CHECK(e.p == 2);
    }
    if (e.i == 2) {
      ++level2;
      CHECK(e.p == 2);
      CHECK(e.P.size() == 2);
    }
  }
  CHECK(invariants == 4);
  CHECK(level1 == 16);
  CHECK(level2 == 36);
  // regular orbit mu = (n): only the invariants survive the level bound
  for (const OrbitEquation& e : orbit_equation_spaces({3})) CHECK(e.i == 0);
  CHECK(orbit_equation_spaces({3}).size() == 3);
  CHECK_FALSE(orbit_equation_spaces({1, 1, 1}).empty());
}

TEST_CASE("equations vanish on the closure") {
  RandomSource rng(3);
  for (int n : {3, 4}) {
    for (const Partition& mu : partitions_of(n)) {
      auto eqs = orbit_equation_spaces(mu);
      for (const Partition& nu : partitions_of(n)) {
        if (!dominance_leq(nu, mu)) continue;
        for (int trial = 0; trial < 5; ++trial) {
          Matrix N = random_orbit_point(nu, rng);
          for (const OrbitEquation& e : eqs) CHECK(e.evaluate(N) == Rat(0));
        }
      }
    }
  }
}

TEST_CASE("equations separate non-dominated orbits") {
  for (int n : {3, 4}) {
    for (const Partition& mu : partitions_of(n)) {
      auto eqs = orbit_equation_spaces(mu);
      for (const Partition& nu : partitions_of(n)) {
        if (dominance_leq(nu, mu)) continue;
        Matrix J = jordan_matrix(nu);
        bool separated = false;
        for (const OrbitEquation& e : eqs)
          if (e.evaluate(J) != Rat(0)) separated = true;
        CHECK(separated);
      }
    }
  }
}

TEST_CASE("cutout reports") {
  RandomSource rng(4);
  for (int n : {2, 3, 4}) {
    for (const Partition& mu : partitions_of(n)) {
      CutoutReport rep = cutout_check(mu, rng);
      CHECK(rep.pass);
      CHECK(rep.failures.empty());
    }
  }
}

TEST_CASE("equation names are distinct") {
  auto eqs = orbit_equation_spaces({2, 2});
  std::set<std::string> names;
  for (const OrbitEquation& e : eqs) CHECK(names.insert(e.name()).second);
}
