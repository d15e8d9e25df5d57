#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schubert/demazure.hpp"

using namespace schubert;

TEST_CASE("independence certificates at n=2") {
  RandomSource rng(1);
  auto chain = reduced_chain(2, 1);
  for (const ChainElement& phi : chain) {
    IndependenceCertificate cert = independence_check(phi, rng);
    CHECK(cert.valid);
    CHECK(cert.rank == cert.tuples.size());
    CHECK(cert.kernel_witness.empty());
    CHECK(cert.points == cert.tuples.size() + 10);
  }
}

TEST_CASE("dimension equals admissible count") {
  RandomSource rng(2);
  auto c2 = reduced_chain(2, 1);
  CHECK(demazure_dimension(c2[0], rng) == 4);
  CHECK(demazure_dimension(c2[1], rng) == 2);
  CHECK(demazure_dimension(c2[2], rng) == 1);
  auto c3 = reduced_chain(3, 1);
  CHECK(demazure_dimension(c3.front(), rng) == 27);
  CHECK(demazure_dimension(c3.back(), rng) == 1);
  for (const ChainElement& phi : reduced_chain(2, 2))
    CHECK(demazure_dimension(phi, rng) == enumerate_admissible(phi).size());
}

TEST_CASE("dimension is weakly decreasing along the chain") {
  RandomSource rng(3);
  for (auto [n, s] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    auto chain = reduced_chain(n, s);
    std::size_t prev = demazure_dimension(chain.front(), rng);
    for (std::size_t k = 1; k < chain.size(); ++k) {
      std::size_t cur = demazure_dimension(chain[k], rng);
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("admissible coordinates span everything nonvanishing") {
  RandomSource rng(4);
  for (auto [n, s] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    for (const ChainElement& phi : reduced_chain(n, s)) CHECK(spanning_check(phi, rng));
  }
}

TEST_CASE("determinism at fixed seed") {
  auto phi = reduced_chain(3, 1).front();
  RandomSource a(9), b(9);
  IndependenceCertificate ca = independence_check(phi, a);
  IndependenceCertificate cb = independence_check(phi, b);
  CHECK(ca.rank == cb.rank);
  CHECK(ca.tuples == cb.tuples);
}
