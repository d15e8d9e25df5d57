#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "schubert/bmu.hpp"
#include "schubert/level_one.hpp"
#include "schubert/sn_character.hpp"
#include "schubert/tableau.hpp"

using namespace schubert;

TEST_CASE("partitions and statistics") {
  CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(partitions_of(5).size() == 7);
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(conjugate({4, 2, 1})) == Partition{4, 2, 1});
  CHECK(n_statistic({3}) == 0);
  CHECK(n_statistic({1, 1, 1}) == 3);
  CHECK(n_statistic({2, 1}) == 1);
  CHECK(dominance_leq({2, 2}, {3, 1}));
  CHECK_FALSE(dominance_leq({3, 1}, {2, 2}));
  CHECK(dominance_leq({2, 1}, {2, 1}));
  CHECK_THROWS_WITH_AS((void)dominance_leq({2}, {2, 1}), "unequal partition sizes",
                       std::invalid_argument);
}

TEST_CASE("charge anchors") {
  CHECK(charge({{2}, {{1, 2}}}) == 1);
  CHECK(charge({{1, 1}, {{1}, {2}}}) == 0);
  CHECK(charge({{3}, {{1, 2, 3}}}) == 3);
  CHECK(charge({{1, 1, 1}, {{1}, {2}, {3}}}) == 0);
  CHECK_THROWS_WITH_AS((void)charge({{2}, {{2, 2}}}), "content must be a partition",
                       std::invalid_argument);
}

TEST_CASE("semistandard enumeration") {
  CHECK(ssyt({2, 1}, {1, 1, 1}).size() == 2);
  CHECK(ssyt({2, 2}, {2, 1, 1}).size() == 1);
  CHECK(ssyt({3}, {1, 1, 1}).size() == 1);
  CHECK(ssyt({1, 1}, {2}).empty());  // repeated letter in a column
  for (const Tableau& t : ssyt({3, 2}, {2, 2, 1})) {
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      CHECK(std::is_sorted(t.rows[i].begin(), t.rows[i].end()));
      for (std::size_t j = 0; i + 1 < t.rows.size() && j < t.rows[i + 1].size(); ++j)
        CHECK(t.rows[i + 1][j] > t.rows[i][j]);
    }
  }
}

TEST_CASE("kostka-foulkes anchors") {
  CHECK(kostka_foulkes({2}, {1, 1}) == QPoly::monomial(1));
  CHECK(kostka_foulkes({1, 1}, {1, 1}) == QPoly({1}));
  CHECK(kostka_foulkes({2, 1}, {1, 1, 1}) == QPoly({0, 1, 1}));  // q + q^2
  CHECK(kostka_foulkes({3}, {1, 1, 1}) == QPoly::monomial(3));
  CHECK(kostka_foulkes({2, 2}, {2, 1, 1}) == QPoly::monomial(1));
  for (const Partition& lambda : partitions_of(4))
    CHECK(kostka_foulkes(lambda, lambda) == QPoly({1}));
  // q = 1 recovers the Kostka number, i.e. the tableau count
  for (const Partition& lambda : partitions_of(4))
    for (const Partition& mu : partitions_of(4))
      CHECK(kostka_foulkes(lambda, mu).eval_at_one() ==
            static_cast<long>(ssyt(lambda, mu).size()));
  // vanishes unless mu <= lambda in dominance
  for (const Partition& lambda : partitions_of(5))
    for (const Partition& mu : partitions_of(5))
      CHECK(kostka_foulkes(lambda, mu).is_zero() == !dominance_leq(mu, lambda));
}

TEST_CASE("murnaghan-nakayama anchors") {
  CHECK(sn_character({3}) == std::vector<long>{1, 1, 1});
  CHECK(sn_character({2, 1}) == std::vector<long>{-1, 0, 2});
  CHECK(sn_character({1, 1, 1}) == std::vector<long>{1, -1, 1});
  // dimension = chi(identity class) = # standard tableaux
  CHECK(sn_character({2, 2}).back() == 2);
  CHECK(sn_character({3, 1, 1}).back() == 6);
  CHECK(sn_character({2, 2, 1}).back() == 5);
}

TEST_CASE("class sizes") {
  for (int n : {3, 4, 5}) {
    unsigned long long total = 0, fact = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<unsigned long long>(k);
    for (const Partition& rho : partitions_of(n)) total += class_size(rho);
    CHECK(total == fact);
  }
  CHECK(class_size({2, 1, 1}) == 6);
  CHECK(class_size({4}) == 6);
  CHECK(class_size({1, 1, 1, 1}) == 1);
}

TEST_CASE("character orthonormality") {
  for (int n : {3, 4, 5}) {
    auto parts = partitions_of(n);
    std::vector<std::vector<long>> table;
    for (const Partition& lambda : parts) table.push_back(sn_character(lambda));
    for (std::size_t a = 0; a < table.size(); ++a)
      for (std::size_t b = 0; b < table.size(); ++b)
        CHECK(character_inner_product(n, table[a], table[b]) == (a == b ? 1 : 0));
  }
}

TEST_CASE("generator sets") {
  CHECK(c_mu_generators({2}).size() == 2);
  CHECK(c_mu_generators({1, 1}).size() == 4);
  for (const SubsetElementary& g : c_mu_generators({2, 1})) {
    CHECK(g.r >= 1);
    CHECK(g.r <= static_cast<int>(g.subset.size()));
  }
}

TEST_CASE("graded quotient dimensions") {
  CHECK(b_mu_graded_character({1, 1}).dims == std::vector<std::size_t>{1});
  CHECK(b_mu_graded_character({2}).dims == std::vector<std::size_t>{1, 1});
  CHECK(b_mu_graded_character({3}).dims == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(b_mu_graded_character({2, 1}).dims == std::vector<std::size_t>{1, 2});
  // total dimension n! / prod (mu'_i)!
  for (int n : {2, 3, 4}) {
    unsigned long long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<unsigned long long>(k);
    for (const Partition& mu : partitions_of(n)) {
      GradedCharacter gc = b_mu_graded_character(mu);
      unsigned long long denom = 1;
      for (int part : conjugate(mu))
        for (int k = 2; k <= part; ++k) denom *= static_cast<unsigned long long>(k);
      std::size_t total = std::accumulate(gc.dims.begin(), gc.dims.end(), std::size_t{0});
      CHECK(total == fact / denom);
      CHECK(static_cast<int>(gc.dims.size()) - 1 <= n_statistic(conjugate(mu)));
      CHECK(gc.dims[0] == 1);
      // degree-zero character is the trivial one
      for (long tr : gc.traces[0]) CHECK(tr == 1);
    }
  }
}

TEST_CASE("graded multiplicities against charge") {
  // multiplicity of Sigma^lambda in the quotient for mu equals the
  // charge polynomial K(lambda, mu') with exponents reflected at n(mu')
  for (int n : {2, 3, 4}) {
    for (const Partition& mu : partitions_of(n)) {
      const Partition muc = conjugate(mu);
      const int top = n_statistic(muc);
      for (const Partition& lambda : partitions_of(n)) {
        QPoly gm = graded_multiplicity(mu, lambda);
        QPoly kf = kostka_foulkes(lambda, muc);
        QPoly reflected;
        for (int k = 0; k <= kf.degree(); ++k)
          if (kf.coeff(static_cast<std::size_t>(k)) != 0)
            reflected.add_monomial(top - k, kf.coeff(static_cast<std::size_t>(k)));
        CHECK(gm == reflected);
      }
    }
  }
}

TEST_CASE("level-one anchors") {
  RandomSource rng(6);
  LevelOneReport rep = level_one_check({2}, 4, rng);
  CHECK(rep.pass);
  CHECK(rep.lhs == std::vector<std::size_t>{1, 3, 0, 0, 0});
  CHECK(rep.lhs == rep.rhs);
  rep = level_one_check({1, 1}, 3, rng);
  CHECK(rep.pass);
  CHECK(rep.lhs == std::vector<std::size_t>{1, 0, 0, 0});
}
