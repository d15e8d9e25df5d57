#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schubert/cell.hpp"

using namespace schubert;

namespace {

std::vector<Tuple> all_labels(int lo, int hi, int r) {
  std::vector<Tuple> out;
  Tuple cur(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) cur[static_cast<std::size_t>(j)] = lo + j;
  while (true) {
    out.push_back(cur);
    int k = r - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == hi - (r - 1 - k)) --k;
    if (k < 0) break;
    ++cur[static_cast<std::size_t>(k)];
    for (int t = k + 1; t < r; ++t)
      cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

} // namespace

TEST_CASE("top cell layout at n=2") {
  auto chain = reduced_chain(2, 1);
  CellMatrix cell = build_cell_matrix(chain[0]);
  CHECK(cell.row_offset == 0);
  CHECK(cell.local_rows() == 4);
  CHECK(cell.params() == std::vector<std::string>{"a_{2,1}", "a_{4,1}"});
  using K = CellMatrix::Kind;
  CHECK(cell.at(1, 1).kind == K::One);
  CHECK(cell.at(2, 1).kind == K::Param);
  CHECK(cell.at(3, 1).kind == K::Zero);
  CHECK(cell.at(4, 1).kind == K::Param);
  CHECK(cell.at(1, 2).kind == K::Zero);
  CHECK(cell.at(2, 2).kind == K::Zero);
  CHECK(cell.at(3, 2).kind == K::One);
  CHECK(cell.at(4, 2).kind == K::Param);
  // the repeated column shares the a_{2,1} parameter
  CHECK(cell.at(4, 2).param == cell.at(2, 1).param);
}

TEST_CASE("free parameter count is the cell dimension") {
  for (auto [n, s] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    auto chain = reduced_chain(n, s);
    CHECK(static_cast<int>(build_cell_matrix(chain.front()).params().size()) ==
          s * (n - 1) * n);
    for (const ChainElement& phi : chain)
      CHECK(static_cast<int>(build_cell_matrix(phi).params().size()) == phi.dim());
  }
}

TEST_CASE("specialization") {
  auto chain = reduced_chain(2, 1);
  CellMatrix cell = build_cell_matrix(chain[0]);
  CellPoint pt = specialize(cell, {Rat(2), Rat(5)});
  Matrix expect(4, 2);
  expect(0, 0) = 1;
  expect(1, 0) = 2;
  expect(2, 1) = 1;
  expect(3, 0) = 5;
  expect(3, 1) = 2;
  CHECK(pt.mat == expect);
  CHECK_THROWS_AS((void)specialize(cell, {Rat(1)}), std::invalid_argument);

  // all parameters zero: the coordinate point, f_{I_phi} = 1
  CellPoint origin = specialize(cell, {Rat(0), Rat(0)});
  CHECK(evaluate_plucker(origin, chain[0].tuple) == Rat(1));

  RandomSource a(13), b(13);
  CHECK(specialize_random(cell, a).mat == specialize_random(cell, b).mat);
}

TEST_CASE("zero-dimensional cell") {
  auto chain = reduced_chain(2, 1);
  CellMatrix cell = build_cell_matrix(chain.back());
  CHECK(cell.params().empty());
  CellPoint pt = specialize(cell, {});
  for (const Tuple& I : all_labels(1, 4, 2))
    CHECK(evaluate_plucker(pt, I) == (I == Tuple{3, 4} ? Rat(1) : Rat(0)));
}

TEST_CASE("distinguished coordinate values along the chain") {
  // f_phi = 1, f_phi' = a^{r+1-i}, f_R2 = a, where a is the first free
  // parameter of column 1
  for (auto [n, s] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    auto chain = reduced_chain(n, s);
    RandomSource rng(77);
    for (std::size_t k = 0; k < chain.size(); ++k) {
      const ChainElement& phi = chain[k];
      CellMatrix cell = build_cell_matrix(phi);
      for (int trial = 0; trial < 5; ++trial) {
        CellPoint pt = specialize_random(cell, rng);
        CHECK(evaluate_plucker(pt, phi.tuple) == Rat(1));
        if (k + 1 == chain.size()) continue;
        // a = parameter at global row pn+q+1 of column 1
        Rat a(0);
        for (std::size_t pi = 0; pi < cell.param_rows().size(); ++pi)
          if (cell.param_rows()[pi] == phi.p * n + phi.q + 1) a = pt.values[pi];
        Rat apow(1);
        for (int e = 0; e < phi.ctx.r() + 1 - phi.group_i; ++e) apow *= a;
        CHECK(evaluate_plucker(pt, chain[k + 1].tuple) == apow);
        ZStrata zs = z_stratification(phi);
        REQUIRE(zs.has_r2);
        CHECK(evaluate_plucker(pt, zs.r2) == a);
      }
    }
  }
}

TEST_CASE("vanishing criterion examples") {
  auto chain = reduced_chain(2, 1);
  CHECK(vanishing_criterion({1, 3}, chain[1]));
  CHECK_FALSE(vanishing_criterion({2, 4}, chain[1]));
  CHECK_FALSE(vanishing_criterion(chain[1].tuple, chain[1]));
  CHECK(vanishing_criterion({3, 5}, chain[0]));  // past the block
}

TEST_CASE("vanishing criterion agrees with evaluation") {
  for (auto [n, s] : {std::pair{2, 1}, {3, 1}}) {
    auto chain = reduced_chain(n, s);
    const int rn = n * s * n;
    RandomSource rng(99);
    for (const ChainElement& phi : chain) {
      CellMatrix cell = build_cell_matrix(phi);
      std::vector<CellPoint> pts;
      for (int k = 0; k < 50; ++k) pts.push_back(specialize_random(cell, rng));
      for (const Tuple& I : all_labels(1, rn, phi.ctx.r())) {
        bool seen_nonzero = false;
        for (const CellPoint& pt : pts)
          if (evaluate_plucker(pt, I) != 0) seen_nonzero = true;
        if (vanishing_criterion(I, phi)) CHECK_FALSE(seen_nonzero);
        else CHECK(seen_nonzero);
      }
    }
  }
}

TEST_CASE("base-cell nonvanishing conditions") {
  // p_I = 0 on the big cell exactly when some i_j < (j-1)n+1 or i_r > rn
  for (auto [n, s] : {std::pair{2, 1}, {3, 1}}) {
    auto top = reduced_chain(n, s).front();
    const int r = top.ctx.r(), rn = r * n;
    CellMatrix cell = build_cell_matrix(top);
    RandomSource rng(1234);
    std::vector<CellPoint> pts;
    for (int k = 0; k < 100; ++k) pts.push_back(specialize_random(cell, rng));
    for (const Tuple& I : all_labels(1, rn, r)) {
      bool violates = false;
      for (int j = 0; j < r; ++j)
        if (I[static_cast<std::size_t>(j)] < j * n + 1) violates = true;
      if (violates)
        for (const CellPoint& pt : pts) CHECK(evaluate_plucker(pt, I) == Rat(0));
    }
    for (const CellPoint& pt : pts) CHECK(evaluate_plucker(pt, top.tuple) != Rat(0));
  }
}
