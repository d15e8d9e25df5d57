#pragma once

#include <vector>

#include "schubert/orbits.hpp"
#include "schubert/qpoly.hpp"

namespace schubert {

// Per-degree comparison of the level-one filtration with the graded
// branching prediction:
//   lhs[d] = dim of the span of single degree-d maximal minors of the
//            stacked matrix, by evaluation rank on the dense orbit
//            (minor degree = sum over its rows of n - block index);
//   rhs[d] = [d = 0] + sum over partitions nu of n with at most n-1 parts
//            of (coefficient of q^d in the multiplicity of Sigma^{nu'} in
//            the graded quotient for mu) * dim S_nu for GL_n.
struct LevelOneReport {
  Partition mu;
  int max_degree = 6;
  std::vector<std::size_t> lhs, rhs;
  bool pass = false;
};

LevelOneReport level_one_check(const Partition& mu, int max_degree, RandomSource& rng);

} // namespace schubert
