#pragma once

#include <vector>

#include "schubert/partition.hpp"
#include "schubert/qpoly.hpp"
#include "schubert/rational.hpp"

namespace schubert {

// A generator e_r(S): the r-th elementary symmetric function of the
// variables indexed by S.
struct SubsetElementary {
  int r;
  std::vector<int> subset;  // 1-based variable indices
};

// {e_r(S) : k >= r > k - d_k(mu), k = |S|} with d_k(mu) the sum of the
// last k parts of mu (zero-padded to length n).
std::vector<SubsetElementary> c_mu_generators(const Partition& mu);

struct GradedCharacter {
  Partition mu;
  std::vector<Partition> classes;           // partitions_of(n) order
  std::vector<std::size_t> dims;            // dims[d] = dim B_{mu,d}
  std::vector<std::vector<long>> traces;    // traces[d][class]
};

// Graded S_n-character of the quotient of K[y_1..y_n] by the ideal
// generated by c_mu_generators.  max_degree < 0 means "through the top
// degree n(mu')", which captures the whole finite-dimensional quotient.
GradedCharacter b_mu_graded_character(const Partition& mu, int max_degree = -1);

// Multiplicity generating polynomial of the Specht module Sigma^lambda in
// the graded pieces of the quotient.
QPoly graded_multiplicity(const Partition& mu, const Partition& lambda, int max_degree = -1);

} // namespace schubert
