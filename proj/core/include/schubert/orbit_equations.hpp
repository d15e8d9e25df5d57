#pragma once

#include <string>
#include <vector>

#include "schubert/orbits.hpp"

namespace schubert {

// One generator of the orbit-closure equation spaces: the partial trace
// sum over |J| = p - i of the minors X(P,J | Q,J), rows/cols listed in
// that order (index collisions vanish as repeated-row determinants).
// i = 0 with empty P, Q gives the invariant sum of principal p-minors.
struct OrbitEquation {
  int i = 0;
  int p = 1;
  std::vector<int> P, Q;  // size i, 1-based

  Rat evaluate(const Matrix& X) const;
  std::string name() const;
};

// The invariants V_{0,p} for p = 1..n plus, for each admissible level
// i >= 1 (i <= min(mu(i), n - mu(i)), mu(i) = mu_1+...+mu_i - i + 1),
// the spanning set of V_{i,mu(i)} over all i-subsets P, Q.
std::vector<OrbitEquation> orbit_equation_spaces(const Partition& mu);

struct CutoutReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// (a) every generator vanishes at sampled points of every orbit below mu
// in dominance order; (b) for every orbit not below mu, some generator is
// nonzero at its Jordan point.
CutoutReport cutout_check(const Partition& mu, RandomSource& rng, int points = 30);

} // namespace schubert
