#pragma once

#include "schubert/matrix.hpp"
#include "schubert/partition.hpp"

namespace schubert {

struct OrbitMembership {
  bool in_closure = false;     // rank(N^i) <= n - (lambda_1+...+lambda_i) for all i
  bool in_open_orbit = false;  // all with equality
};

bool is_nilpotent(const Matrix& m);

// Jordan form with one nilpotent block per part of mu.
Matrix jordan_matrix(const Partition& mu);

// Rank-condition test against the orbit labeled by mu (lambda = conjugate).
// Throws "not nilpotent" for non-nilpotent input.
OrbitMembership orbit_membership(const Matrix& N, const Partition& mu);

// g J_mu adj(g) for random integer g: an integer point of the open orbit
// (adjugate keeps entries integral; the scalar det(g) factor does not move
// the point off its orbit).
Matrix random_orbit_point(const Partition& mu, RandomSource& rng, long bound = 3);

// Stacked powers [N^{n-1}; ... ; N; I], an n^2 x n matrix.
Matrix lusztig_embed(const Matrix& N);

} // namespace schubert
