#pragma once

#include <string>

#include "schubert/orbits.hpp"
#include "schubert/random.hpp"

namespace schubert {

// dim of the span of products of at most m maximal minors of the stacked
// generic matrix, measured by evaluation rank at integer points of the
// dense orbit.  Rank is computed modulo two word-size primes (max taken):
// like point sampling itself this can only under-report, never over-report.
// sample_count = 0 picks an adaptive default.
std::size_t filtration_dimension(const Partition& mu, int m, RandomSource& rng,
                                 std::size_t sample_count = 0);

// Dimension of the rectangular Weyl/Schur module (cols^rows) for GL_n via
// the Weyl product formula; 0 when rows > n.
unsigned long long weyl_rectangle_dim(int n, int rows, int cols);

// Same dimension by brute-force SSYT enumeration (cross-check oracle).
unsigned long long ssyt_count_rectangle(int n, int rows, int cols);

// Weyl dimension of S_lambda for GL_n, lambda weakly decreasing of length
// <= n with nonnegative parts.
unsigned long long weyl_dim(int n, const std::vector<int>& lambda);

struct ConjectureReport {
  Partition mu;
  int m = 1;
  std::size_t filtration_dim = 0;
  unsigned long long predicted_rows = 0;  // rectangles lambda_i rows x m cols
  unsigned long long predicted_cols = 0;  // transposed reading
  bool match_rows = false;
  bool match_cols = false;
};

ConjectureReport conjecture_check(const Partition& mu, int m, RandomSource& rng);

} // namespace schubert
