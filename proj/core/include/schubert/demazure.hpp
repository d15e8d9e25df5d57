#pragma once

#include <vector>

#include "schubert/cell.hpp"

namespace schubert {

// Exact-evaluation certificate that the admissible coordinates on X(phi)
// are linearly independent: full column rank of the (points x tuples)
// evaluation matrix proves independence outright.
struct IndependenceCertificate {
  ChainElement phi;
  std::vector<Tuple> tuples;
  std::size_t points = 0;
  std::size_t rank = 0;
  bool valid = false;
  // nonempty on a rank deficit: a candidate linear relation on the tuples
  std::vector<Rat> kernel_witness;
};

IndependenceCertificate independence_check(const ChainElement& phi, RandomSource& rng,
                                           std::size_t extra_points = 10);

// #A_phi, after certifying independence ("independence not certified" on
// failure).  Equals the degree-one coordinate-ring dimension.
std::size_t demazure_dimension(const ChainElement& phi, RandomSource& rng);

// Every nonvanishing Plücker coordinate lies in the span of the admissible
// ones: checked as membership of each extra row in the row space of the
// admissible evaluation matrix over shared sample points.
bool spanning_check(const ChainElement& phi, RandomSource& rng, std::size_t points = 20);

} // namespace schubert
