#pragma once

#include <vector>

#include "schubert/cell.hpp"
#include "schubert/index_tuple.hpp"

namespace schubert {

struct ShuffleTerm {
  int sign;     // +1 or -1, the sorting permutation's sign
  Tuple tuple;  // sorted, strictly increasing
};

// sum over ell-subsets J of I of the row-position-preserving minor on
// (I \ J) u (J - n); identically zero on the big cell.
struct ShuffleRelation {
  Tuple base;
  int level;
  std::vector<ShuffleTerm> terms;
};

// Requires i_1 >= n+1 and i_r <= rn ("shuffle not defined" otherwise).
// Terms whose index multiset collides are dropped (zero minors).
ShuffleRelation shuffle(const Tuple& I, int level, const Context& ctx);

Rat evaluate(const ShuffleRelation& rel, const CellPoint& point);

} // namespace schubert
