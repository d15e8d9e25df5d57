#include "schubert/shuffle.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

namespace {

// Sort `vals` and report the permutation sign; false on a repeat.
bool sort_with_sign(Tuple& vals, int& sign) {
  sign = 1;
  for (std::size_t a = 0; a < vals.size(); ++a)  // insertion sort, counts swaps
    for (std::size_t b = a; b > 0 && vals[b] < vals[b - 1]; --b) {
      std::swap(vals[b], vals[b - 1]);
      sign = -sign;
    }
  for (std::size_t a = 1; a < vals.size(); ++a)
    if (vals[a] == vals[a - 1]) return false;
  return true;
}

} // namespace

ShuffleRelation shuffle(const Tuple& I, int level, const Context& ctx) {
  const int n = ctx.n, r = ctx.r();
  if (static_cast<int>(I.size()) != r || !is_strictly_increasing(I))
    throw std::invalid_argument("shuffle not defined");
  if (I.front() < n + 1 || I.back() > r * n || level < 1 || level > r)
    throw std::invalid_argument("shuffle not defined");

  ShuffleRelation rel{I, level, {}};
  // iterate over level-subsets J of positions 0..r-1
  std::vector<int> pos(static_cast<std::size_t>(level));
  for (int k = 0; k < level; ++k) pos[static_cast<std::size_t>(k)] = k;
  while (true) {
    Tuple vals = I;
    for (int k = 0; k < level; ++k) vals[static_cast<std::size_t>(pos[static_cast<std::size_t>(k)])] -= n;
    int sign;
    if (sort_with_sign(vals, sign)) rel.terms.push_back({sign, std::move(vals)});
    // next combination
    int k = level - 1;
    while (k >= 0 && pos[static_cast<std::size_t>(k)] == r - level + k) --k;
    if (k < 0) break;
    ++pos[static_cast<std::size_t>(k)];
    for (int t = k + 1; t < level; ++t)
      pos[static_cast<std::size_t>(t)] = pos[static_cast<std::size_t>(t - 1)] + 1;
  }
  return rel;
}

Rat evaluate(const ShuffleRelation& rel, const CellPoint& point) {
  Rat acc(0);
  for (const ShuffleTerm& t : rel.terms)
    acc += Rat(t.sign) * evaluate_plucker(point, t.tuple);
  return acc;
}

} // namespace schubert
