#include "schubert/index_tuple.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schubert {

bool is_strictly_increasing(const Tuple& t) {
  for (std::size_t j = 1; j < t.size(); ++j)
    if (t[j] <= t[j - 1]) return false;
  return true;
}

bool is_admissible(const Tuple& t, const Context& ctx) {
  const int n = ctx.n, r = ctx.r();
  if (static_cast<int>(t.size()) != r) return false;
  for (std::size_t j = 1; j < t.size(); ++j)
    if (t[j] - t[j - 1] > n) return false;
  // gap to the first trivial-tail entry rn+1
  return t.back() >= r * n + 1 - n;
}

bool componentwise_geq(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] < b[j]) return false;
  return true;
}

WeylElement base_element(const Context& ctx) {
  WeylElement w;
  w.ctx = ctx;
  w.c.assign(static_cast<std::size_t>(ctx.n), ctx.s * ctx.n);
  w.c[0] = 0;
  return w;
}

Tuple index_tuple_of_weyl(const WeylElement& w, int r) {
  const int n = w.ctx.n;
  if (static_cast<int>(w.c.size()) != n)
    throw std::invalid_argument("not a coset representative");
  long sum = 0;
  for (int cj : w.c) sum += cj;
  if (sum != static_cast<long>(w.ctx.s) * (n - 1) * n)
    throw std::invalid_argument("not a coset representative");

  // Collect enough of the tau-stable set to cover positions 1..r+n.
  const int need = r + n;
  std::set<long> elems;
  long hi = static_cast<long>(r) * n + static_cast<long>(n) * (need + 1);
  for (int j = 1; j <= n; ++j) {
    for (long v = j + static_cast<long>(w.c[j - 1]) * n; v <= hi; v += n) elems.insert(v);
  }
  std::vector<long> sorted(elems.begin(), elems.end());
  if (!sorted.empty() && sorted.front() < 1)
    throw std::invalid_argument("not a coset representative");
  if (static_cast<int>(sorted.size()) < need)
    throw std::invalid_argument("not a coset representative");
  // positions r+1..r+n must already be trivial: i_j = j + (rn - r)
  for (int j = r + 1; j <= r + n; ++j)
    if (sorted[j - 1] != j + static_cast<long>(r) * n - r)
      throw std::invalid_argument("not a coset representative");
  Tuple out(r);
  for (int j = 0; j < r; ++j) out[j] = static_cast<int>(sorted[j]);
  return out;
}

long virtual_cardinality(const std::vector<long>& added, const std::vector<long>& removed) {
  return static_cast<long>(added.size()) - static_cast<long>(removed.size());
}

long virtual_cardinality_of_weyl(const std::vector<int>& c, int n) {
  // I_w = { j + (c_j + k)n : k >= 0 }.  Every element below 1 is "added";
  // every positive integer not in I_w is "removed".  Both sets are finite;
  // a window of size max|c_j|*n + n suffices.
  long bound = 0;
  for (int cj : c) bound = std::max<long>(bound, std::abs(static_cast<long>(cj)));
  long hi = (bound + 2) * n;
  std::set<long> iw;
  for (int j = 1; j <= n; ++j)
    for (long v = j + static_cast<long>(c[j - 1]) * n; v <= hi; v += n) iw.insert(v);
  std::vector<long> added, removed;
  for (long v : iw)
    if (v < 1) added.push_back(v);
  for (long v = 1; v <= hi; ++v)
    if (!iw.count(v)) removed.push_back(v);
  return virtual_cardinality(added, removed);
}

} // namespace schubert
