#include "schubert/chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schubert {

namespace {

ChainElement make_element(const Context& ctx, int position) {
  const int n = ctx.n, r = ctx.r();
  ChainElement e;
  e.ctx = ctx;
  e.position = position;
  const int last = r * (n - 1) + 1;
  if (position == last) {
    e.group_i = r;
    e.slot_j = n;
  } else {
    e.group_i = (position - 1) / (n - 1) + 1;
    e.slot_j = (position - 1) % (n - 1) + 1;
  }
  const int i = e.group_i, j = e.slot_j;
  const int head_start = (i - 1) * n + 1 + j - i;
  e.p = (head_start - 1) / n;
  e.q = (head_start - 1) % n + 1;
  // head: arithmetic step n, entries at (m*n + 1 + j - i) for m = i-1..r-1
  for (int m = i - 1; m <= r - 1; ++m) e.tuple.push_back(m * n + 1 + j - i);
  // tail: the top i-1 rows rn+2-i .. rn
  for (int v = r * n + 2 - i; v <= r * n; ++v) e.tuple.push_back(v);
  return e;
}

void enumerate_rec(const ChainElement& phi, Tuple& cur, std::vector<Tuple>& out) {
  const int n = phi.ctx.n, r = phi.ctx.r();
  const int pos = static_cast<int>(cur.size());
  if (pos == r) {
    if (cur.back() >= r * n + 1 - n) out.push_back(cur);
    return;
  }
  int lo = phi.tuple[pos];
  if (pos > 0) lo = std::max(lo, cur.back() + 1);
  int hi = r * n - (r - 1 - pos);
  if (pos > 0) hi = std::min(hi, cur.back() + n);
  for (int v = lo; v <= hi; ++v) {
    cur.push_back(v);
    enumerate_rec(phi, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<ChainElement> reduced_chain(int n, int s) {
  if (n < 2 || s < 1) throw std::invalid_argument("need n >= 2, s >= 1");
  Context ctx{n, s};
  const int last = ctx.r() * (n - 1) + 1;
  std::vector<ChainElement> chain;
  chain.reserve(last);
  for (int ell = 1; ell <= last; ++ell) chain.push_back(make_element(ctx, ell));
  return chain;
}

std::vector<Tuple> enumerate_admissible(const ChainElement& phi) {
  std::vector<Tuple> out;
  Tuple cur;
  enumerate_rec(phi, cur, out);  // generated in lexicographic order
  return out;
}

unsigned long long predicted_admissible_count(const ChainElement& phi) {
  // n^{r-i} * (n - j + 1); covers the whole chain (at j = 1 it collapses
  // to n^{r+1-i}, at i = 1 to n^{r-1}(n+1-j)).
  const int n = phi.ctx.n, r = phi.ctx.r();
  unsigned long long acc = 1;
  for (int k = 0; k < r - phi.group_i; ++k) acc *= static_cast<unsigned long long>(n);
  return acc * static_cast<unsigned long long>(n - phi.slot_j + 1);
}

ZStrata z_stratification(const ChainElement& phi) {
  const int r = phi.ctx.r(), i = phi.group_i;
  const int fixed = r - i;  // 0-based index of position r+1-i
  std::vector<Tuple> all = enumerate_admissible(phi);
  ZStrata zs;
  zs.by_top.assign(static_cast<std::size_t>(r - i + 1), {});
  for (const Tuple& s : all) {
    if (s[fixed] != phi.tuple[fixed]) continue;
    zs.z.push_back(s);
    int top = 0;
    for (int k = r - 1; k >= 0; --k)
      if (s[k] > phi.tuple[k]) { top = k + 1; break; }
    zs.by_top[static_cast<std::size_t>(top)].push_back(s);
  }
  if (all.size() >= 2) {
    zs.r2 = all[1];
    zs.has_r2 = true;
  }
  return zs;
}

std::vector<CountRow> count_formulas(int n, int s, unsigned long long cap) {
  const int r = n * s;
  long double est = std::pow(static_cast<long double>(n), r);
  if (est > static_cast<long double>(cap)) throw std::runtime_error("enumeration too large");
  std::vector<CountRow> table;
  for (const ChainElement& phi : reduced_chain(n, s)) {
    CountRow row;
    row.position = phi.position;
    row.enumerated = enumerate_admissible(phi).size();
    row.predicted = predicted_admissible_count(phi);
    table.push_back(row);
  }
  return table;
}

} // namespace schubert
