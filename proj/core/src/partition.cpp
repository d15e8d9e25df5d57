#include "schubert/partition.hpp"

#include <stdexcept>

namespace schubert {

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int weight(const Partition& p) {
  int w = 0;
  for (int x : p) w += x;
  return w;
}

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int col = 1; col <= p[0]; ++col) {
    int cnt = 0;
    for (int x : p)
      if (x >= col) ++cnt;
    c.push_back(cnt);
  }
  return c;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (weight(a) != weight(b)) throw std::invalid_argument("unequal partition sizes");
  int sa = 0, sb = 0;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

namespace {

void gen(int rest, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(rest, maxpart); part >= 1; --part) {
    cur.push_back(part);
    gen(rest - part, part, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  gen(n, n, cur, out);
  return out;
}

int n_statistic(const Partition& p) {
  int acc = 0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += static_cast<int>(i) * p[i];
  return acc;
}

} // namespace schubert
