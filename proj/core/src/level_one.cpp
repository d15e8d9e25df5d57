#include "schubert/level_one.hpp"

#include <algorithm>

#include "schubert/bmu.hpp"
#include "schubert/filtration.hpp"
#include "schubert/modular.hpp"

namespace schubert {

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t t = i; t < k; ++t) cur[t] = cur[t - 1] + 1;
  }
  return out;
}

} // namespace

LevelOneReport level_one_check(const Partition& mu, int max_degree, RandomSource& rng) {
  const int n = weight(mu);
  LevelOneReport rep;
  rep.mu = mu;
  rep.max_degree = max_degree;
  rep.lhs.assign(static_cast<std::size_t>(max_degree) + 1, 0);
  rep.rhs.assign(static_cast<std::size_t>(max_degree) + 1, 0);

  // right side: graded branching sum
  rep.rhs[0] = 1;
  for (const Partition& nu : partitions_of(n)) {
    if (static_cast<int>(nu.size()) > n - 1) continue;
    QPoly mult = graded_multiplicity(mu, conjugate(nu));
    const unsigned long long dim = weyl_dim(n, std::vector<int>(nu.begin(), nu.end()));
    for (int d = 0; d <= max_degree; ++d)
      rep.rhs[static_cast<std::size_t>(d)] +=
          static_cast<std::size_t>(mult.coeff(static_cast<std::size_t>(d))) *
          static_cast<std::size_t>(dim);
  }

  // left side: minors bucketed by homogeneity degree, rank per bucket
  const auto rowsets = subsets(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                               static_cast<std::size_t>(n));
  std::vector<int> degree_of(rowsets.size());
  for (std::size_t k = 0; k < rowsets.size(); ++k) {
    int deg = 0;
    for (std::size_t g : rowsets[k]) deg += n - static_cast<int>((g - 1) / static_cast<std::size_t>(n)) - 1;
    degree_of[k] = deg;
  }
  const std::size_t points = rowsets.size() + 20;
  std::vector<std::vector<Int>> values(rowsets.size(), std::vector<Int>(points));
  std::vector<std::size_t> all_cols(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) all_cols[static_cast<std::size_t>(j)] = static_cast<std::size_t>(j + 1);
  for (std::size_t pt = 0; pt < points; ++pt) {
    Matrix stacked = lusztig_embed(random_orbit_point(mu, rng));
    for (std::size_t k = 0; k < rowsets.size(); ++k)
      values[k][pt] = minor_det(stacked, rowsets[k], all_cols).get_num();
  }
  for (int d = 0; d <= max_degree; ++d) {
    std::size_t best = 0;
    for (std::uint64_t prime : kRankPrimes) {
      EchelonModP ech(prime);
      for (std::size_t k = 0; k < rowsets.size(); ++k) {
        if (degree_of[k] != d) continue;
        std::vector<std::uint64_t> v(points);
        for (std::size_t pt = 0; pt < points; ++pt) v[pt] = mod_reduce(values[k][pt], prime);
        ech.offer(v);
      }
      best = std::max(best, ech.rank());
    }
    rep.lhs[static_cast<std::size_t>(d)] = best;
  }

  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

} // namespace schubert
