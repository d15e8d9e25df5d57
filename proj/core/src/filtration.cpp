#include "schubert/filtration.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubert/modular.hpp"

namespace schubert {

namespace {

// all k-subsets of {1..n}, each strictly increasing
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i + 1;
  if (k > n) return out;
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

std::size_t rank_once(const std::vector<std::vector<Int>>& minor_values,
                      int m, std::uint64_t prime) {
  const std::size_t points = minor_values.front().size();
  auto reduce = [&](const std::vector<Int>& v) {
    std::vector<std::uint64_t> out(points);
    for (std::size_t k = 0; k < points; ++k) out[k] = mod_reduce(v[k], prime);
    return out;
  };

  // level-1 span: constants plus all single minors
  EchelonModP level1(prime);
  std::vector<std::vector<std::uint64_t>> basis1;
  {
    std::vector<std::uint64_t> ones(points, 1);
    std::vector<std::uint64_t> keep = ones;
    if (level1.offer(ones)) basis1.push_back(std::move(keep));
  }
  for (const auto& mv : minor_values) {
    std::vector<std::uint64_t> v = reduce(mv);
    std::vector<std::uint64_t> keep = v;
    if (level1.offer(v)) basis1.push_back(std::move(keep));
  }

  // grow: span of level-k products = (level k-1 basis) x (level-1 basis),
  // pointwise -- products are bilinear, so basis products span everything
  std::vector<std::vector<std::uint64_t>> cur = basis1;
  std::size_t dim = basis1.size();
  for (int level = 2; level <= m; ++level) {
    EchelonModP ech(prime);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& a : cur)
      for (const auto& b : basis1) {
        std::vector<std::uint64_t> prod(points);
        for (std::size_t k = 0; k < points; ++k) prod[k] = mulmod(a[k], b[k], prime);
        std::vector<std::uint64_t> keep = prod;
        if (ech.offer(prod)) next.push_back(std::move(keep));
      }
    cur = std::move(next);
    dim = ech.rank();
  }
  return dim;
}

std::size_t rank_at(const Partition& mu, int m, RandomSource& rng, std::size_t points) {
  const int n = weight(mu);
  const auto rowsets = subsets(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                               static_cast<std::size_t>(n));
  std::vector<std::size_t> all_cols(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) all_cols[static_cast<std::size_t>(j)] = static_cast<std::size_t>(j + 1);

  std::vector<std::vector<Int>> minor_values(rowsets.size(), std::vector<Int>(points));
  for (std::size_t k = 0; k < points; ++k) {
    Matrix stacked = lusztig_embed(random_orbit_point(mu, rng));
    for (std::size_t mi = 0; mi < rowsets.size(); ++mi) {
      Rat v = minor_det(stacked, rowsets[mi], all_cols);
      minor_values[mi][k] = v.get_num();  // integer input, integer minors
    }
  }
  std::size_t best = 0;
  for (std::uint64_t prime : kRankPrimes)
    best = std::max(best, rank_once(minor_values, m, prime));
  return best;
}

} // namespace

std::size_t filtration_dimension(const Partition& mu, int m, RandomSource& rng,
                                 std::size_t sample_count) {
  const int n = weight(mu);
  if (n > 4 || m > 3 || (n == 4 && m > 1))
    throw std::invalid_argument("filtration size cap exceeded (n <= 4 with m = 1, n <= 3 with m <= 3)");
  if (sample_count != 0) return rank_at(mu, m, rng, sample_count);
  // adaptive: grow the point set until the rank stops saturating it
  std::size_t points = 64;
  while (true) {
    std::size_t d = rank_at(mu, m, rng, points);
    if (d + 16 <= points || points >= 4096) return d;
    points *= 2;
  }
}

unsigned long long weyl_dim(int n, const std::vector<int>& lambda) {
  std::vector<long> lam(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (static_cast<int>(i) >= n) {
      if (lambda[i] != 0) return 0;
      continue;
    }
    lam[i] = lambda[i];
  }
  Int num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= lam[static_cast<std::size_t>(i)] - lam[static_cast<std::size_t>(j)] + j - i;
      den *= j - i;
    }
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q.get_ui();
}

unsigned long long weyl_rectangle_dim(int n, int rows, int cols) {
  if (rows > n) return 0;
  std::vector<int> lam(static_cast<std::size_t>(rows), cols);
  return weyl_dim(n, lam);
}

unsigned long long ssyt_count_rectangle(int n, int rows, int cols) {
  if (rows > n) return 0;
  if (rows == 0 || cols == 0) return 1;
  // fill column by column; each column strictly increases and each row
  // weakly increases across consecutive columns
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows),
                                     std::vector<int>(static_cast<std::size_t>(cols), 0));
  unsigned long long count = 0;
  auto rec = [&](auto&& self, int c, int r) -> void {
    if (c == cols) { ++count; return; }
    int lo = 1;
    if (r > 0) lo = std::max(lo, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    if (c > 0) lo = std::max(lo, grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    for (int v = lo; v <= n - (rows - 1 - r); ++v) {
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      if (r + 1 == rows) self(self, c + 1, 0);
      else self(self, c, r + 1);
    }
  };
  rec(rec, 0, 0);
  return count;
}

ConjectureReport conjecture_check(const Partition& mu, int m, RandomSource& rng) {
  ConjectureReport rep;
  rep.mu = mu;
  rep.m = m;
  const int n = weight(mu);
  Partition lambda = conjugate(mu);
  rep.predicted_rows = 1;
  rep.predicted_cols = 1;
  for (int li : lambda) {
    rep.predicted_rows *= weyl_rectangle_dim(n, li, m);
    rep.predicted_cols *= weyl_rectangle_dim(n, m, li);
  }
  const unsigned long long want = std::max(rep.predicted_rows, rep.predicted_cols);
  rep.filtration_dim = filtration_dimension(mu, m, rng, static_cast<std::size_t>(want) + 24);
  rep.match_rows = rep.filtration_dim == rep.predicted_rows;
  rep.match_cols = rep.filtration_dim == rep.predicted_cols;
  return rep;
}

} // namespace schubert
