#include "schubert/bmu.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "schubert/sn_character.hpp"

namespace schubert {

namespace {

using Exponent = std::vector<int>;  // length n
using Poly = std::map<Exponent, Rat>;

std::vector<Exponent> monomials_of_degree(int n, int d) {
  std::vector<Exponent> out;
  Exponent cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int var, int rest) -> void {
    if (var == n - 1) {
      cur[static_cast<std::size_t>(var)] = rest;
      out.push_back(cur);
      return;
    }
    for (int e = rest; e >= 0; --e) {
      cur[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, rest - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

Poly elementary(const SubsetElementary& g, int n) {
  Poly poly;
  const int k = static_cast<int>(g.subset.size());
  std::vector<int> pick(static_cast<std::size_t>(g.r));
  for (int i = 0; i < g.r; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    Exponent e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < g.r; ++i)
      e[static_cast<std::size_t>(g.subset[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])] - 1)] = 1;
    poly[e] = 1;
    int i = g.r;
    while (i > 0 && pick[static_cast<std::size_t>(i - 1)] == k - g.r + i - 1) --i;
    if (i == 0) break;
    ++pick[static_cast<std::size_t>(i - 1)];
    for (int t = i; t < g.r; ++t)
      pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
  }
  return poly;
}

// Reduced row echelon form of the degree-d ideal slice, kept as rows over
// the monomial basis plus the pivot positions.
struct IdealSlice {
  std::vector<Exponent> monomials;
  std::map<Exponent, std::size_t> index;
  std::vector<std::vector<Rat>> rows;  // RREF
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> complement;  // non-pivot monomial indices

  // subtract ideal rows to zero the pivot coordinates of v, in place
  void reduce(std::vector<Rat>& v) const {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rat c = v[pivots[k]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * rows[k][j];
    }
  }
};

IdealSlice ideal_slice(const Partition& mu, int d,
                       const std::vector<std::pair<SubsetElementary, Poly>>& gens) {
  const int n = weight(mu);
  IdealSlice slice;
  slice.monomials = monomials_of_degree(n, d);
  for (std::size_t k = 0; k < slice.monomials.size(); ++k) slice.index[slice.monomials[k]] = k;

  auto offer = [&](std::vector<Rat> v) {
    slice.reduce(v);
    std::size_t piv = v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) { piv = j; break; }
    if (piv == v.size()) return;
    Rat inv = 1 / v[piv];
    for (auto& x : v) x *= inv;
    // back-substitute into earlier rows to keep full RREF
    for (std::size_t k = 0; k < slice.rows.size(); ++k) {
      Rat c = slice.rows[k][piv];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) slice.rows[k][j] -= c * v[j];
    }
    slice.rows.push_back(std::move(v));
    slice.pivots.push_back(piv);
  };

  for (const auto& [g, poly] : gens) {
    if (g.r > d) continue;
    for (const Exponent& m : monomials_of_degree(n, d - g.r)) {
      std::vector<Rat> v(slice.monomials.size(), Rat(0));
      for (const auto& [e, c] : poly) {
        Exponent prod = e;
        for (int i = 0; i < n; ++i) prod[static_cast<std::size_t>(i)] += m[static_cast<std::size_t>(i)];
        v[slice.index.at(prod)] += c;
      }
      offer(std::move(v));
    }
  }
  std::vector<bool> is_pivot(slice.monomials.size(), false);
  for (std::size_t p : slice.pivots) is_pivot[p] = true;
  for (std::size_t k = 0; k < slice.monomials.size(); ++k)
    if (!is_pivot[k]) slice.complement.push_back(k);
  return slice;
}

// permutation with the given cycle type, acting on 1..n (1-based image table)
std::vector<int> canonical_permutation(const Partition& rho) {
  std::vector<int> img;
  int base = 0;
  for (int part : rho) {
    for (int k = 1; k < part; ++k) img.push_back(base + k + 1);
    img.push_back(base + 1);
    base += part;
  }
  return img;
}

} // namespace

std::vector<SubsetElementary> c_mu_generators(const Partition& mu) {
  const int n = weight(mu);
  std::vector<int> parts(mu.begin(), mu.end());
  parts.resize(static_cast<std::size_t>(n), 0);
  std::vector<SubsetElementary> gens;
  // iterate nonempty subsets of {1..n}
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> S;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) S.push_back(i + 1);
    const int k = static_cast<int>(S.size());
    int dk = 0;  // sum of the last k parts
    for (int j = n - k; j < n; ++j) dk += parts[static_cast<std::size_t>(j)];
    for (int r = std::max(1, k - dk + 1); r <= k; ++r) gens.push_back({r, S});
  }
  return gens;
}

GradedCharacter b_mu_graded_character(const Partition& mu, int max_degree) {
  const int n = weight(mu);
  if (max_degree < 0) max_degree = n_statistic(conjugate(mu));
  GradedCharacter gc;
  gc.mu = mu;
  gc.classes = partitions_of(n);

  std::vector<std::pair<SubsetElementary, Poly>> gens;
  for (const SubsetElementary& g : c_mu_generators(mu)) gens.emplace_back(g, elementary(g, n));

  std::vector<std::vector<int>> perms;
  for (const Partition& rho : gc.classes) perms.push_back(canonical_permutation(rho));

  for (int d = 0; d <= max_degree; ++d) {
    IdealSlice slice = ideal_slice(mu, d, gens);
    gc.dims.push_back(slice.complement.size());
    std::vector<long> tr(gc.classes.size(), 0);
    for (std::size_t ci = 0; ci < perms.size(); ++ci) {
      const auto& img = perms[ci];
      Rat trace(0);
      for (std::size_t bi = 0; bi < slice.complement.size(); ++bi) {
        const Exponent& mono = slice.monomials[slice.complement[bi]];
        // sigma . y^e permutes variables: exponent of y_{img(i)} = e_i
        Exponent moved(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
          moved[static_cast<std::size_t>(img[static_cast<std::size_t>(i)] - 1)] =
              mono[static_cast<std::size_t>(i)];
        std::vector<Rat> v(slice.monomials.size(), Rat(0));
        v[slice.index.at(moved)] = 1;
        slice.reduce(v);
        trace += v[slice.complement[bi]];
      }
      if (trace.get_den() != 1) throw std::logic_error("non-integral trace");
      tr[ci] = static_cast<long>(trace.get_num().get_si());
    }
    gc.traces.push_back(std::move(tr));
  }
  return gc;
}

QPoly graded_multiplicity(const Partition& mu, const Partition& lambda, int max_degree) {
  const int n = weight(mu);
  if (weight(lambda) != n) throw std::invalid_argument("size mismatch");
  GradedCharacter gc = b_mu_graded_character(mu, max_degree);
  std::vector<long> chi = sn_character(lambda);
  QPoly out;
  for (std::size_t d = 0; d < gc.traces.size(); ++d) {
    long mult = character_inner_product(n, gc.traces[d], chi);
    if (mult != 0) out.add_monomial(static_cast<int>(d), mult);
  }
  return out;
}

} // namespace schubert
