#include "schubert/orbit_equations.hpp"

#include <algorithm>

namespace schubert {

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k;
    while (i > 0 && cur[static_cast<std::size_t>(i - 1)] == n - k + i) --i;
    if (i == 0) break;
    ++cur[static_cast<std::size_t>(i - 1)];
    for (int t = i; t < k; ++t)
      cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

} // namespace

Rat OrbitEquation::evaluate(const Matrix& X) const {
  const int n = static_cast<int>(X.rows());
  Rat acc(0);
  for (const auto& J : subsets(n, p - i)) {
    std::vector<std::size_t> rows, cols;
    for (int v : P) rows.push_back(static_cast<std::size_t>(v));
    for (int v : J) rows.push_back(static_cast<std::size_t>(v));
    for (int v : Q) cols.push_back(static_cast<std::size_t>(v));
    for (int v : J) cols.push_back(static_cast<std::size_t>(v));
    acc += minor_det(X, rows, cols);
  }
  return acc;
}

std::string OrbitEquation::name() const {
  auto list = [](const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
      s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
  };
  return "V_{" + std::to_string(i) + "," + std::to_string(p) + "}[P=" + list(P) +
         ",Q=" + list(Q) + "]";
}

std::vector<OrbitEquation> orbit_equation_spaces(const Partition& mu) {
  const int n = weight(mu);
  std::vector<OrbitEquation> gens;
  for (int p = 1; p <= n; ++p) gens.push_back({0, p, {}, {}});
  for (int i = 1; i <= n; ++i) {
    int head = 0;
    for (int k = 0; k < i && k < static_cast<int>(mu.size()); ++k) head += mu[static_cast<std::size_t>(k)];
    const int mu_i = head - i + 1;  // mu(i)
    if (i > std::min(mu_i, n - mu_i)) continue;
    for (const auto& P : subsets(n, i))
      for (const auto& Q : subsets(n, i)) gens.push_back({i, mu_i, P, Q});
  }
  return gens;
}

CutoutReport cutout_check(const Partition& mu, RandomSource& rng, int points) {
  const int n = weight(mu);
  const auto gens = orbit_equation_spaces(mu);
  CutoutReport rep;
  for (const Partition& nu : partitions_of(n)) {
    if (dominance_leq(nu, mu)) {
      std::vector<Matrix> samples{jordan_matrix(nu)};
      for (int k = 0; k < points; ++k) samples.push_back(random_orbit_point(nu, rng));
      for (const auto& g : gens)
        for (const Matrix& X : samples)
          if (g.evaluate(X) != 0) {
            rep.pass = false;
            rep.failures.push_back(g.name() + " nonzero on an orbit point it should cut");
          }
    } else {
      const Matrix J = jordan_matrix(nu);
      bool separated = false;
      for (const auto& g : gens)
        if (g.evaluate(J) != 0) { separated = true; break; }
      if (!separated) {
        rep.pass = false;
        rep.failures.push_back("no generator separates a non-dominated orbit");
      }
    }
  }
  return rep;
}

} // namespace schubert
