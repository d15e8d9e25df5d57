#include "schubert/orbits.hpp"

#include <stdexcept>

namespace schubert {

bool is_nilpotent(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  return m.pow(static_cast<unsigned>(m.rows())).is_zero();
}

Matrix jordan_matrix(const Partition& mu) {
  const int n = weight(mu);
  Matrix j(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  int base = 0;
  for (int part : mu) {
    for (int k = 0; k + 1 < part; ++k)
      j(static_cast<std::size_t>(base + k), static_cast<std::size_t>(base + k + 1)) = 1;
    base += part;
  }
  return j;
}

OrbitMembership orbit_membership(const Matrix& N, const Partition& mu) {
  if (!is_nilpotent(N)) throw std::invalid_argument("not nilpotent");
  const int n = weight(mu);
  if (static_cast<int>(N.rows()) != n) throw std::invalid_argument("size mismatch");
  Partition lambda = conjugate(mu);
  OrbitMembership out{true, true};
  Matrix power = N;
  int lsum = 0;
  for (int i = 1; i <= n; ++i) {
    lsum += i <= static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(i - 1)] : 0;
    const std::size_t rk = rank(power);
    const int bound = n - lsum;
    if (static_cast<int>(rk) > bound) out.in_closure = false;
    if (static_cast<int>(rk) != bound) out.in_open_orbit = false;
    power = power * N;
  }
  if (!out.in_closure) out.in_open_orbit = false;
  return out;
}

Matrix random_orbit_point(const Partition& mu, RandomSource& rng, long bound) {
  const int n = weight(mu);
  Matrix g = random_invertible(static_cast<std::size_t>(n), rng, bound);
  Matrix pt = g * jordan_matrix(mu) * adjugate(g);
  OrbitMembership m = orbit_membership(pt, mu);
  if (!m.in_open_orbit) throw std::logic_error("conjugated point left its orbit");
  return pt;
}

Matrix lusztig_embed(const Matrix& N) {
  if (!is_nilpotent(N)) throw std::invalid_argument("not nilpotent");
  const std::size_t n = N.rows();
  Matrix out(n * n, n);
  for (std::size_t block = 0; block < n; ++block) {
    Matrix pw = N.pow(static_cast<unsigned>(n - 1 - block));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(block * n + i, j) = pw(i, j);
  }
  return out;
}

} // namespace schubert
