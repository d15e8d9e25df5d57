#include "schubert/matrix.hpp"

#include <stdexcept>

namespace schubert {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

Matrix Matrix::pow(unsigned e) const {
  if (rows_ != cols_) throw std::invalid_argument("not square");
  Matrix acc = identity(rows_);
  for (unsigned k = 0; k < e; ++k) acc = acc * (*this);
  return acc;
}

bool Matrix::is_zero() const {
  for (const Rat& x : data_) if (x != 0) return false;
  return true;
}

namespace {

// Clear denominators row by row, returning an integer grid with the same
// rank (and determinant up to the recorded factor).
struct IntGrid {
  std::size_t rows, cols;
  std::vector<Int> a;
  Rat det_scale;  // det(original) = det(grid) / det_scale ... per-row factors
  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

IntGrid to_integer(const Matrix& m) {
  IntGrid g{m.rows(), m.cols(), {}, Rat(1)};
  g.a.resize(g.rows * g.cols);
  for (std::size_t i = 0; i < g.rows; ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < g.cols; ++j) {
      const Int den = m(i, j).get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    g.det_scale *= Rat(lcm);
    for (std::size_t j = 0; j < g.cols; ++j) {
      Rat scaled = m(i, j) * Rat(lcm);
      g.at(i, j) = scaled.get_num();
    }
  }
  return g;
}

// Fraction-free Bareiss elimination.  Returns rank; if detp != nullptr the
// grid must be square and *detp receives its determinant.
std::size_t bareiss(IntGrid& g, Int* detp) {
  Int prev = 1;
  int sign = 1;
  std::size_t rank = 0;
  std::size_t pc = 0;
  for (; pc < g.cols && rank < g.rows; ++pc) {
    std::size_t pivot = rank;
    while (pivot < g.rows && g.at(pivot, pc) == 0) ++pivot;
    if (pivot == g.rows) {
      if (detp) { *detp = 0; return rank; }
      continue;
    }
    if (pivot != rank) {
      for (std::size_t j = 0; j < g.cols; ++j) std::swap(g.at(pivot, j), g.at(rank, j));
      sign = -sign;
    }
    const Int piv = g.at(rank, pc);
    for (std::size_t i = rank + 1; i < g.rows; ++i) {
      for (std::size_t j = pc + 1; j < g.cols; ++j) {
        Int t = piv * g.at(i, j) - g.at(i, pc) * g.at(rank, j);
        mpz_divexact(g.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      g.at(i, pc) = 0;
    }
    prev = piv;
    ++rank;
  }
  if (detp) {
    if (rank < g.rows) *detp = 0;
    else *detp = sign > 0 ? prev : Int(-prev);
  }
  return rank;
}

} // namespace

Rat det(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("not square");
  if (m.rows() == 0) return 1;
  IntGrid g = to_integer(m);
  Int d;
  bareiss(g, &d);
  return Rat(d) / g.det_scale;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntGrid g = to_integer(m);
  return bareiss(g, nullptr);
}

Rat minor_det(const Matrix& m, const std::vector<std::size_t>& ri,
              const std::vector<std::size_t>& ci) {
  if (ri.size() != ci.size()) throw std::invalid_argument("non-square minor");
  for (std::size_t i : ri)
    if (i < 1 || i > m.rows()) throw std::out_of_range("index out of range");
  for (std::size_t j : ci)
    if (j < 1 || j > m.cols()) throw std::out_of_range("index out of range");
  const std::size_t k = ri.size();
  Matrix sub(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(ri[i] - 1, ci[j] - 1);
  return det(sub);
}

std::vector<std::vector<Rat>> left_kernel(const Matrix& m) {
  // Gauss-Jordan on the transpose over Q; kernel of m^T acting on the right
  // equals left kernel of m.
  const std::size_t nr = m.cols(), nc = m.rows();  // transpose dims
  std::vector<std::vector<Rat>> a(nr, std::vector<Rat>(nc));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) a[i][j] = m(j, i);
  std::vector<long> pivot_of_col(nc, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t p = row;
    while (p < nr && a[p][col] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[row]);
    Rat inv = 1 / a[row][col];
    for (std::size_t j = 0; j < nc; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < nr; ++i)
      if (i != row && a[i][col] != 0) {
        Rat f = a[i][col];
        for (std::size_t j = 0; j < nc; ++j) a[i][j] -= f * a[row][j];
      }
    pivot_of_col[col] = static_cast<long>(row);
    ++row;
  }
  std::vector<std::vector<Rat>> basis;
  for (std::size_t col = 0; col < nc; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<Rat> v(nc, Rat(0));
    v[col] = 1;
    for (std::size_t c = 0; c < nc; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -a[static_cast<std::size_t>(pivot_of_col[c])][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix random_invertible(std::size_t n, RandomSource& rng, long bound) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(rng.uniform(-bound, bound));
    if (det(m) != 0) return m;
  }
  throw std::runtime_error("sampling failed");
}

Matrix adjugate(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("not square");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix adj(n, n);
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rows.clear(); cols.clear();
      for (std::size_t k = 1; k <= n; ++k) {
        if (k != j + 1) rows.push_back(k);
        if (k != i + 1) cols.push_back(k);
      }
      Rat c = minor_det(m, rows, cols);
      adj(i, j) = ((i + j) % 2 == 0) ? c : -c;
    }
  return adj;
}

} // namespace schubert
