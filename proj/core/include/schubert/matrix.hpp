#pragma once

#include <cstddef>
#include <vector>

#include "schubert/random.hpp"
#include "schubert/rational.hpp"

namespace schubert {

// Dense matrix over exact rationals.  Storage is row-major and 0-based;
// the index lists taken by minor() are 1-based because everything upstream
// (Plücker labels, pivot rows) speaks 1-based.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix operator*(const Matrix& o) const;
  Matrix pow(unsigned e) const;  // square matrices only
  bool is_zero() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

// Determinant of the submatrix on the listed rows/columns, taken in the
// listed order (so order contributes sign and a repeat gives 0).
// Indices are 1-based.  Empty lists give 1.
Rat minor_det(const Matrix& m, const std::vector<std::size_t>& row_indices,
              const std::vector<std::size_t>& col_indices);

Rat det(const Matrix& m);
std::size_t rank(const Matrix& m);

// Basis for the left kernel of m (rows v with v*m = 0); used to exhibit a
// candidate linear relation when an independence certificate fails.
std::vector<std::vector<Rat>> left_kernel(const Matrix& m);

// n x n integer-entry matrix with entries uniform in [-bound, bound],
// resampled until invertible.  Throws "sampling failed" after 1000 tries.
Matrix random_invertible(std::size_t n, RandomSource& rng, long bound = 10);

// Adjugate: adj(m) * m = det(m) * I.  Keeps entries integral for integer
// input, which lets orbit points stay integer under conjugation.
Matrix adjugate(const Matrix& m);

} // namespace schubert
