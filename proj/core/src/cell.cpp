#include "schubert/cell.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

CellMatrix build_cell_matrix(const ChainElement& phi) {
  const int n = phi.ctx.n, r = phi.ctx.r();
  const int i = phi.group_i, p = phi.p, q = phi.q;
  const int lo = p * n;  // global rows (lo, rn] are materialized
  const int R = r * n - lo;

  CellMatrix cell;
  cell.phi = phi;
  cell.row_offset = lo;
  cell.grid_.assign(static_cast<std::size_t>(R),
                    std::vector<CellMatrix::Entry>(static_cast<std::size_t>(r)));

  auto set = [&](int grow, int col, CellMatrix::Kind kind, int param) {
    auto& e = cell.grid_[static_cast<std::size_t>(grow - lo - 1)][static_cast<std::size_t>(col - 1)];
    e.kind = kind;
    e.param = param;
  };

  // Pivot pattern: rows mn+q carry the 1 of column m-p+1 for p <= m <= r+p-i;
  // the top i-1 rows rn+2-i .. rn carry the 1s of the last i-1 columns.
  std::vector<int> pivot_row_of_col(static_cast<std::size_t>(r) + 1, 0);
  for (int m = p; m <= r + p - i; ++m) pivot_row_of_col[static_cast<std::size_t>(m - p + 1)] = m * n + q;
  for (int c = r + 2 - i; c <= r; ++c) pivot_row_of_col[static_cast<std::size_t>(c)] = c + r * n - r;

  auto is_pivot_row = [&](int g) {
    for (int c = 1; c <= r; ++c)
      if (pivot_row_of_col[static_cast<std::size_t>(c)] == g) return true;
    return false;
  };

  // Column 1 template: 1 at row pn+q, free parameter at every later
  // non-pivot row.  kind_of[g] describes it for all global rows in range.
  std::vector<CellMatrix::Entry> col1(static_cast<std::size_t>(r * n + 1));
  for (int g = lo + 1; g <= r * n; ++g) {
    auto& e = col1[static_cast<std::size_t>(g)];
    if (g == p * n + q) {
      e.kind = CellMatrix::Kind::One;
    } else if (g > p * n + q && !is_pivot_row(g)) {
      e.kind = CellMatrix::Kind::Param;
      e.param = static_cast<int>(cell.labels_.size());
      cell.labels_.push_back("a_{" + std::to_string(g) + ",1}");
      cell.rows_of_params_.push_back(g);
    }
  }

  // Columns 1..r+1-i repeat column 1 shifted down by n each time; entries
  // that land on the top tail rows are cut to zero.
  for (int c = 1; c <= r + 1 - i; ++c) {
    for (int g = lo + 1; g <= r * n; ++g) {
      if (g > r * n + 1 - i && i > 1) continue;  // tail rows stay zero here
      int src = g - (c - 1) * n;
      if (src <= lo) continue;
      const auto& e = col1[static_cast<std::size_t>(src)];
      if (e.kind != CellMatrix::Kind::Zero) set(g, c, e.kind, e.param);
    }
  }
  // Tail columns are coordinate vectors on the top rows.
  for (int c = r + 2 - i; c <= r; ++c) set(pivot_row_of_col[static_cast<std::size_t>(c)], c, CellMatrix::Kind::One, -1);

  // Layout sanity: parameter count must equal the cell dimension.
  if (static_cast<int>(cell.labels_.size()) != phi.dim())
    throw std::logic_error("cell layout: parameter count != dimension");
  return cell;
}

CellPoint specialize(const CellMatrix& cell, const std::vector<Rat>& values) {
  if (values.size() != cell.params().size())
    throw std::invalid_argument("wrong value count");
  CellPoint pt;
  pt.phi = cell.phi;
  pt.row_offset = cell.row_offset;
  pt.values = values;
  pt.mat = Matrix(static_cast<std::size_t>(cell.local_rows()),
                  static_cast<std::size_t>(cell.cols()));
  for (int g = 1; g <= cell.local_rows(); ++g)
    for (int c = 1; c <= cell.cols(); ++c) {
      const auto& e = cell.at(g, c);
      if (e.kind == CellMatrix::Kind::One)
        pt.mat(static_cast<std::size_t>(g - 1), static_cast<std::size_t>(c - 1)) = 1;
      else if (e.kind == CellMatrix::Kind::Param)
        pt.mat(static_cast<std::size_t>(g - 1), static_cast<std::size_t>(c - 1)) =
            values[static_cast<std::size_t>(e.param)];
    }
  return pt;
}

CellPoint specialize_random(const CellMatrix& cell, RandomSource& rng, long bound) {
  std::vector<Rat> values(cell.params().size());
  for (auto& v : values) v = Rat(rng.uniform(-bound, bound));
  return specialize(cell, values);
}

Rat evaluate_plucker(const CellPoint& point, const Tuple& I) {
  const int r = point.phi.ctx.r();
  if (static_cast<int>(I.size()) != r) throw std::invalid_argument("wrong tuple length");
  Tuple sorted = I;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> rows, cols;
  for (int g : sorted) {
    if (g < 1) throw std::out_of_range("index out of range");
    // rows above the block are zero; rows past rn sit in the zero part of
    // the trivial tail relative to these columns
    if (g <= point.row_offset || g > r * point.phi.ctx.n) return Rat(0);
    rows.push_back(static_cast<std::size_t>(g - point.row_offset));
  }
  for (int c = 1; c <= r; ++c) cols.push_back(static_cast<std::size_t>(c));
  return minor_det(point.mat, rows, cols);
}

bool vanishing_criterion(const Tuple& I, const ChainElement& phi) {
  if (I.back() > phi.ctx.r() * phi.ctx.n) return true;
  return !componentwise_geq(I, phi.tuple);
}

} // namespace schubert
