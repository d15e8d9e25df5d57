#pragma once

#include <string>
#include <vector>

#include "schubert/chain.hpp"
#include "schubert/matrix.hpp"

namespace schubert {

// Symbolic layout of the normalized matrix of an open cell.  Only the
// nonzero block (global rows p*n+1 .. rn) is materialized; rows above it
// are zero and rows below rn belong to the implicit identity tail, so
// Plücker labels reaching past rn evaluate to 0.
class CellMatrix {
public:
  enum class Kind { Zero, One, Param };
  struct Entry {
    Kind kind = Kind::Zero;
    int param = -1;  // index into params() when kind == Param
  };

  ChainElement phi;
  int row_offset = 0;  // global row g <-> local row g - row_offset

  int local_rows() const { return static_cast<int>(grid_.size()); }
  int cols() const { return phi.ctx.r(); }

  // 1-based local indices
  const Entry& at(int local_row, int col) const { return grid_[local_row - 1][col - 1]; }

  const std::vector<std::string>& params() const { return labels_; }
  // global row of the column-1 parameter k (labels are a_{row,1})
  const std::vector<int>& param_rows() const { return rows_of_params_; }

  friend CellMatrix build_cell_matrix(const ChainElement& phi);

private:
  std::vector<std::vector<Entry>> grid_;
  std::vector<std::string> labels_;
  std::vector<int> rows_of_params_;
};

CellMatrix build_cell_matrix(const ChainElement& phi);

// A cell matrix with exact values substituted for the parameters.
struct CellPoint {
  ChainElement phi;
  int row_offset = 0;
  Matrix mat;  // local_rows x r
  std::vector<Rat> values;
};

CellPoint specialize(const CellMatrix& cell, const std::vector<Rat>& values);
CellPoint specialize_random(const CellMatrix& cell, RandomSource& rng, long bound = 10);

// f_I at the point: the r x r minor on global rows I (sorted), all columns.
Rat evaluate_plucker(const CellPoint& point, const Tuple& I);

// True iff p_I restricts to 0 on X(phi): not(I >= I_phi componentwise) or
// the label runs past the block.
bool vanishing_criterion(const Tuple& I, const ChainElement& phi);

} // namespace schubert
