#pragma once

#include <cstddef>
#include <vector>

#include "schubert/index_tuple.hpp"

namespace schubert {

// One element of the reduced chain tau_1 > tau_2 > ... > tau_{r(n-1)+1}.
// Group/slot coordinates: phi_{ij} = tau_{(i-1)n-(i-j)+1}; the final
// (identity) element is phi_{r,n}.  p, q solve (i-1)n+1+j-i = p*n+q with
// 1 <= q <= n; they drive the cell-matrix layout.
struct ChainElement {
  Context ctx;
  Tuple tuple;
  int position = 1;  // ell, 1-based
  int group_i = 1;
  int slot_j = 1;
  int p = 0;
  int q = 1;

  int dim() const { return ctx.r() * (ctx.n - 1) - (position - 1); }
};

std::vector<ChainElement> reduced_chain(int n, int s);

// All admissible S >= phi componentwise with entries <= rn, in
// lexicographic order.  This is the coordinate basis set A_phi.
std::vector<Tuple> enumerate_admissible(const ChainElement& phi);

// Closed-form prediction for #A_phi from the chain position.
unsigned long long predicted_admissible_count(const ChainElement& phi);

struct ZStrata {
  std::vector<Tuple> z;                    // all of Z(phi)
  std::vector<std::vector<Tuple>> by_top;  // by_top[j] = Z_j(phi), j = 0..r-i
  Tuple r2;                                // second lex-smallest of A_phi
  bool has_r2 = false;
};

// Z(phi) = { S in A_phi : s_{r+1-i} = phi(r+1-i) } with its stratification
// by the largest index where S exceeds phi.
ZStrata z_stratification(const ChainElement& phi);

struct CountRow {
  int position;
  unsigned long long enumerated;
  unsigned long long predicted;
};

// Enumerated vs closed-form admissible counts for the whole chain.
// Throws "enumeration too large" when n^r exceeds cap.
std::vector<CountRow> count_formulas(int n, int s, unsigned long long cap = 2000000);

} // namespace schubert
