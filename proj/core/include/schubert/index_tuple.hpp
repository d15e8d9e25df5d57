#pragma once

#include <vector>

namespace schubert {

// Ambient sizes: block size n, level s, tuple length r = s*n.
struct Context {
  int n = 2;
  int s = 1;
  int r() const { return n * s; }
};

// A strictly increasing r-tuple of positive row labels, 1-based.  Entries
// beyond position r are implicit: i_j = j + (rn - r) for j > r (trivial tail).
using Tuple = std::vector<int>;

bool is_strictly_increasing(const Tuple& t);

// All consecutive gaps <= n, including the gap to the first trivial-tail
// entry rn+1 (i.e. entries.back() >= rn+1-n).
bool is_admissible(const Tuple& t, const Context& ctx);

// Componentwise order: a >= b in the Bruhat/vanishing sense.
bool componentwise_geq(const Tuple& a, const Tuple& b);

// An affine Weyl coset representative in the renormalized form, as the
// integer n-tuple (c_1,...,c_n); valid elements satisfy sum c_i = s(n-1)n.
struct WeylElement {
  std::vector<int> c;
  Context ctx;
};

WeylElement base_element(const Context& ctx);  // w_s = (0, sn, ..., sn)

// The increasing enumeration of { j + (c_j + k)n : 1<=j<=n, k>=0 },
// truncated to r entries.  Throws "not a coset representative" if the sum
// constraint fails or the truncated set does not end in a trivial tail.
Tuple index_tuple_of_weyl(const WeylElement& w, int r);

// Signed size of an almost-natural set relative to Z+: |added| - |removed|,
// where `added` lists elements of I outside Z+ and `removed` lists positive
// integers missing from I.
long virtual_cardinality(const std::vector<long>& added, const std::vector<long>& removed);

// Virtual cardinality of the pre-normalization I_w (threshold shifted so
// finitely many elements differ); equals -sum(c_i).
long virtual_cardinality_of_weyl(const std::vector<int>& c, int n);

} // namespace schubert
