#pragma once

#include <map>
#include <vector>

#include "schubert/shuffle.hpp"

namespace schubert {

// A linear combination of Plücker labels.
using LinearForm = std::vector<std::pair<Rat, Tuple>>;

struct Straightening {
  Tuple input;
  LinearForm expansion;  // admissible tuples only
};

// Nonvanishing on the big Schubert cell: componentwise >= the base tuple
// and last entry <= rn.
bool nonvanishing_on_base(const Tuple& I, const Context& ctx);

// Rewrites p_I as a combination of admissible coordinates by repeatedly
// solving the shuffle relation at the first oversized gap.  Memoized;
// one instance per ambient context.
class Straightener {
public:
  explicit Straightener(const Context& ctx);

  const Straightening& straighten(const Tuple& I);
  const Context& ctx() const { return ctx_; }

private:
  Context ctx_;
  std::map<Tuple, Straightening> memo_;
};

// Degree-one ideal generators of X(phi) inside the ambient Grassmannian:
// p_I for every vanishing label, p_I - (admissible expansion restricted to
// X(phi)) for every nonvanishing non-admissible label.
std::vector<LinearForm> degree_one_ideal_generators(const ChainElement& phi,
                                                    Straightener& st);

// f_{R2} f_S = f_phi f_{S'} at `points` random cell points, S in Z(phi).
// Throws if S is not in Z(phi).
bool degree_two_check(const ChainElement& phi, const Tuple& S, RandomSource& rng,
                      int points = 30);

} // namespace schubert
