#include "schubert/straighten.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

bool nonvanishing_on_base(const Tuple& I, const Context& ctx) {
  const int n = ctx.n, r = ctx.r();
  if (static_cast<int>(I.size()) != r) return false;
  for (int j = 0; j < r; ++j)
    if (I[static_cast<std::size_t>(j)] < j * n + 1) return false;
  return I.back() <= r * n;
}

Straightener::Straightener(const Context& ctx) : ctx_(ctx) {}

const Straightening& Straightener::straighten(const Tuple& I) {
  if (!nonvanishing_on_base(I, ctx_))
    throw std::invalid_argument("coordinate vanishes on X(w_s)");
  auto it = memo_.find(I);
  if (it != memo_.end()) return it->second;

  Straightening result{I, {}};
  if (is_admissible(I, ctx_)) {
    result.expansion.emplace_back(Rat(1), I);
  } else {
    const int n = ctx_.n, r = ctx_.r();
    int ell = 0;  // entries 1..ell move up by n
    for (int j = 0; j + 1 < r; ++j)
      if (I[static_cast<std::size_t>(j + 1)] - I[static_cast<std::size_t>(j)] > n) { ell = j + 1; break; }
    // nonvanishing forces i_r >= rn+1-n, so the oversized gap is internal
    if (ell == 0) throw std::logic_error("no oversized gap in non-admissible tuple");
    Tuple I1 = I;
    for (int j = 0; j < ell; ++j) I1[static_cast<std::size_t>(j)] += n;

    // The shuffle of I1 at this level contains p_I itself with sign +1
    // (take J = the first ell entries); solve for it.
    ShuffleRelation rel = shuffle(I1, ell, ctx_);
    std::map<Tuple, Rat> acc;
    bool found_self = false;
    for (const ShuffleTerm& t : rel.terms) {
      if (t.tuple == I) {
        if (t.sign != 1) throw std::logic_error("unexpected self-term sign");
        found_self = true;
        continue;
      }
      if (!nonvanishing_on_base(t.tuple, ctx_)) continue;
      const Straightening& sub = straighten(t.tuple);  // t.tuple is lex-greater
      for (const auto& [c, s] : sub.expansion) acc[s] += Rat(-t.sign) * c;
    }
    if (!found_self) throw std::logic_error("shuffle did not contain the input term");
    for (auto& [s, c] : acc)
      if (c != 0) result.expansion.emplace_back(c, s);
  }
  return memo_.emplace(I, std::move(result)).first->second;
}

std::vector<LinearForm> degree_one_ideal_generators(const ChainElement& phi,
                                                    Straightener& st) {
  const int r = phi.ctx.r(), rn = phi.ctx.r() * phi.ctx.n;
  std::vector<LinearForm> gens;
  // walk all strictly increasing r-subsets of [1, rn]
  Tuple I(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) I[static_cast<std::size_t>(j)] = j + 1;
  while (true) {
    if (vanishing_criterion(I, phi)) {
      gens.push_back({{Rat(1), I}});
    } else if (!is_admissible(I, phi.ctx)) {
      LinearForm form{{Rat(1), I}};
      for (const auto& [c, s] : st.straighten(I).expansion)
        if (!vanishing_criterion(s, phi)) form.emplace_back(-c, s);
      gens.push_back(std::move(form));
    }
    // next subset
    int k = r - 1;
    while (k >= 0 && I[static_cast<std::size_t>(k)] == rn - (r - 1 - k)) --k;
    if (k < 0) break;
    ++I[static_cast<std::size_t>(k)];
    for (int t = k + 1; t < r; ++t)
      I[static_cast<std::size_t>(t)] = I[static_cast<std::size_t>(t - 1)] + 1;
  }
  return gens;
}

bool degree_two_check(const ChainElement& phi, const Tuple& S, RandomSource& rng,
                      int points) {
  ZStrata zs = z_stratification(phi);
  int stratum = -1;
  for (std::size_t j = 0; j < zs.by_top.size(); ++j)
    if (std::find(zs.by_top[j].begin(), zs.by_top[j].end(), S) != zs.by_top[j].end())
      stratum = static_cast<int>(j);
  if (stratum < 0) throw std::invalid_argument("tuple not in Z(phi)");
  if (!zs.has_r2) return true;  // zero-dimensional cell: Z = {phi} only

  Tuple sp = S;
  sp[static_cast<std::size_t>(stratum)] += 1;
  CellMatrix cell = build_cell_matrix(phi);
  for (int t = 0; t < points; ++t) {
    CellPoint pt = specialize_random(cell, rng);
    Rat lhs = evaluate_plucker(pt, zs.r2) * evaluate_plucker(pt, S);
    Rat rhs = evaluate_plucker(pt, phi.tuple) * evaluate_plucker(pt, sp);
    if (lhs != rhs) return false;
  }
  return true;
}

} // namespace schubert
