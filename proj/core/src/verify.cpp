#include "schubert/verify.hpp"

#include <algorithm>
#include <map>

#include "schubert/bmu.hpp"
#include "schubert/demazure.hpp"
#include "schubert/filtration.hpp"
#include "schubert/level_one.hpp"
#include "schubert/orbit_equations.hpp"
#include "schubert/report.hpp"
#include "schubert/sn_character.hpp"
#include "schubert/straighten.hpp"
#include "schubert/tableau.hpp"

namespace schubert::verify {

namespace {

using nlohmann::json;

std::vector<Tuple> all_r_subsets(int lo, int hi, int r) {
  std::vector<Tuple> out;
  if (hi - lo + 1 < r) return out;
  Tuple cur(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) cur[static_cast<std::size_t>(j)] = lo + j;
  while (true) {
    out.push_back(cur);
    int k = r - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == hi - (r - 1 - k)) --k;
    if (k < 0) break;
    ++cur[static_cast<std::size_t>(k)];
    for (int t = k + 1; t < r; ++t)
      cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

} // namespace

json counting_formulas() {
  json cases = json::array();
  bool pass = true;
  for (auto [n, s] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    std::size_t mismatches = 0;
    for (const CountRow& row : count_formulas(n, s))
      if (row.enumerated != row.predicted) ++mismatches;
    if (mismatches) pass = false;
    cases.push_back({{"n", n}, {"s", s}, {"mismatches", mismatches}});
  }
  return {{"name", "counting-formulas"}, {"pass", pass}, {"cases", cases}};
}

json shuffle_vanishing(std::uint64_t seed) {
  json cases = json::array();
  bool pass = true;
  for (auto [n, s] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    Context ctx{n, s};
    const int r = ctx.r(), rn = ctx.r() * n;
    RandomSource rng(seed ^ 0x51fULL ^ ((static_cast<std::uint64_t>(n) << 8) | static_cast<std::uint64_t>(s)));
    CellMatrix cell = build_cell_matrix(reduced_chain(n, s).front());
    std::vector<CellPoint> pts;
    for (int k = 0; k < 50; ++k) pts.push_back(specialize_random(cell, rng));

    // evaluate every Plücker label once per point, then check relations
    // by table lookup
    std::map<Tuple, std::size_t> idx;
    std::vector<Tuple> labels = all_r_subsets(1, rn, r);
    for (std::size_t k = 0; k < labels.size(); ++k) idx[labels[k]] = k;
    std::vector<std::vector<Rat>> table(labels.size(), std::vector<Rat>(pts.size()));
    for (std::size_t k = 0; k < labels.size(); ++k)
      for (std::size_t p = 0; p < pts.size(); ++p)
        table[k][p] = evaluate_plucker(pts[p], labels[k]);

    std::size_t relations = 0, failures = 0;
    for (const Tuple& I : all_r_subsets(n + 1, rn, r)) {
      for (int ell = 1; ell <= r; ++ell) {
        ShuffleRelation rel = shuffle(I, ell, ctx);
        ++relations;
        for (std::size_t p = 0; p < pts.size(); ++p) {
          Rat acc(0);
          for (const ShuffleTerm& t : rel.terms)
            acc += Rat(t.sign) * table[idx.at(t.tuple)][p];
          if (acc != 0) { ++failures; break; }
        }
      }
    }
    if (failures) pass = false;
    cases.push_back({{"n", n}, {"s", s}, {"relations", relations}, {"failures", failures}});
  }
  return {{"name", "shuffle-vanishing"}, {"pass", pass}, {"cases", cases}};
}

json straightening_correctness(std::uint64_t seed) {
  json cases = json::array();
  bool pass = true;
  for (auto [n, s] : {std::pair{2, 1}, {3, 1}}) {
    Context ctx{n, s};
    const int r = ctx.r(), rn = ctx.r() * n;
    ChainElement top = reduced_chain(n, s).front();
    RandomSource rng(seed ^ 0x57ULL ^ static_cast<std::uint64_t>(n));
    CellMatrix cell = build_cell_matrix(top);
    std::vector<CellPoint> pts;
    for (int k = 0; k < top.dim() + 5; ++k) pts.push_back(specialize_random(cell, rng));

    Straightener st(ctx);
    std::size_t checked = 0, failures = 0;
    for (const Tuple& I : all_r_subsets(1, rn, r)) {
      if (!nonvanishing_on_base(I, ctx) || is_admissible(I, ctx)) continue;
      ++checked;
      const Straightening& res = st.straighten(I);
      bool ok = true;
      for (const auto& [c, t] : res.expansion)
        if (!is_admissible(t, ctx)) ok = false;
      for (const CellPoint& pt : pts) {
        Rat lhs = evaluate_plucker(pt, I), rhs(0);
        for (const auto& [c, t] : res.expansion) rhs += c * evaluate_plucker(pt, t);
        if (lhs != rhs) ok = false;
      }
      if (!ok) ++failures;
    }
    if (failures) pass = false;
    cases.push_back({{"n", n}, {"s", s}, {"straightened", checked}, {"failures", failures}});
  }
  return {{"name", "straightening-correctness"}, {"pass", pass}, {"cases", cases}};
}

json basis_certification(std::uint64_t seed) {
  json cases = json::array();
  bool pass = true;
  for (auto [n, s] : {std::pair{2, 1}, {3, 1}}) {
    RandomSource rng(seed ^ 0xba51ULL ^ static_cast<std::uint64_t>(n));
    for (const ChainElement& phi : reduced_chain(n, s)) {
      IndependenceCertificate cert = independence_check(phi, rng);
      bool span = spanning_check(phi, rng);
      if (!cert.valid || !span) pass = false;
      cases.push_back({{"n", n},
                       {"s", s},
                       {"position", phi.position},
                       {"certificate", to_json(cert)},
                       {"spanning", span}});
    }
  }
  return {{"name", "basis-certification"}, {"pass", pass}, {"cases", cases}};
}

json degree_two_relations(std::uint64_t seed) {
  json cases = json::array();
  bool pass = true;
  for (auto [n, s] : {std::pair{2, 1}, {3, 1}}) {
    RandomSource rng(seed ^ 0xd2ULL ^ static_cast<std::uint64_t>(n));
    for (const ChainElement& phi : reduced_chain(n, s)) {
      std::size_t checked = 0, failures = 0;
      for (const Tuple& S : z_stratification(phi).z) {
        ++checked;
        if (!degree_two_check(phi, S, rng)) ++failures;
      }
      if (failures) pass = false;
      cases.push_back({{"n", n}, {"s", s}, {"position", phi.position},
                       {"checked", checked}, {"failures", failures}});
    }
  }
  return {{"name", "degree-two-relations"}, {"pass", pass}, {"cases", cases}};
}

json orbit_order() {
  json cases = json::array();
  bool pass = true;
  for (int n = 1; n <= 5; ++n) {
    std::size_t pairs = 0, failures = 0;
    const auto parts = partitions_of(n);
    for (const Partition& nu : parts)
      for (const Partition& mu : parts) {
        ++pairs;
        const bool dom = dominance_leq(nu, mu);
        const bool closure = orbit_membership(jordan_matrix(nu), mu).in_closure;
        if (dom != closure) ++failures;
      }
    if (failures) pass = false;
    cases.push_back({{"n", n}, {"pairs", pairs}, {"failures", failures}});
  }
  return {{"name", "orbit-order"}, {"pass", pass}, {"cases", cases}};
}

json filtration_conjecture(std::uint64_t seed) {
  json cases = json::array();
  bool all_rows = true, all_cols = true;
  RandomSource rng(seed ^ 0xf117ULL);
  auto run = [&](const Partition& mu, int m) {
    ConjectureReport rep = conjecture_check(mu, m, rng);
    if (!rep.match_rows) all_rows = false;
    if (!rep.match_cols) all_cols = false;
    cases.push_back(to_json(rep));
  };
  for (int n = 2; n <= 3; ++n)
    for (const Partition& mu : partitions_of(n))
      for (int m = 1; m <= 3; ++m) run(mu, m);
  for (const Partition& mu : partitions_of(4)) run(mu, 1);
  const bool pass = all_rows || all_cols;
  json out = {{"name", "filtration-conjecture"}, {"pass", pass}, {"cases", cases}};
  if (all_rows) out["convention"] = "rows";
  else if (all_cols) out["convention"] = "cols";
  return out;
}

json orbit_equation_cutout(std::uint64_t seed) {
  json cases = json::array();
  bool pass = true;
  for (int n = 1; n <= 4; ++n) {
    RandomSource rng(seed ^ (0x0e9ULL + static_cast<std::uint64_t>(n)));
    for (const Partition& mu : partitions_of(n)) {
      CutoutReport rep = cutout_check(mu, rng);
      if (!rep.pass) pass = false;
      cases.push_back({{"n", n}, {"mu", mu}, {"pass", rep.pass}, {"failures", rep.failures}});
    }
  }
  return {{"name", "orbit-equation-cutout"}, {"pass", pass}, {"cases", cases}};
}

json kostka_oracle_pair() {
  json cases = json::array();
  bool pass = true;
  for (int n = 2; n <= 4; ++n) {
    const auto parts = partitions_of(n);
    std::size_t compared = 0, failures = 0;
    for (const Partition& mu : parts) {
      const Partition muc = conjugate(mu);
      const int top = n_statistic(muc);
      GradedCharacter gc = b_mu_graded_character(mu);
      for (const Partition& lambda : parts) {
        // graded Specht multiplicity in the quotient for mu
        QPoly mult;
        std::vector<long> chi = sn_character(lambda);
        for (std::size_t d = 0; d < gc.traces.size(); ++d) {
          long m = character_inner_product(n, gc.traces[d], chi);
          if (m != 0) mult.add_monomial(static_cast<int>(d), m);
        }
        // charge side, reversed at the top degree of the quotient
        QPoly kf = kostka_foulkes(lambda, muc);
        QPoly reversed;
        for (std::size_t k = 0; k < kf.coeffs().size(); ++k)
          if (kf.coeff(k) != 0) reversed.add_monomial(top - static_cast<int>(k), kf.coeff(k));
        ++compared;
        if (!(mult == reversed)) ++failures;
      }
    }
    if (failures) pass = false;
    cases.push_back({{"n", n}, {"compared", compared}, {"failures", failures}});
  }
  // specialization q = 1 counts tableaux
  for (int n = 2; n <= 5; ++n) {
    std::size_t failures = 0;
    const auto parts = partitions_of(n);
    for (const Partition& lambda : parts)
      for (const Partition& mu : parts) {
        std::vector<int> content(mu.begin(), mu.end());
        if (kostka_foulkes(lambda, mu).eval_at_one() !=
            static_cast<long>(ssyt(lambda, content).size()))
          ++failures;
      }
    if (failures) pass = false;
    cases.push_back({{"n", n}, {"kostka-at-one-failures", failures}});
  }
  return {{"name", "kostka-oracle-pair"}, {"pass", pass}, {"cases", cases}};
}

json level_one_identity(std::uint64_t seed) {
  json cases = json::array();
  bool pass = true;
  for (int n = 2; n <= 3; ++n) {
    RandomSource rng(seed ^ (0x1e7e1ULL + static_cast<std::uint64_t>(n)));
    for (const Partition& mu : partitions_of(n)) {
      LevelOneReport rep = level_one_check(mu, 6, rng);
      if (!rep.pass) pass = false;
      cases.push_back(to_json(rep));
    }
  }
  return {{"name", "level-one-identity"}, {"pass", pass}, {"cases", cases}};
}

json shuffle_conjecture_probe(std::uint64_t seed) {
  // n = 2, s = 1: do the shuffle relations cut out exactly the t-stable
  // 2-subspaces of the 4-dimensional window?
  Context ctx{2, 1};
  const int rn = 4;
  std::vector<ShuffleRelation> rels;
  for (const Tuple& I : all_r_subsets(ctx.n + 1, rn, ctx.r()))
    for (int ell = 1; ell <= ctx.r(); ++ell) rels.push_back(shuffle(I, ell, ctx));

  Matrix tshift(4, 4);  // e1 -> e3, e2 -> e4, e3, e4 -> 0
  tshift(2, 0) = 1;
  tshift(3, 1) = 1;

  auto satisfies = [&](const Matrix& sub) {
    for (const ShuffleRelation& rel : rels) {
      Rat acc(0);
      for (const ShuffleTerm& t : rel.terms) {
        std::vector<std::size_t> rows{static_cast<std::size_t>(t.tuple[0]),
                                      static_cast<std::size_t>(t.tuple[1])};
        acc += Rat(t.sign) * minor_det(sub, rows, {1, 2});
      }
      if (acc != 0) return false;
    }
    return true;
  };
  auto t_stable = [&](const Matrix& sub) {
    Matrix aug(4, 4);
    Matrix shifted = tshift * sub;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        aug(i, j) = sub(i, j);
        aug(i, j + 2) = shifted(i, j);
      }
    return rank(aug) == 2;
  };

  RandomSource rng(seed ^ 0x9806eULL);
  json counterexamples = json::array();
  std::size_t tested = 0;

  auto classify = [&](const Matrix& sub) {
    ++tested;
    if (satisfies(sub) != t_stable(sub)) {
      json m = json::array();
      for (std::size_t i = 0; i < 4; ++i)
        m.push_back({to_string(sub(i, 0)), to_string(sub(i, 1))});
      counterexamples.push_back(m);
    }
  };

  // 200 unconstrained rank-2 subspaces
  for (int k = 0; k < 200; ++k) {
    Matrix sub(4, 2);
    do {
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 2; ++j) sub(i, j) = Rat(rng.uniform(-10, 10));
    } while (rank(sub) != 2);
    classify(sub);
  }
  // 200 t-stable subspaces: span{v, tv}, falling back to the kernel of t
  // when v is already killed
  for (int k = 0; k < 200; ++k) {
    Matrix sub(4, 2);
    while (true) {
      Matrix v(4, 1);
      for (std::size_t i = 0; i < 4; ++i) v(i, 0) = Rat(rng.uniform(-10, 10));
      Matrix tv = tshift * v;
      for (std::size_t i = 0; i < 4; ++i) {
        sub(i, 0) = v(i, 0);
        sub(i, 1) = tv(i, 0);
      }
      if (rank(sub) == 2) break;
      // v in ker t: pair it with an independent kernel vector
      sub(2, 1) = Rat(rng.uniform(-10, 10));
      sub(3, 1) = Rat(rng.uniform(-10, 10));
      sub(0, 1) = sub(1, 1) = 0;
      if (rank(sub) == 2) break;
    }
    classify(sub);
  }

  return {{"name", "shuffle-conjecture-probe"},
          {"pass", counterexamples.empty()},
          {"tested", tested},
          {"counterexamples", counterexamples}};
}

json verify_all(std::uint64_t seed) {
  std::vector<json> checks;
  checks.push_back(counting_formulas());
  checks.push_back(shuffle_vanishing(seed));
  checks.push_back(straightening_correctness(seed));
  checks.push_back(basis_certification(seed));
  checks.push_back(degree_two_relations(seed));
  checks.push_back(orbit_order());
  checks.push_back(filtration_conjecture(seed));
  checks.push_back(orbit_equation_cutout(seed));
  checks.push_back(kostka_oracle_pair());
  checks.push_back(level_one_identity(seed));
  checks.push_back(shuffle_conjecture_probe(seed));
  std::sort(checks.begin(), checks.end(), [](const json& a, const json& b) {
    return a.at("name").get<std::string>() < b.at("name").get<std::string>();
  });
  bool pass = true;
  json arr = json::array();
  for (json& c : checks) {
    if (!c.at("pass").get<bool>()) pass = false;
    arr.push_back(std::move(c));
  }
  return {{"schema", 1}, {"seed", seed}, {"pass", pass}, {"checks", arr}};
}

} // namespace schubert::verify
