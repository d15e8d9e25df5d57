// Command-line surface: every enumeration/verification as a subcommand
// emitting a JSON report.  Exit 0 when every check passes, 1 on any
// mismatch, 2 on usage errors.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "schubert/bmu.hpp"
#include "schubert/orbit_equations.hpp"
#include "schubert/report.hpp"
#include "schubert/sn_character.hpp"
#include "schubert/straighten.hpp"
#include "schubert/tableau.hpp"
#include "schubert/verify.hpp"

using nlohmann::json;
using namespace schubert;

namespace {

struct Common {
  int n = 2;
  int s = 1;
  std::uint64_t seed = verify::kDefaultSeed;
  std::string out;
};

int emit(const json& body, const std::string& out) {
  json j = body;
  j["schema"] = 1;
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot open output file: " << out << "\n";
      return 2;
    }
    f << text;
  }
  return j.value("pass", true) ? 0 : 1;
}

ChainElement chain_at(int n, int s, int tau) {
  auto chain = reduced_chain(n, s);
  if (tau < 1 || tau > static_cast<int>(chain.size()))
    throw CLI::ValidationError("--tau", "chain position out of range");
  return chain[static_cast<std::size_t>(tau - 1)];
}

json coeff_tuple_list(const LinearForm& form) {
  json arr = json::array();
  for (const auto& [c, t] : form) arr.push_back({{"coeff", to_string(c)}, {"tuple", t}});
  return arr;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for Schubert cells, straightening "
               "laws, nilpotent orbits, and graded multiplicities"};
  app.require_subcommand(1);

  Common c;
  int tau = 1, level = 1, m = 1, max_degree = 6;
  std::size_t sample_count = 0;
  std::vector<int> tuple, mu, lambda;

  auto add_common = [&](CLI::App* cmd, bool with_ns = true) {
    if (with_ns) {
      cmd->add_option("--n", c.n, "block size n");
      cmd->add_option("--s", c.s, "level s (tuple length r = s*n)");
    }
    cmd->add_option("--seed", c.seed, "random seed (fixed default for reproducible runs)");
    cmd->add_option("--out", c.out, "write the JSON report here instead of stdout");
  };

  auto* cmd_admissible = app.add_subcommand("admissible", "admissible tuples on a chain element");
  add_common(cmd_admissible);
  cmd_admissible->add_option("--tau", tau, "chain position (1-based)");

  auto* cmd_chain = app.add_subcommand("chain", "the reduced chain of index tuples");
  add_common(cmd_chain);

  auto* cmd_shuffle = app.add_subcommand("shuffle", "a shuffle relation and its vanishing check");
  add_common(cmd_shuffle);
  cmd_shuffle->add_option("--tuple", tuple, "base tuple")->delimiter(',')->required();
  cmd_shuffle->add_option("--level", level, "shuffle level");

  auto* cmd_straighten = app.add_subcommand("straighten", "admissible expansion of a coordinate");
  add_common(cmd_straighten);
  cmd_straighten->add_option("--tuple", tuple, "coordinate label")->delimiter(',')->required();

  auto* cmd_gens = app.add_subcommand("ideal-gens", "degree-one ideal generators on a chain element");
  add_common(cmd_gens);
  cmd_gens->add_option("--tau", tau, "chain position (1-based)");

  auto* cmd_basis = app.add_subcommand("basis-check", "independence + spanning certificates");
  add_common(cmd_basis);
  cmd_basis->add_option("--tau", tau, "chain position, 0 = whole chain")->default_val(0);

  auto* cmd_counts = app.add_subcommand("counts", "enumerated vs predicted admissible counts");
  add_common(cmd_counts);

  auto* cmd_member = app.add_subcommand("orbit-member", "rank-condition orbit membership of Jordan points");
  add_common(cmd_member, false);
  cmd_member->add_option("--mu", mu, "orbit partition")->delimiter(',')->required();

  auto* cmd_lusztig = app.add_subcommand("lusztig", "stacked-power embedding of a sampled orbit point");
  add_common(cmd_lusztig, false);
  cmd_lusztig->add_option("--mu", mu, "orbit partition")->delimiter(',')->required();

  auto* cmd_filtration = app.add_subcommand("filtration", "minor-product filtration dimension");
  add_common(cmd_filtration, false);
  cmd_filtration->add_option("--mu", mu, "orbit partition")->delimiter(',')->required();
  cmd_filtration->add_option("--m", m, "product length bound");
  cmd_filtration->add_option("--sample-count", sample_count, "evaluation points (0 = adaptive)");

  auto* cmd_conjecture = app.add_subcommand("conjecture", "filtration dimension vs rectangle product");
  add_common(cmd_conjecture, false);
  cmd_conjecture->add_option("--mu", mu, "orbit partition")->delimiter(',')->required();
  cmd_conjecture->add_option("--m", m, "product length bound");

  auto* cmd_oeq = app.add_subcommand("orbit-equations", "generators of the orbit-closure equation spaces");
  add_common(cmd_oeq, false);
  cmd_oeq->add_option("--mu", mu, "orbit partition")->delimiter(',')->required();

  auto* cmd_cutout = app.add_subcommand("cutout", "set-theoretic separation check for orbit equations");
  add_common(cmd_cutout, false);
  cmd_cutout->add_option("--mu", mu, "orbit partition")->delimiter(',')->required();

  auto* cmd_kostka = app.add_subcommand("kostka", "charge-generating polynomial over tableaux");
  add_common(cmd_kostka, false);
  cmd_kostka->add_option("--lambda", lambda, "shape")->delimiter(',')->required();
  cmd_kostka->add_option("--mu", mu, "content")->delimiter(',')->required();

  auto* cmd_bmu = app.add_subcommand("bmu-character", "graded character of the diagonal quotient");
  add_common(cmd_bmu, false);
  cmd_bmu->add_option("--mu", mu, "partition")->delimiter(',')->required();
  cmd_bmu->add_option("--max-degree", max_degree, "top degree (-1 = whole quotient)")->default_val(-1);

  auto* cmd_level = app.add_subcommand("level-one", "per-degree filtration vs branching identity");
  add_common(cmd_level, false);
  cmd_level->add_option("--mu", mu, "orbit partition")->delimiter(',')->required();
  cmd_level->add_option("--max-degree", max_degree, "top degree to compare");

  auto* cmd_all = app.add_subcommand("verify-all", "the full verification suite");
  add_common(cmd_all);  // --n/--s accepted for interface symmetry; suite covers all sizes

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_admissible) {
      ChainElement phi = chain_at(c.n, c.s, tau);
      auto tuples = enumerate_admissible(phi);
      return emit({{"n", c.n}, {"s", c.s}, {"position", tau}, {"phi", phi.tuple},
                   {"tuples", tuples}, {"count", tuples.size()},
                   {"predicted", predicted_admissible_count(phi)},
                   {"pass", tuples.size() == predicted_admissible_count(phi)}},
                  c.out);
    }
    if (*cmd_chain) {
      json arr = json::array();
      for (const ChainElement& e : reduced_chain(c.n, c.s))
        arr.push_back({{"position", e.position}, {"i", e.group_i}, {"j", e.slot_j},
                       {"tuple", e.tuple}, {"dim", e.dim()}});
      return emit({{"n", c.n}, {"s", c.s}, {"chain", arr}, {"pass", true}}, c.out);
    }
    if (*cmd_shuffle) {
      Context ctx{c.n, c.s};
      ShuffleRelation rel = shuffle(tuple, level, ctx);
      RandomSource rng(c.seed);
      CellMatrix cell = build_cell_matrix(reduced_chain(c.n, c.s).front());
      bool vanishes = true;
      for (int k = 0; k < 20; ++k)
        if (evaluate(rel, specialize_random(cell, rng)) != 0) vanishes = false;
      json j = to_json(rel);
      j["vanishes"] = vanishes;
      j["pass"] = vanishes;
      return emit(j, c.out);
    }
    if (*cmd_straighten) {
      Context ctx{c.n, c.s};
      Straightener st(ctx);
      const Straightening& res = st.straighten(tuple);
      RandomSource rng(c.seed);
      ChainElement top = reduced_chain(c.n, c.s).front();
      CellMatrix cell = build_cell_matrix(top);
      bool verified = true;
      for (int k = 0; k < top.dim() + 5; ++k) {
        CellPoint pt = specialize_random(cell, rng);
        Rat rhs(0);
        for (const auto& [coeff, t] : res.expansion) rhs += coeff * evaluate_plucker(pt, t);
        if (rhs != evaluate_plucker(pt, tuple)) verified = false;
      }
      return emit({{"input", res.input}, {"expansion", coeff_tuple_list(res.expansion)},
                   {"verified", verified}, {"pass", verified}},
                  c.out);
    }
    if (*cmd_gens) {
      ChainElement phi = chain_at(c.n, c.s, tau);
      Straightener st(Context{c.n, c.s});
      auto gens = degree_one_ideal_generators(phi, st);
      json arr = json::array();
      for (const LinearForm& g : gens) arr.push_back(coeff_tuple_list(g));
      // generators + admissible labels partition the label set
      std::size_t labels = 1;
      for (int k = 0; k < phi.ctx.r(); ++k)
        labels = labels * static_cast<std::size_t>(phi.ctx.r() * phi.ctx.n - k) /
                 static_cast<std::size_t>(k + 1);
      const std::size_t admissible = enumerate_admissible(phi).size();
      return emit({{"n", c.n}, {"s", c.s}, {"position", tau}, {"generators", arr},
                   {"count", gens.size()}, {"admissible", admissible},
                   {"labels", labels}, {"pass", gens.size() + admissible == labels}},
                  c.out);
    }
    if (*cmd_basis) {
      RandomSource rng(c.seed);
      json arr = json::array();
      bool pass = true;
      for (const ChainElement& phi : reduced_chain(c.n, c.s)) {
        if (tau != 0 && phi.position != tau) continue;
        IndependenceCertificate cert = independence_check(phi, rng);
        bool span = spanning_check(phi, rng);
        if (!cert.valid || !span) pass = false;
        json j = to_json(cert);
        j["spanning"] = span;
        arr.push_back(std::move(j));
      }
      return emit({{"n", c.n}, {"s", c.s}, {"certificates", arr}, {"pass", pass}}, c.out);
    }
    if (*cmd_counts) {
      json arr = json::array();
      bool pass = true;
      for (const CountRow& row : count_formulas(c.n, c.s)) {
        if (row.enumerated != row.predicted) pass = false;
        arr.push_back({{"position", row.position}, {"enumerated", row.enumerated},
                       {"predicted", row.predicted}});
      }
      return emit({{"n", c.n}, {"s", c.s}, {"counts", arr}, {"pass", pass}}, c.out);
    }
    if (*cmd_member) {
      const int n = weight(mu);
      json arr = json::array();
      bool pass = true;
      for (const Partition& nu : partitions_of(n)) {
        OrbitMembership om = orbit_membership(jordan_matrix(nu), mu);
        const bool dom = dominance_leq(nu, mu);
        if (om.in_closure != dom) pass = false;
        arr.push_back({{"nu", nu}, {"in_closure", om.in_closure},
                       {"in_open_orbit", om.in_open_orbit}, {"dominated", dom}});
      }
      return emit({{"mu", mu}, {"jordan_points", arr}, {"pass", pass}}, c.out);
    }
    if (*cmd_lusztig) {
      RandomSource rng(c.seed);
      const int n = weight(mu);
      Matrix N = random_orbit_point(mu, rng);
      Matrix stacked = lusztig_embed(N);
      // bottom maximal minor is 1; each column is the previous one shifted
      // down by n
      std::vector<std::size_t> bottom, cols;
      for (int k = 0; k < n; ++k) {
        bottom.push_back(static_cast<std::size_t>(n * n - n + k + 1));
        cols.push_back(static_cast<std::size_t>(k + 1));
      }
      bool ok = minor_det(stacked, bottom, cols) == 1;
      for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(n); ++j)
        for (std::size_t i = 0; i + static_cast<std::size_t>(n) < stacked.rows(); ++i)
          if (stacked(i + static_cast<std::size_t>(n), j + 1) != stacked(i, j)) ok = false;
      json rows = json::array();
      for (std::size_t i = 0; i < stacked.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < stacked.cols(); ++j) row.push_back(to_string(stacked(i, j)));
        rows.push_back(std::move(row));
      }
      return emit({{"mu", mu}, {"matrix", rows}, {"pass", ok}}, c.out);
    }
    if (*cmd_filtration) {
      RandomSource rng(c.seed);
      std::size_t dim = filtration_dimension(mu, m, rng, sample_count);
      return emit({{"mu", mu}, {"m", m}, {"dim", dim}, {"pass", true}}, c.out);
    }
    if (*cmd_conjecture) {
      RandomSource rng(c.seed);
      ConjectureReport rep = conjecture_check(mu, m, rng);
      json j = to_json(rep);
      j["pass"] = rep.match_rows || rep.match_cols;
      return emit(j, c.out);
    }
    if (*cmd_oeq) {
      json arr = json::array();
      for (const OrbitEquation& g : orbit_equation_spaces(mu))
        arr.push_back({{"i", g.i}, {"p", g.p}, {"P", g.P}, {"Q", g.Q}, {"name", g.name()}});
      return emit({{"mu", mu}, {"generators", arr}, {"pass", true}}, c.out);
    }
    if (*cmd_cutout) {
      RandomSource rng(c.seed);
      CutoutReport rep = cutout_check(mu, rng);
      return emit({{"mu", mu}, {"failures", rep.failures}, {"pass", rep.pass}}, c.out);
    }
    if (*cmd_kostka) {
      json j = to_json(kostka_foulkes(lambda, mu));
      j["lambda"] = lambda;
      j["mu"] = mu;
      j["pass"] = true;
      return emit(j, c.out);
    }
    if (*cmd_bmu) {
      GradedCharacter gc = b_mu_graded_character(mu, max_degree);
      return emit({{"mu", mu}, {"classes", gc.classes}, {"dims", gc.dims},
                   {"values", gc.traces}, {"pass", true}},
                  c.out);
    }
    if (*cmd_level) {
      RandomSource rng(c.seed);
      LevelOneReport rep = level_one_check(mu, max_degree, rng);
      return emit(to_json(rep), c.out);
    }
    if (*cmd_all) return emit(verify::verify_all(c.seed), c.out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
