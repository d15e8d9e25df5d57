#pragma once

#include <json.hpp>

#include "schubert/demazure.hpp"
#include "schubert/filtration.hpp"
#include "schubert/level_one.hpp"
#include "schubert/qpoly.hpp"
#include "schubert/shuffle.hpp"

namespace schubert {

inline nlohmann::json to_json(const ShuffleRelation& rel) {
  nlohmann::json terms = nlohmann::json::array();
  for (const ShuffleTerm& t : rel.terms)
    terms.push_back({{"sign", t.sign}, {"tuple", t.tuple}});
  return {{"base", rel.base}, {"level", rel.level}, {"terms", terms}};
}

inline nlohmann::json to_json(const IndependenceCertificate& cert) {
  return {{"phi", cert.phi.position},
          {"tuples", cert.tuples},
          {"rank", cert.rank},
          {"expected", cert.tuples.size()},
          {"valid", cert.valid}};
}

inline nlohmann::json to_json(const ConjectureReport& rep) {
  nlohmann::json j = {{"mu", rep.mu},
                      {"m", rep.m},
                      {"filtration_dim", rep.filtration_dim},
                      {"match", rep.match_rows || rep.match_cols}};
  if (rep.match_rows || !rep.match_cols) {
    j["predicted"] = rep.predicted_rows;
    j["convention"] = "rows";
  } else {
    j["predicted"] = rep.predicted_cols;
    j["convention"] = "cols";
  }
  j["predicted_rows"] = rep.predicted_rows;
  j["predicted_cols"] = rep.predicted_cols;
  return j;
}

inline nlohmann::json to_json(const QPoly& p) { return {{"poly", p.coeffs()}}; }

inline nlohmann::json to_json(const LevelOneReport& rep) {
  return {{"mu", rep.mu},
          {"max_degree", rep.max_degree},
          {"lhs", rep.lhs},
          {"rhs", rep.rhs},
          {"pass", rep.pass}};
}

} // namespace schubert
