// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "schubert/verify.hpp"

namespace {

std::string run_cli(const std::string& args) {
  std::string cmd = std::string(SCHUBERT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

} // namespace

int main() {
  using schubert::verify::kDefaultSeed;
  struct Criterion {
    const char* name;
    std::function<bool()> run;
  };
  auto pass_of = [](nlohmann::json j) { return j.at("pass").get<bool>(); };
  std::vector<Criterion> criteria = {
      {"counting formulas", [&] { return pass_of(schubert::verify::counting_formulas()); }},
      {"shuffle vanishing",
       [&] { return pass_of(schubert::verify::shuffle_vanishing(kDefaultSeed)); }},
      {"straightening correctness",
       [&] { return pass_of(schubert::verify::straightening_correctness(kDefaultSeed)); }},
      {"basis certification",
       [&] { return pass_of(schubert::verify::basis_certification(kDefaultSeed)); }},
      {"degree-two relations",
       [&] { return pass_of(schubert::verify::degree_two_relations(kDefaultSeed)); }},
      {"orbit order", [&] { return pass_of(schubert::verify::orbit_order()); }},
      {"filtration conjecture",
       [&] { return pass_of(schubert::verify::filtration_conjecture(kDefaultSeed)); }},
      {"orbit equation cutout",
       [&] { return pass_of(schubert::verify::orbit_equation_cutout(kDefaultSeed)); }},
      {"kostka oracle pair",
       [&] { return pass_of(schubert::verify::kostka_oracle_pair()); }},
      {"level-one identity",
       [&] { return pass_of(schubert::verify::level_one_identity(kDefaultSeed)); }},
      {"t-stability probe",
       [&] { return pass_of(schubert::verify::shuffle_conjecture_probe(kDefaultSeed)); }},
      {"determinism", [&] {
         std::string a = run_cli("verify-all --seed 20240817");
         std::string b = run_cli("verify-all --seed 20240817");
         return !a.empty() && a == b;
       }},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    bool ok = false;
    std::string note;
    try {
      ok = criteria[k].run();
    } catch (const std::exception& e) {
      note = std::string(" [exception: ") + e.what() + "]";
    }
    if (!ok) ++failures;
    std::printf("criterion %2zu (%s): %s%s\n", k + 1, criteria[k].name,
                ok ? "PASS" : "FAIL", note.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
