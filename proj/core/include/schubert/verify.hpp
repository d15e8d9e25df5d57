#pragma once

#include <cstdint>

#include <json.hpp>

namespace schubert::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240817;

// Each driver returns {"name": ..., "pass": bool, ...detail}.
nlohmann::json counting_formulas();
nlohmann::json shuffle_vanishing(std::uint64_t seed);
nlohmann::json straightening_correctness(std::uint64_t seed);
nlohmann::json basis_certification(std::uint64_t seed);
nlohmann::json degree_two_relations(std::uint64_t seed);
nlohmann::json orbit_order();
nlohmann::json filtration_conjecture(std::uint64_t seed);
nlohmann::json orbit_equation_cutout(std::uint64_t seed);
nlohmann::json kostka_oracle_pair();
nlohmann::json level_one_identity(std::uint64_t seed);
nlohmann::json shuffle_conjecture_probe(std::uint64_t seed);

// All of the above, checks sorted by name, with "schema": 1 and an
// aggregate "pass".  Byte-identical across runs at a fixed seed.
nlohmann::json verify_all(std::uint64_t seed);

} // namespace schubert::verify
