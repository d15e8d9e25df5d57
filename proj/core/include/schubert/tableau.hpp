#pragma once

#include <vector>

#include "schubert/partition.hpp"
#include "schubert/qpoly.hpp"

namespace schubert {

struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;  // semistandard filling
};

// All semistandard tableaux of the given shape and content
// (content[i] = multiplicity of the letter i+1).
std::vector<Tableau> ssyt(const Partition& shape, const std::vector<int>& content);

// Lascoux-Schützenberger charge of the row reading word (bottom row first).
// Content must be a partition ("content must be a partition" otherwise).
int charge(const Tableau& t);

// sum over SSYT(lambda, mu) of q^charge — the charge-normalized
// Kostka-Foulkes polynomial (K~_{lambda,lambda} = 1, exponents >= 0).
QPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

} // namespace schubert
