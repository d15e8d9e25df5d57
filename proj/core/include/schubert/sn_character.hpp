#pragma once

#include <vector>

#include "schubert/partition.hpp"

namespace schubert {

// Irreducible character value chi^lambda(rho) by the Murnaghan-Nakayama
// border-strip recursion.
long mn_character(const Partition& lambda, const Partition& rho);

// Values on all conjugacy classes, in partitions_of(n) order.
std::vector<long> sn_character(const Partition& lambda);

// |conjugacy class of cycle type rho| inside S_n.
unsigned long long class_size(const Partition& rho);

// (1/n!) sum over classes |C_rho| a(rho) b(rho)
long character_inner_product(int n, const std::vector<long>& a, const std::vector<long>& b);

} // namespace schubert
