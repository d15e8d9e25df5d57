#pragma once

#include <vector>

namespace schubert {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int weight(const Partition& p);  // sum of parts

Partition conjugate(const Partition& p);

// Dominance: all partial sums of a <= those of b.  Requires |a| = |b|.
bool dominance_leq(const Partition& a, const Partition& b);

// All partitions of n, in a fixed (reverse-lex, largest-part-first) order.
std::vector<Partition> partitions_of(int n);

// n(p) = sum (i-1) p_i, the top degree of the associated graded quotient.
int n_statistic(const Partition& p);

} // namespace schubert
