#pragma once

#include <cstdint>
#include <vector>

#include "schubert/rational.hpp"

namespace schubert {

// Rank computations mod a word-size prime.  Used where exact rational
// elimination would be too slow (large evaluation matrices); a mod-p rank
// never exceeds the rational rank, so it has the same one-sided soundness
// as sampling itself.  Callers run two primes and keep the max.
inline constexpr std::uint64_t kRankPrimes[2] = {2147483647ULL, 2147483629ULL};

inline std::uint64_t mod_reduce(const Int& x, std::uint64_t p) {
  Int r = x % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// Incremental row-echelon basis mod p.  offer() reduces the vector against
// the pivots found so far and either absorbs it (rank grows) or reports
// linear dependence.
class EchelonModP {
public:
  explicit EchelonModP(std::uint64_t p) : p_(p) {}

  std::size_t rank() const { return rows_.size(); }

  // Returns true if v was independent of the current span (and keeps it).
  // v is destroyed.  All vectors must share one length.
  bool offer(std::vector<std::uint64_t>& v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::uint64_t c = v[pivots_[k]];
      if (c == 0) continue;
      const auto& r = rows_[k];
      for (std::size_t j = 0; j < v.size(); ++j) {
        std::uint64_t t = mulmod(c, r[j], p_);
        v[j] = (v[j] >= t) ? v[j] - t : v[j] + p_ - t;
      }
    }
    std::size_t piv = v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) { piv = j; break; }
    if (piv == v.size()) return false;
    std::uint64_t inv = invmod(v[piv], p_);
    for (auto& x : v) x = mulmod(x, inv, p_);
    pivots_.push_back(piv);
    rows_.push_back(std::move(v));
    return true;
  }

private:
  std::uint64_t p_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

} // namespace schubert
