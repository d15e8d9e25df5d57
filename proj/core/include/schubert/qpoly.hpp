#pragma once

#include <string>
#include <vector>

namespace schubert {

// Polynomial in q with integer coefficients, coefficient k at q^k.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(std::vector<long> coeffs) : c_(std::move(coeffs)) { trim(); }
  static QPoly monomial(int exp, long coeff = 1) {
    std::vector<long> c(static_cast<std::size_t>(exp) + 1, 0);
    c.back() = coeff;
    return QPoly(std::move(c));
  }

  const std::vector<long>& coeffs() const { return c_; }
  long coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0

  long eval_at_one() const {
    long s = 0;
    for (long x : c_) s += x;
    return s;
  }

  QPoly& add_monomial(int exp, long coeff = 1) {
    if (static_cast<std::size_t>(exp) >= c_.size()) c_.resize(static_cast<std::size_t>(exp) + 1, 0);
    c_[static_cast<std::size_t>(exp)] += coeff;
    trim();
    return *this;
  }

  QPoly operator+(const QPoly& o) const {
    std::vector<long> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) + o.coeff(k);
    return QPoly(std::move(out));
  }

  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      if (!s.empty()) s += " + ";
      s += std::to_string(c_[k]) + (k ? "*q^" + std::to_string(k) : "");
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<long> c_;
};

} // namespace schubert
