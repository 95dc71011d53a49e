#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pcard/error.hpp"

namespace pcard {

/// Saturating unsigned arithmetic for step counts and length bounds.
inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r < a ? std::numeric_limits<std::uint64_t>::max() : r;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

/// Polynomial with non-negative integer coefficients, constant term first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::uint64_t> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  static Polynomial identity() { return Polynomial({0, 1}); }
  static Polynomial monomial_plus(std::uint64_t coefficient, unsigned exponent, std::uint64_t constant) {
    std::vector<std::uint64_t> c(exponent + 1, 0);
    c[exponent] += coefficient;
    c[0] += constant;
    return Polynomial(std::move(c));
  }

  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  std::uint64_t operator()(std::uint64_t n) const {
    std::uint64_t r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = sat_add(sat_mul(r, n), *it);
    return r;
  }

  /// Least m with p(m) >= value, searching m in [0, limit]; nullopt-like
  /// sentinel limit+1 when none.
  std::uint64_t ceil_inverse(std::uint64_t value, std::uint64_t limit) const {
    for (std::uint64_t m = 0; m <= limit; ++m)
      if ((*this)(m) >= value) return m;
    return limit + 1;
  }

  /// Greatest m in [0, limit] with p(m) <= value, or -1 when p(0) > value.
  std::int64_t floor_inverse(std::uint64_t value, std::uint64_t limit) const {
    std::int64_t best = -1;
    for (std::uint64_t m = 0; m <= limit; ++m) {
      if ((*this)(m) <= value) best = static_cast<std::int64_t>(m);
      else if (degree() >= 1) break;
    }
    return best;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coeffs_[i]);
    }
    if (coeffs_.empty()) s += "0";
    return s + "]";
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<std::uint64_t> coeffs_;
};

}  // namespace pcard
