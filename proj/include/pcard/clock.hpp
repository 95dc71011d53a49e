#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "pcard/polynomial.hpp"

namespace pcard {

/// Thrown by Clock::charge when the budget is exceeded. Evaluators let it
/// propagate; the owning Language or PartialMap turns it into a verdict.
struct OutOfFuel {};

/// Step budget for one evaluation. Units are evaluator-defined; the gallery
/// charges one unit per symbol read or written.
class Clock {
 public:
  explicit Clock(std::uint64_t budget) : budget_(budget) {}

  void charge(std::uint64_t units) {
    used_ = sat_add(used_, units);
    if (used_ > budget_) throw OutOfFuel{};
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
};

/// t(n) = c * n^e + c, the declared clock of a partial map.
struct TimeBound {
  std::uint64_t c = 1;
  unsigned e = 1;

  std::uint64_t operator()(std::uint64_t n) const { return sat_add(sat_mul(c, sat_pow(n, e)), c); }

  Polynomial as_polynomial() const { return Polynomial::monomial_plus(c, e, c); }

  std::string to_string() const { return std::to_string(c) + "*n^" + std::to_string(e) + "+" + std::to_string(c); }

  friend bool operator==(const TimeBound&, const TimeBound&) = default;
};

/// Linear bound c*n + c.
inline TimeBound linear(std::uint64_t c) { return TimeBound{std::max<std::uint64_t>(c, 1), 1}; }

/// Dominates t1(n) + t2(n).
inline TimeBound bound_plus(TimeBound a, TimeBound b) {
  return TimeBound{sat_add(a.c, b.c), std::max(a.e, b.e)};
}

/// Dominates max(t1(n), t2(n)).
inline TimeBound bound_max(TimeBound a, TimeBound b) {
  return TimeBound{std::max(a.c, b.c), std::max(a.e, b.e)};
}

/// Dominates k * t(n).
inline TimeBound bound_scale(TimeBound t, std::uint64_t k) { return TimeBound{sat_mul(t.c, std::max<std::uint64_t>(k, 1)), t.e}; }

/// Dominates outer(inner(n)). With M = max(n, 1) we have inner(n) <= 2a M^e,
/// so outer(inner(n)) <= b (2a)^e' M^(e e') + b.
inline TimeBound bound_after(TimeBound outer, TimeBound inner) {
  std::uint64_t coeff = sat_add(sat_mul(outer.c, sat_pow(sat_mul(2, inner.c), outer.e)), outer.c);
  return TimeBound{coeff, inner.e * outer.e};
}

/// Dominates (n + 2) * t(n): at most n + 2 rounds of a t-bounded step.
inline TimeBound bound_rounds(TimeBound per_round) {
  return TimeBound{sat_mul(6, per_round.c), per_round.e + 1};
}

/// Cost of running `first`, then `second` on its output, plus a linear overhead.
inline TimeBound bound_sequence(TimeBound first, TimeBound second, std::uint64_t overhead = 2) {
  return bound_plus(bound_plus(first, bound_after(second, first)), linear(overhead));
}

}  // namespace pcard
