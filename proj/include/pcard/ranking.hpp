#pragma once

// Strong ranks, rank-based witnesses, induced orderings, and census
// comparisons between languages.

#include <cmath>
#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcard/polynomial.hpp"
#include "pcard/witness.hpp"

namespace pcard {

/// rk_L(x) = |{y in L : y <=_lex x}|.
inline Nat strong_rank(const Language& L, const Str& x) {
  if (L.has_closed_rank()) return L.closed().rank(x);
  if (rank(x) + 1 > kEnumerationGuard) {
    throw InfeasibleError("strong_rank infeasible: " + L.name() + " at " + format(x));
  }
  Nat count = 0;
  for_each_upto(L.alphabet(), x.size(), [&](const Str& y) {
    if (y <= x && L.contains(y)) ++count;
  });
  return count;
}

class RankNotFound : public Error {
 public:
  RankNotFound(const Nat& r, std::size_t nmax, const Nat& reached)
      : Error("no member of rank " + r.str() + " within length " + std::to_string(nmax) + " (members 1.." +
              reached.str() + " lie there)"),
        low(reached),
        high(r) {}
  Nat low;   // largest rank present up to nmax
  Nat high;  // requested rank
};

namespace detail {

/// Binary search over strings of length `len` for the least s with
/// rk_L(s) >= r; charges one unit per symbol of each probe.
inline Str rank_search(const Language& L, const Nat& r, std::size_t len, std::uint64_t* steps) {
  Alphabet a = L.alphabet();
  Nat lo = rank(Str(a, std::string(len, a.symbol(0))));
  Nat hi = lo + count_exact(a, len) - 1;
  while (lo < hi) {
    Nat mid = (lo + hi) / 2;
    Str probe = unrank(mid, a);
    if (steps) *steps += probe.size() + 1;
    if (strong_rank(L, probe) >= r) hi = mid;
    else lo = mid + 1;
  }
  return unrank(lo, a);
}

}  // namespace detail

/// The member x of L with rk_L(x) = r, looking no further than length nmax.
inline Str rank_inverse(const Language& L, const Nat& r, std::size_t nmax, std::uint64_t* steps = nullptr) {
  if (r < 1) throw PreconditionError("rank_inverse: ranks inside a language start at 1");
  if (!L.has_closed_rank()) {
    auto members = enumerate_upto(L, nmax);
    if (Nat(members.size()) < r) throw RankNotFound(r, nmax, Nat(members.size()));
    return members[static_cast<std::size_t>(r - 1)];
  }
  Alphabet a = L.alphabet();
  for (std::size_t len = 0; len <= nmax; ++len) {
    if (steps) *steps += len + 1;
    Str last = Str(a, std::string(len, a.symbol(a.size() - 1)));
    if (strong_rank(L, last) >= r) return detail::rank_search(L, r, len, steps);
  }
  Str last = Str(a, std::string(nmax, a.symbol(a.size() - 1)));
  throw RankNotFound(r, nmax, strong_rank(L, last));
}

/// L ≈ Σ* via x -> σ_{rk_L(x) - 1}, with inverse by binary search.
/// Requires a member at length `probe_len` as evidence that L is infinite.
inline Equipollence rank_witness(const Language& L, std::size_t probe_len = 8) {
  Alphabet a = L.alphabet();
  {
    Str first(a, std::string(probe_len, a.symbol(0)));
    Str last(a, std::string(probe_len, a.symbol(a.size() - 1)));
    Nat below = first.size() == 0 ? Nat(0) : strong_rank(L, unrank(rank(first) - 1, a));
    if (strong_rank(L, last) == below) {
      throw PreconditionError("rank_witness: " + L.name() + " has no member of length " + std::to_string(probe_len) +
                              "; it looks empty or finite in range");
    }
  }
  PartialMap fwd(
      "rank_forward(" + L.name() + ")", a, a,
      [L, a](const Str& x, Clock& clock) -> std::optional<Str> {
        clock.charge(x.size());
        Nat r = strong_rank(L, x);
        if (r < 1) return std::nullopt;
        Str y = unrank(r - 1, a);
        clock.charge(y.size());
        return y;
      },
      TimeBound{4, 1});
  PartialMap bwd(
      "rank_backward(" + L.name() + ")", a, a,
      [L](const Str& s, Clock& clock) -> std::optional<Str> {
        std::uint64_t steps = 0;
        try {
          Str x = rank_inverse(L, rank(s) + 1, 2 * s.size() + 8, &steps);
          clock.charge(steps + x.size());
          return x;
        } catch (const RankNotFound&) {
          clock.charge(steps);
          return std::nullopt;
        }
      },
      TimeBound{2000, 2});
  return make_equipollence("rank_witness(" + L.name() + ")", fwd.with_inverse(bwd), bwd.with_inverse(fwd), L,
                           gallery::sigma_star(a));
}

/// A total order on the members of a language.
struct Ordering {
  std::string name;
  Language domain;
  std::function<std::strong_ordering(const Str&, const Str&)> compare;
  std::function<Nat(const Str&)> weak_rank;  // 1-based position, when known
};

/// x ≺ y iff f(x) <_lex f(y), for E : L ≈ Σ*.
inline Ordering induced_ordering(const Equipollence& E) {
  auto image = [E](const Str& x) {
    auto y = E.forward(x);
    if (!y) throw InvariantBreach("induced ordering: forward undefined at member " + format(x));
    return *y;
  };
  return Ordering{"induced(" + E.name + ")", E.A,
                  [image](const Str& x, const Str& y) { return image(x) <=> image(y); },
                  [image](const Str& x) { return rank(image(x)) + 1; }};
}

struct OrderingCheck {
  bool total = true;          // every pair comparable, EQ exactly on equal inputs
  bool antisymmetric = true;  // compare(x, y) = -compare(y, x)
  bool transitive = true;
  std::optional<std::pair<Str, Str>> offending;
  /// Least k with |x| <= |y|^k + k whenever x ≺ y, over tested members.
  unsigned length_exponent = 0;
  std::size_t members = 0;
};

inline OrderingCheck check_ordering(const Ordering& ord, std::size_t n) {
  OrderingCheck out;
  auto xs = enumerate_upto(ord.domain, n);
  out.members = xs.size();
  const std::size_t m = xs.size();
  std::vector<std::vector<int>> cmp(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto c = ord.compare(xs[i], xs[j]);
      cmp[i][j] = c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
  }
  auto flag = [&](bool& which, std::size_t i, std::size_t j) {
    if (which) out.offending = std::make_pair(xs[i], xs[j]);
    which = false;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if ((cmp[i][j] == 0) != (i == j)) flag(out.total, i, j);
      if (cmp[i][j] != -cmp[j][i]) flag(out.antisymmetric, i, j);
      if (cmp[i][j] < 0) {
        while (xs[i].size() > sat_add(sat_pow(xs[j].size(), out.length_exponent), out.length_exponent)) {
          ++out.length_exponent;
        }
        for (std::size_t k = 0; k < m; ++k) {
          if (cmp[j][k] < 0 && cmp[i][k] >= 0) flag(out.transitive, i, k);
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Census comparisons.

/// Census values for one language, closed-form when available and otherwise
/// from a single exhaustive pass up to `horizon`.
class CensusOracle {
 public:
  explicit CensusOracle(Language L, std::size_t brute_horizon) : L_(std::move(L)) {
    if (!L_.has_closed_census()) {
      horizon_ = brute_horizon;
      while (horizon_ > 0 && !enumeration_feasible(L_.alphabet(), horizon_)) --horizon_;
      table_.assign(horizon_ + 1, 0);
      for_each_upto(L_.alphabet(), horizon_, [&](const Str& x) {
        if (L_.contains(x)) ++table_[x.size()];
      });
      for (std::size_t i = 1; i < table_.size(); ++i) table_[i] += table_[i - 1];
    }
  }

  /// Largest length at which the census is known.
  std::size_t horizon() const { return horizon_; }

  Nat operator()(std::size_t n) const {
    if (L_.has_closed_census()) {
      auto it = cache_.find(n);
      if (it != cache_.end()) return it->second;
      return cache_[n] = L_.closed().census(n);
    }
    if (n > horizon_) throw InfeasibleError("census of " + L_.name() + " beyond " + std::to_string(horizon_));
    return table_[n];
  }

  const Language& language() const { return L_; }

 private:
  Language L_;
  std::size_t horizon_ = std::numeric_limits<std::size_t>::max();
  std::vector<Nat> table_;
  mutable std::map<std::size_t, Nat> cache_;
};

enum class RelVerdict { Pass, Fail, Inconclusive };

inline std::string to_string(RelVerdict v) {
  switch (v) {
    case RelVerdict::Pass: return "pass";
    case RelVerdict::Fail: return "fail";
    case RelVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct PolyRelRow {
  std::size_t n;
  Nat ca, cb;
  RelVerdict a_into_b;  // c_A(n) <= c_B(p(n))
  RelVerdict b_into_a;  // c_B(n) <= c_A(q(n))
  RelVerdict combined() const {
    if (a_into_b == RelVerdict::Fail || b_into_a == RelVerdict::Fail) return RelVerdict::Fail;
    if (a_into_b == RelVerdict::Inconclusive || b_into_a == RelVerdict::Inconclusive) return RelVerdict::Inconclusive;
    return RelVerdict::Pass;
  }
};

struct PolyRelReport {
  std::vector<PolyRelRow> rows;
  RelVerdict overall() const {
    RelVerdict v = RelVerdict::Pass;
    for (const auto& r : rows) {
      if (r.combined() == RelVerdict::Fail) return RelVerdict::Fail;
      if (r.combined() == RelVerdict::Inconclusive) v = RelVerdict::Inconclusive;
    }
    return v;
  }
};

namespace detail {

/// c(n) <= d(m), where d is only known up to its horizon. Census is
/// monotone, so success at a clipped length still proves the inequality.
inline RelVerdict census_leq(const Nat& lhs, const CensusOracle& d, std::uint64_t m) {
  const bool clipped = m > d.horizon();
  const std::size_t at = clipped ? d.horizon() : static_cast<std::size_t>(m);
  if (lhs <= d(at)) return RelVerdict::Pass;
  return clipped ? RelVerdict::Inconclusive : RelVerdict::Fail;
}

}  // namespace detail

inline PolyRelReport census_poly_related(const CensusOracle& A, const CensusOracle& B, const Polynomial& p,
                                         const Polynomial& q, std::size_t nmax) {
  PolyRelReport rep;
  for (std::size_t n = 0; n <= nmax && n <= A.horizon() && n <= B.horizon(); ++n) {
    PolyRelRow row{n, A(n), B(n), RelVerdict::Pass, RelVerdict::Pass};
    row.a_into_b = detail::census_leq(row.ca, B, p(n));
    row.b_into_a = detail::census_leq(row.cb, A, q(n));
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

inline PolyRelReport census_poly_related(const Language& A, const Language& B, const Polynomial& p,
                                         const Polynomial& q, std::size_t nmax, std::size_t brute_horizon = 16) {
  return census_poly_related(CensusOracle(A, brute_horizon), CensusOracle(B, brute_horizon), p, q, nmax);
}

/// log2 of a positive big integer, to double precision.
inline double log2_nat(const Nat& c) {
  const unsigned top = boost::multiprecision::msb(c);
  const unsigned shift = top > 52 ? top - 52 : 0;
  return std::log2((c >> shift).convert_to<double>()) + shift;
}

struct DensityReport {
  bool passed = false;
  double a = 0;  // empirical: min over tested n of log2(c_L(n)) / n^c
  std::vector<std::pair<std::size_t, double>> per_n;
};

/// Empirical test of c_L(n) >= 2^(a n^c) for some a > 0 over 2 <= n <= nmax.
inline DensityReport exp_density_check(const Language& L, double c_exp, std::size_t nmax) {
  DensityReport rep;
  rep.a = std::numeric_limits<double>::infinity();
  for (std::size_t n = 2; n <= nmax; ++n) {
    Nat c = census(L, n);
    double lg = c < 1 ? -std::numeric_limits<double>::infinity() : log2_nat(c);
    double v = lg / std::pow(static_cast<double>(n), c_exp);
    rep.per_n.emplace_back(n, v);
    rep.a = std::min(rep.a, v);
  }
  if (rep.per_n.empty()) rep.a = 0;
  rep.passed = rep.a > 0;
  return rep;
}

}  // namespace pcard
