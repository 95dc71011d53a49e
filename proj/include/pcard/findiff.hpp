#pragma once

// Languages that differ from a base by finitely many strings: the shift
// function relating their ranks, transfer of countability, and hard-coded
// witnesses between finite variants of a common base.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pcard/ranking.hpp"
#include "pcard/witness.hpp"

namespace pcard {

/// B = (A ∪ P) \ N with P disjoint from A and N ⊆ A.
struct FiniteDiff {
  Language base;
  std::vector<Str> added;    // P
  std::vector<Str> removed;  // N

  long long offset() const { return static_cast<long long>(added.size()) - static_cast<long long>(removed.size()); }

  std::size_t max_length() const {
    std::size_t m = 0;
    for (const auto& z : added) m = std::max(m, z.size());
    for (const auto& z : removed) m = std::max(m, z.size());
    return m;
  }
};

/// Sorts and deduplicates P and N and checks P ∩ A = ∅, N ⊆ A.
inline FiniteDiff make_finite_diff(Language base, std::vector<Str> added, std::vector<Str> removed) {
  auto norm = [](std::vector<Str>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  norm(added);
  norm(removed);
  for (const auto& z : added) {
    if (z.alphabet() != base.alphabet()) throw PreconditionError("findiff: " + format(z) + " has the wrong alphabet");
    if (base.contains(z)) throw InvariantBreach("findiff: added string " + format(z) + " already in " + base.name());
  }
  for (const auto& z : removed) {
    if (z.alphabet() != base.alphabet()) throw PreconditionError("findiff: " + format(z) + " has the wrong alphabet");
    if (!base.contains(z)) throw InvariantBreach("findiff: removed string " + format(z) + " not in " + base.name());
  }
  return FiniteDiff{std::move(base), std::move(added), std::move(removed)};
}

/// Piecewise-constant σ with rk_B(x) = rk_A(x) + σ(x).
struct ShiftFn {
  std::vector<Str> breakpoints;    // z_1 <= ... <= z_m
  std::vector<long long> values;   // values[i] on [z_i, z_{i+1}); values[0] before z_1

  long long operator()(const Str& x) const {
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
    return values[static_cast<std::size_t>(it - breakpoints.begin())];
  }
};

/// σ(x) = σ(x-1) + B(x) - A(x), hard-coded at the points of P ∪ N.
inline ShiftFn shift_function(const FiniteDiff& d) {
  ShiftFn s;
  std::vector<std::pair<Str, int>> pts;
  for (const auto& z : d.added) pts.emplace_back(z, +1);
  for (const auto& z : d.removed) pts.emplace_back(z, -1);
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  s.values.push_back(0);
  for (const auto& [z, delta] : pts) {
    s.breakpoints.push_back(z);
    s.values.push_back(s.values.back() + delta);
  }
  return s;
}

inline std::string findiff_name(const FiniteDiff& d) {
  return "findiff(" + d.base.name() + ", " + gallery::detail::list_literal(d.added) + ", " +
         gallery::detail::list_literal(d.removed) + ")";
}

/// The language (A ∪ P) \ N, with closed forms inherited from A.
inline Language derived_language(const FiniteDiff& d) {
  auto P = std::make_shared<const std::set<Str>>(d.added.begin(), d.added.end());
  auto N = std::make_shared<const std::set<Str>>(d.removed.begin(), d.removed.end());
  const Language A = d.base;
  Language::ClosedForms closed;
  auto count_le = [](const std::set<Str>& s, std::size_t n) {
    long long k = 0;
    for (const auto& z : s)
      if (z.size() <= n) ++k;
    return k;
  };
  if (A.has_closed_census()) {
    closed.census = [A, P, N, count_le](std::size_t n) {
      return A.closed().census(n) + count_le(*P, n) - count_le(*N, n);
    };
  }
  if (A.has_closed_rank()) {
    auto sigma = std::make_shared<const ShiftFn>(shift_function(d));
    closed.rank = [A, sigma](const Str& x) { return A.closed().rank(x) + (*sigma)(x); };
  }
  if (A.closed().members) {
    closed.members = [A, P, N](std::size_t n) {
      std::vector<Str> out;
      for (auto& x : A.closed().members(n))
        if (!N->count(x)) out.push_back(x);
      for (const auto& z : *P)
        if (z.size() <= n) out.push_back(z);
      std::sort(out.begin(), out.end());
      return out;
    };
  }
  return Language(
      findiff_name(d), A.alphabet(),
      [A, P, N](const Str& x, Clock& c) {
        c.charge(1);
        if (P->count(x)) return true;
        if (N->count(x)) return false;
        return A.member_on(x, c);
      },
      std::move(closed), A.fuel_limit());
}

/// Given E : Σ* ≈ A and B = (A ∪ P) \ N, builds Σ* ≈ B: enumerate P first,
/// then E shifted by |P|, skipping the indices that land in N.
inline Equipollence transfer_countability(const Equipollence& E, const FiniteDiff& d) {
  if (!same_language(E.B, d.base)) {
    throw PreconditionError("transfer_countability: witness codomain " + E.B.name() + " is not " + d.base.name());
  }
  if (E.A.name() != gallery::sigma_star(E.A.alphabet()).name()) {
    throw PreconditionError("transfer_countability: witness must start from sigma_star");
  }
  const Alphabet a = d.base.alphabet();
  const auto P = std::make_shared<const std::vector<Str>>(d.added);
  const Nat s = Nat(P->size());
  // J = indices of g' that hit N.
  std::vector<Nat> J;
  for (const auto& z : d.removed) {
    auto pre = E.backward(z);
    if (!pre || E.forward(*pre) != std::optional<Str>(z)) {
      throw PreconditionError("transfer_countability: removed string " + format(z) + " is not in the image of the witness");
    }
    J.push_back(s + rank(*pre));
  }
  std::sort(J.begin(), J.end());
  const auto Jp = std::make_shared<const std::vector<Nat>>(J);

  std::size_t delta = 2;
  for (const auto& z : d.added) delta = std::max(delta, z.size() + 2);
  delta = std::max(delta, unrank(Nat(J.size() + P->size()), a).size() + 2);
  const PartialMap f = E.forward, finv = E.backward;

  PartialMap fwd(
      "findiff_forward(" + E.name + ")", a, a,
      [P, Jp, s, f, a](const Str& x, Clock& clock) -> std::optional<Str> {
        clock.charge(x.size());
        Nat m = rank(x);
        for (const auto& j : *Jp)
          if (j <= m) ++m;
        if (m < s) {
          const Str& y = (*P)[static_cast<std::size_t>(m)];
          clock.charge(y.size());
          return y;
        }
        return f.call(unrank(m - s, a), clock);
      },
      bound_plus(bound_after(f.bound(), linear(delta)), linear(delta + 2)));
  PartialMap bwd(
      "findiff_backward(" + E.name + ")", a, a,
      [P, Jp, s, finv, a](const Str& y, Clock& clock) -> std::optional<Str> {
        clock.charge(y.size());
        Nat m;
        auto it = std::find(P->begin(), P->end(), y);
        if (it != P->end()) {
          m = Nat(it - P->begin());
        } else {
          auto z = finv.call(y, clock);
          if (!z) return std::nullopt;
          m = s + rank(*z);
        }
        Nat i = m;
        for (const auto& j : *Jp) {
          if (j == m) return std::nullopt;
          if (j < m) --i;
        }
        Str x = unrank(i, a);
        clock.charge(x.size());
        return x;
      },
      bound_plus(finv.bound(), linear(delta + 2)));
  return make_equipollence("transfer(" + E.name + ", " + findiff_name(d) + ")", fwd, bwd, E.A, derived_language(d));
}

class OffsetMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

namespace detail {

inline std::size_t findiff_n0(const FiniteDiff& d1, const FiniteDiff& d2) {
  if (!same_language(d1.base, d2.base)) throw PreconditionError("findiff: the two differences need the same base");
  bool any = !d1.added.empty() || !d1.removed.empty() || !d2.added.empty() || !d2.removed.empty();
  return any ? 1 + std::max(d1.max_length(), d2.max_length()) : 0;
}

/// Hard-coded map on Σ^{<=n0} pairing members in length-lex order; identity above n0.
inline PartialMap findiff_table_map(std::string name, Alphabet a, std::size_t n0, const std::vector<Str>& from,
                                    const std::vector<Str>& to) {
  auto table = std::make_shared<std::map<Str, Str>>();
  for (std::size_t i = 0; i < from.size(); ++i) table->emplace(from[i], to[i]);
  return PartialMap(
      std::move(name), a, a,
      [table, n0](const Str& x, Clock& clock) -> std::optional<Str> {
        clock.charge(x.size());
        if (x.size() > n0) {
          clock.charge(x.size());
          return x;
        }
        auto it = table->find(x);
        if (it == table->end()) return std::nullopt;
        clock.charge(it->second.size());
        return it->second;
      },
      linear(n0 + 3));
}

}  // namespace detail

/// B ≈ B' for finite variants of one base, when |P|-|N| = |P'|-|N'|.
inline Equipollence findiff_witness(const FiniteDiff& d1, const FiniteDiff& d2) {
  if (d1.offset() != d2.offset()) {
    throw OffsetMismatch("cardinality offsets differ: " + std::to_string(d1.offset()) + " vs " +
                         std::to_string(d2.offset()) + "; no witness via this construction");
  }
  const std::size_t n0 = detail::findiff_n0(d1, d2);
  Language B1 = derived_language(d1), B2 = derived_language(d2);
  auto s1 = enumerate_upto(B1, n0), s2 = enumerate_upto(B2, n0);
  if (s1.size() != s2.size()) throw InvariantBreach("findiff_witness: finite parts differ in size");
  const Alphabet a = d1.base.alphabet();
  auto f = detail::findiff_table_map("findiff_table(" + B1.name() + ", " + B2.name() + ")", a, n0, s1, s2);
  auto g = detail::findiff_table_map("findiff_table(" + B2.name() + ", " + B1.name() + ")", a, n0, s2, s1);
  return make_equipollence("findiff_w(" + B1.name() + ", " + B2.name() + ")", f.with_inverse(g), g.with_inverse(f),
                           B1, B2);
}

/// Injection B -> B' when |P|-|N| <= |P'|-|N'|.
inline PartialMap findiff_injection(const FiniteDiff& d1, const FiniteDiff& d2) {
  if (d1.offset() > d2.offset()) {
    throw OffsetMismatch("offset " + std::to_string(d1.offset()) + " exceeds " + std::to_string(d2.offset()) +
                         "; no injection via this construction");
  }
  const std::size_t n0 = detail::findiff_n0(d1, d2);
  Language B1 = derived_language(d1), B2 = derived_language(d2);
  auto s1 = enumerate_upto(B1, n0), s2 = enumerate_upto(B2, n0);
  if (s1.size() > s2.size()) throw InvariantBreach("findiff_injection: domain part larger than target part");
  s2.erase(s2.begin() + static_cast<std::ptrdiff_t>(s1.size()), s2.end());
  return detail::findiff_table_map("findiff_inj(" + B1.name() + ", " + B2.name() + ")", d1.base.alphabet(), n0, s1, s2)
      .with_domain(B1);
}

}  // namespace pcard
