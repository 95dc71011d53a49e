#pragma once

// Languages as named, step-budgeted membership evaluators, plus the gallery
// of concrete sets used throughout the toolkit.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcard/clock.hpp"
#include "pcard/error.hpp"
#include "pcard/strings.hpp"

namespace pcard {

inline constexpr std::uint64_t kDefaultFuel = 10'000'000;

/// Exhaustive enumeration is refused beyond this many strings.
inline const Nat kEnumerationGuard = Nat(1) << 26;

enum class Verdict { NotMember, Member, Exhausted };

struct MembershipResult {
  Verdict verdict;
  std::uint64_t steps;
};

class Language {
 public:
  using Decider = std::function<bool(const Str&, Clock&)>;
  using CensusFn = std::function<Nat(std::size_t)>;
  using RankFn = std::function<Nat(const Str&)>;
  using EnumFn = std::function<std::vector<Str>(std::size_t)>;

  /// Optional closed forms. `census(n)` counts members of length <= n;
  /// `rank(x)` counts members <=_lex x; `members(n)` lists members of length
  /// <= n for sparse languages.
  struct ClosedForms {
    CensusFn census;
    RankFn rank;
    EnumFn members;
  };

  Language(std::string name, Alphabet alphabet, Decider decider, ClosedForms closed = {},
           std::uint64_t fuel = kDefaultFuel)
      : impl_(std::make_shared<Impl>(Impl{std::move(name), alphabet, std::move(decider), std::move(closed), fuel})) {}

  const std::string& name() const { return impl_->name; }
  Alphabet alphabet() const { return impl_->alphabet; }
  std::uint64_t fuel_limit() const { return impl_->fuel; }

  Language with_fuel(std::uint64_t fuel) const {
    Language copy = *this;
    auto impl = std::make_shared<Impl>(*impl_);
    impl->fuel = fuel;
    copy.impl_ = std::move(impl);
    return copy;
  }

  MembershipResult decide(const Str& x) const {
    check_alphabet(x);
    Clock clock(impl_->fuel);
    try {
      bool in = impl_->decider(x, clock);
      return {in ? Verdict::Member : Verdict::NotMember, clock.used()};
    } catch (const OutOfFuel&) {
      return {Verdict::Exhausted, clock.used()};
    }
  }

  /// Membership as a boolean; fuel exhaustion raises FuelExhausted.
  bool contains(const Str& x) const {
    auto r = decide(x);
    if (r.verdict == Verdict::Exhausted) {
      throw FuelExhausted("membership of " + format(x) + " in " + name() + " exhausted " +
                          std::to_string(impl_->fuel) + " steps");
    }
    return r.verdict == Verdict::Member;
  }

  /// Membership evaluated on a caller's clock, for composite evaluators.
  bool member_on(const Str& x, Clock& clock) const {
    check_alphabet(x);
    return impl_->decider(x, clock);
  }

  const ClosedForms& closed() const { return impl_->closed; }
  bool has_closed_census() const { return static_cast<bool>(impl_->closed.census); }
  bool has_closed_rank() const { return static_cast<bool>(impl_->closed.rank); }

 private:
  void check_alphabet(const Str& x) const {
    if (x.alphabet() != impl_->alphabet) {
      throw PreconditionError("string " + format(x) + " is not over the alphabet of " + name());
    }
  }

  struct Impl {
    std::string name;
    Alphabet alphabet;
    Decider decider;
    ClosedForms closed;
    std::uint64_t fuel;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Same object identity is decided by name; extensional equality is not decidable.
inline bool same_language(const Language& a, const Language& b) { return a.name() == b.name(); }

inline bool enumeration_feasible(Alphabet a, std::size_t n) { return count_upto(a, n) <= kEnumerationGuard; }

/// c_L(n) = |L ∩ Σ^{<=n}|.
inline Nat census(const Language& L, std::size_t n) {
  if (L.has_closed_census()) return L.closed().census(n);
  if (!enumeration_feasible(L.alphabet(), n)) {
    throw InfeasibleError("census infeasible: " + L.name() + " up to length " + std::to_string(n));
  }
  Nat count = 0;
  for_each_upto(L.alphabet(), n, [&](const Str& x) {
    if (L.contains(x)) ++count;
  });
  return count;
}

/// Census at a possibly negative length (0 below length 0).
inline Nat census_signed(const Language& L, long long n) {
  return n < 0 ? Nat(0) : census(L, static_cast<std::size_t>(n));
}

/// All members of length <= n, in length-lex order.
inline std::vector<Str> enumerate_upto(const Language& L, std::size_t n) {
  if (L.closed().members) return L.closed().members(n);
  if (!enumeration_feasible(L.alphabet(), n)) {
    throw InfeasibleError("enumeration infeasible: " + L.name() + " up to length " + std::to_string(n));
  }
  std::vector<Str> out;
  for_each_upto(L.alphabet(), n, [&](const Str& x) {
    if (L.contains(x)) out.push_back(x);
  });
  return out;
}

struct CensusTable {
  std::vector<std::pair<std::size_t, Nat>> entries;

  /// Non-decreasing and bounded by the number of strings of each length bound.
  bool valid(Alphabet a) const {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].second > count_upto(a, entries[i].first)) return false;
      if (i > 0 && entries[i].second < entries[i - 1].second) return false;
    }
    return true;
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "n,count\n";
    for (const auto& [n, c] : entries) os << n << "," << c << "\n";
    return os.str();
  }
};

inline CensusTable census_table(const Language& L, std::size_t nmax) {
  CensusTable t;
  for (std::size_t n = 0; n <= nmax; ++n) t.entries.emplace_back(n, census(L, n));
  return t;
}

inline std::string quoted(const Str& x) { return "\"" + format(x) + "\""; }

/// tow(0) = 1, tow(n+1) = 2^tow(n); defined here for n <= 5.
inline Nat tow(unsigned n) {
  if (n > 5) throw PreconditionError("tow(n) is only materialized for n <= 5");
  Nat t = 1;
  for (unsigned i = 0; i < n; ++i) t = Nat(1) << static_cast<unsigned>(t);
  return t;
}

/// Lengths of the Dedekind tally set, 2^(2^(2^k)); materialized for k <= 4.
inline Nat dedekind_length(unsigned k) {
  if (k > 4) throw PreconditionError("dedekind_length(k) is only materialized for k <= 4");
  unsigned inner = 1u << k;           // 2^k
  Nat middle = Nat(1) << inner;       // 2^(2^k)
  return Nat(1) << static_cast<unsigned>(middle);
}

namespace gallery {

namespace detail {

inline Nat geometric(Alphabet a, std::size_t lo, std::size_t hi) {
  // sum_{l=lo}^{hi} k^l
  if (hi < lo) return 0;
  Nat k = a.size();
  return (boost::multiprecision::pow(k, static_cast<unsigned>(hi + 1)) -
          boost::multiprecision::pow(k, static_cast<unsigned>(lo))) /
         (k - 1);
}

/// Members of length exactly |x| that are <=_lex x, for a language that
/// contains every string of that length.
inline Nat full_layer_rank(const Str& x) { return rank(x) - count_upto(x.alphabet(), x.size()) + count_exact(x.alphabet(), x.size()) + 1; }

inline std::string list_literal(const std::vector<Str>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += quoted(xs[i]);
  }
  return s + "]";
}

/// Length bands [lo, hi) whose union is a tower-gap language; hi == 0 marks
/// an unbounded band.
inline std::vector<std::pair<std::size_t, std::size_t>> tower_bands(int parity) {
  // tow = 1, 2, 4, 16, 65536, 2^65536 (beyond any length handled here).
  if (parity == 0) return {{1, 2}, {4, 16}, {65536, 0}};
  return {{2, 4}, {16, 65536}};
}

inline bool in_bands(const std::vector<std::pair<std::size_t, std::size_t>>& bands, std::size_t len) {
  for (auto [lo, hi] : bands)
    if (len >= lo && (hi == 0 || len < hi)) return true;
  return false;
}

}  // namespace detail

inline Language sigma_star(Alphabet a) {
  return Language(
      "sigma_star(" + std::to_string(a.size()) + ")", a,
      [](const Str& x, Clock& c) {
        c.charge(x.size());
        return true;
      },
      {.census = [a](std::size_t n) { return count_upto(a, n); },
       .rank = [](const Str& x) { return rank(x) + 1; },
       .members = {}});
}

inline Language empty(Alphabet a) {
  return Language(
      "empty(" + std::to_string(a.size()) + ")", a, [](const Str&, Clock&) { return false; },
      {.census = [](std::size_t) { return Nat(0); },
       .rank = [](const Str&) { return Nat(0); },
       .members = [](std::size_t) { return std::vector<Str>{}; }});
}

inline Language finite(Alphabet a, std::vector<Str> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const auto& m : members) {
    if (m.alphabet() != a) throw PreconditionError("finite(): member " + format(m) + " has a different alphabet");
  }
  std::string name = members.empty() ? "finite(" + std::to_string(a.size()) + ", [])"
                                     : "finite(" + detail::list_literal(members) + ")";
  auto set = std::make_shared<const std::set<Str>>(members.begin(), members.end());
  return Language(
      std::move(name), a,
      [set](const Str& x, Clock& c) {
        c.charge(x.size());
        return set->count(x) > 0;
      },
      {.census = [set](std::size_t n) {
         Nat k = 0;
         for (const auto& m : *set)
           if (m.size() <= n) ++k;
         return k;
       },
       .rank = [set](const Str& x) {
         return Nat(std::distance(set->begin(), set->upper_bound(x)));
       },
       .members = [set](std::size_t n) {
         std::vector<Str> out;
         for (const auto& m : *set)
           if (m.size() <= n) out.push_back(m);
         return out;
       }});
}

inline Language complement(const Language& L) {
  Language::ClosedForms closed;
  Alphabet a = L.alphabet();
  if (L.has_closed_census()) {
    closed.census = [L, a](std::size_t n) { return count_upto(a, n) - L.closed().census(n); };
  }
  if (L.has_closed_rank()) {
    closed.rank = [L](const Str& x) { return rank(x) + 1 - L.closed().rank(x); };
  }
  return Language(
      "complement(" + L.name() + ")", a, [L](const Str& x, Clock& c) { return !L.member_on(x, c); },
      std::move(closed), L.fuel_limit());
}

/// {0a : a in A} ∪ {1b : b in B}.
inline Language oplus(const Language& A, const Language& B) {
  if (A.alphabet() != B.alphabet()) throw PreconditionError("oplus(): alphabet mismatch");
  Alphabet a = A.alphabet();
  Language::ClosedForms closed;
  if (A.has_closed_census() && B.has_closed_census()) {
    closed.census = [A, B](std::size_t n) {
      return n == 0 ? Nat(0) : A.closed().census(n - 1) + B.closed().census(n - 1);
    };
    if (A.has_closed_rank() && B.has_closed_rank()) {
      closed.rank = [A, B](const Str& x) {
        if (x.empty()) return Nat(0);
        const auto m = static_cast<long long>(x.size()) - 1;
        Nat r = census_signed(A, m - 1) + census_signed(B, m - 1);
        const unsigned tag = x.at(0);
        const Str rest = x.drop_front(1);
        // tag-0 members of length |x|
        if (tag > 0) r += census_signed(A, m) - census_signed(A, m - 1);
        else r += A.closed().rank(rest) - census_signed(A, m - 1);
        // tag-1 members of length |x|
        if (tag > 1) r += census_signed(B, m) - census_signed(B, m - 1);
        else if (tag == 1) r += B.closed().rank(rest) - census_signed(B, m - 1);
        return r;
      };
    }
  }
  return Language(
      "oplus(" + A.name() + ", " + B.name() + ")", a,
      [A, B](const Str& x, Clock& c) {
        c.charge(1);
        if (x.empty()) return false;
        if (x.at(0) == 0) return A.member_on(x.drop_front(1), c);
        if (x.at(0) == 1) return B.member_on(x.drop_front(1), c);
        return false;
      },
      std::move(closed), std::max(A.fuel_limit(), B.fuel_limit()));
}

/// {pair(a, b) : a in A, b in B}.
inline Language times(const Language& A, const Language& B) {
  if (A.alphabet() != B.alphabet()) throw PreconditionError("times(): alphabet mismatch");
  return Language(
      "times(" + A.name() + ", " + B.name() + ")", A.alphabet(),
      [A, B](const Str& z, Clock& c) {
        c.charge(z.size());
        auto [x, y] = unpair(z);
        return A.member_on(x, c) && B.member_on(y, c);
      },
      {}, std::max(A.fuel_limit(), B.fuel_limit()));
}

/// {w x : x in L}.
inline Language tagged(const Str& w, const Language& L) {
  if (w.alphabet() != L.alphabet()) throw PreconditionError("tagged(): alphabet mismatch");
  Language::ClosedForms closed;
  const auto lw = static_cast<long long>(w.size());
  if (L.has_closed_census()) {
    closed.census = [L, lw](std::size_t n) { return census_signed(L, static_cast<long long>(n) - lw); };
    if (L.has_closed_rank()) {
      closed.rank = [L, w, lw](const Str& x) {
        const auto m = static_cast<long long>(x.size()) - lw;
        if (m < 0) return Nat(0);
        Nat r = census_signed(L, m - 1);
        const Str head = x.take(w.size());
        if (head.symbols() > w.symbols()) r += census_signed(L, m) - census_signed(L, m - 1);
        else if (head == w) r += L.closed().rank(x.drop_front(w.size())) - census_signed(L, m - 1);
        return r;
      };
    }
  }
  return Language(
      "tagged(" + quoted(w) + ", " + L.name() + ")", L.alphabet(),
      [w, L](const Str& x, Clock& c) {
        c.charge(w.size());
        return x.starts_with(w) && L.member_on(x.drop_front(w.size()), c);
      },
      std::move(closed), L.fuel_limit());
}

/// wΣ*.
inline Language prefix(const Str& w) {
  Language inner = tagged(w, sigma_star(w.alphabet()));
  return Language(
      "prefix(" + quoted(w) + ")", w.alphabet(),
      [w](const Str& x, Clock& c) {
        c.charge(std::min(x.size(), w.size()) + 1);
        return x.starts_with(w);
      },
      inner.closed());
}

/// Σ* minus its first n strings in length-lex order.
inline Language shift_set(Alphabet a, const Nat& n) {
  if (n < 0) throw PreconditionError("shift_set(): negative shift");
  return Language(
      "shift_set(" + std::to_string(a.size()) + ", " + n.str() + ")", a,
      [n](const Str& x, Clock& c) {
        c.charge(x.size());
        return rank(x) >= n;
      },
      {.census = [a, n](std::size_t m) {
         Nat t = count_upto(a, m) - n;
         return t < 0 ? Nat(0) : t;
       },
       .rank = [n](const Str& x) {
         Nat t = rank(x) + 1 - n;
         return t < 0 ? Nat(0) : t;
       },
       .members = {}});
}

/// Strings whose length falls in [tow(2k), tow(2k+1)) (parity 0) or
/// [tow(2k+1), tow(2k+2)) (parity 1) for some k.
inline Language tower_gap(Alphabet a, int parity) {
  auto bands = detail::tower_bands(parity);
  auto census_fn = [a, bands](std::size_t n) {
    Nat total = 0;
    for (auto [lo, hi] : bands) {
      if (lo > n) continue;
      std::size_t top = hi == 0 ? n : std::min(n, hi - 1);
      total += detail::geometric(a, lo, top);
    }
    return total;
  };
  return Language(
      "tower_gap_A" + std::to_string(parity) + "(" + std::to_string(a.size()) + ")", a,
      [bands](const Str& x, Clock& c) {
        c.charge(x.size());
        return detail::in_bands(bands, x.size());
      },
      {.census = census_fn,
       .rank = [bands, census_fn](const Str& x) {
         Nat r = x.empty() ? Nat(0) : census_fn(x.size() - 1);
         if (detail::in_bands(bands, x.size())) r += detail::full_layer_rank(x);
         return r;
       },
       .members = {}});
}

inline Language tower_gap_A0(Alphabet a) { return tower_gap(a, 0); }
inline Language tower_gap_A1(Alphabet a) { return tower_gap(a, 1); }

/// {1^ℓ : ℓ = 2^(2^(2^k)), k >= 0}; lengths 4, 16, 65536, ...
inline Language dedekind(Alphabet a) {
  static const std::vector<std::size_t> lengths = {4, 16, 65536};
  auto census_fn = [](std::size_t n) {
    Nat k = 0;
    for (auto l : lengths)
      if (l <= n) ++k;
    return k;
  };
  return Language(
      "dedekind(" + std::to_string(a.size()) + ")", a,
      [](const Str& x, Clock& c) {
        for (std::size_t i = 0; i < x.size(); ++i) {
          c.charge(1);
          if (x.symbols()[i] != '1') return false;
        }
        return std::find(lengths.begin(), lengths.end(), x.size()) != lengths.end();
      },
      {.census = census_fn,
       .rank = [census_fn](const Str& x) {
         Nat r = x.empty() ? Nat(0) : census_fn(x.size() - 1);
         bool tower_len = std::find(lengths.begin(), lengths.end(), x.size()) != lengths.end();
         if (tower_len && x.symbols() >= std::string(x.size(), '1')) ++r;
         return r;
       },
       .members = [a](std::size_t n) {
         std::vector<Str> out;
         for (auto l : lengths)
           if (l <= n) out.emplace_back(a, std::string(l, '1'));
         return out;
       }});
}

}  // namespace gallery

/// For consecutive Dedekind lengths ℓ, ℓ' with index <= kmax, checks
/// ℓ' = ℓ^(log2 ℓ).
inline bool dedekind_gap_check(unsigned kmax) {
  if (kmax > 2) throw PreconditionError("dedekind_gap_check: kmax must be <= 2");
  for (unsigned k = 0; k + 1 <= kmax; ++k) {
    Nat l = dedekind_length(k);
    Nat next = dedekind_length(k + 1);
    auto log2l = static_cast<unsigned>(boost::multiprecision::msb(l));
    if ((Nat(1) << log2l) != l) return false;
    if (boost::multiprecision::pow(l, log2l) != next) return false;
  }
  return true;
}

}  // namespace pcard
