#pragma once

// Indexed collections over pair-encoded carriers: honest non-emptiness,
// brute-force choice, transversals of disjoint collections, and
// single-valued refinements of multivalued maps.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcard/polynomial.hpp"
#include "pcard/witness.hpp"

namespace pcard {

/// The family L_x = {y : pair(x, y) in carrier}, with honesty window
/// p(|x|) <= |y| <= q(|x|).
struct Collection {
  Language carrier;
  Polynomial p;
  Polynomial q;

  std::string name() const { return "collection(" + carrier.name() + ", p=" + p.to_string() + ", q=" + q.to_string() + ")"; }
  Alphabet alphabet() const { return carrier.alphabet(); }
  bool in_slice(const Str& x, const Str& y) const { return carrier.contains(pair(x, y)); }
};

inline Collection make_collection(Language carrier, Polynomial p, Polynomial q) {
  if (p.degree() < 1 || q.degree() < 1) throw PreconditionError("collection: honesty bounds need positive degree");
  return Collection{std::move(carrier), std::move(p), std::move(q)};
}

namespace detail {

inline std::pair<std::size_t, std::size_t> window(const Collection& C, std::size_t len) {
  return {static_cast<std::size_t>(C.p(len)), static_cast<std::size_t>(C.q(len))};
}

inline void require_window_feasible(const Collection& C, std::size_t len) {
  auto [lo, hi] = window(C, len);
  if (hi > 4096 || !enumeration_feasible(C.alphabet(), hi)) {
    throw InfeasibleError("infeasible window [" + std::to_string(lo) + ", " + std::to_string(hi) + "] at length " +
                          std::to_string(len));
  }
}

/// Calls fn on each y with lo <= |y| <= hi in length-lex order until fn returns false.
template <typename Fn>
void scan_lengths(Alphabet a, std::size_t lo, std::size_t hi, Fn&& fn) {
  if (hi < lo) return;
  Str y(a, std::string(lo, a.symbol(0)));
  while (y.size() <= hi) {
    if (!fn(static_cast<const Str&>(y))) return;
    y = successor(y);
  }
}

}  // namespace detail

/// Members of L_x inside the honesty window, in length-lex order.
inline std::vector<Str> slice_in_window(const Collection& C, const Str& x) {
  detail::require_window_feasible(C, x.size());
  auto [lo, hi] = detail::window(C, x.size());
  std::vector<Str> out;
  detail::scan_lengths(C.alphabet(), lo, hi, [&](const Str& y) {
    if (C.in_slice(x, y)) out.push_back(y);
    return true;
  });
  return out;
}

/// Least y in the window with (x, y) in the carrier.
inline std::optional<Str> first_in_window(const Collection& C, const Str& x) {
  detail::require_window_feasible(C, x.size());
  auto [lo, hi] = detail::window(C, x.size());
  std::optional<Str> found;
  detail::scan_lengths(C.alphabet(), lo, hi, [&](const Str& y) {
    if (C.in_slice(x, y)) found = y;
    return !found;
  });
  return found;
}

struct NonemptyRow {
  Str x;
  std::optional<Str> witness;
};

inline std::vector<NonemptyRow> check_honestly_nonempty(const Collection& C, std::size_t nmax) {
  std::vector<NonemptyRow> rows;
  for_each_upto(C.alphabet(), nmax, [&](const Str& x) { rows.push_back({x, first_in_window(C, x)}); });
  return rows;
}

inline Str choice_bruteforce(const Collection& C, const Str& x) {
  auto y = first_in_window(C, x);
  if (!y) throw PreconditionError("slice empty at " + format(x) + ": collection not honestly nonempty there");
  return *y;
}

struct DisjointnessReport {
  bool disjoint = true;
  std::optional<Str> shared;              // a y found in two slices
  std::optional<std::pair<Str, Str>> owners;
};

inline DisjointnessReport audit_pairwise_disjoint(const Collection& C, std::size_t nmax) {
  DisjointnessReport rep;
  std::map<Str, Str> owner;
  for_each_upto(C.alphabet(), nmax, [&](const Str& x) {
    if (!rep.disjoint) return;
    for (const auto& y : slice_in_window(C, x)) {
      auto [it, fresh] = owner.emplace(y, x);
      if (!fresh) {
        rep.disjoint = false;
        rep.shared = y;
        rep.owners = std::make_pair(it->second, x);
        return;
      }
    }
  });
  return rep;
}

/// y is in the transversal iff some x pairs with y and no y' <_lex y with
/// |y'| >= p(|x|) pairs with the same x. Candidate lengths for x come from
/// integer inverses of the honesty bounds, searched no further than `horizon`.
inline bool transversal_member(const Collection& C, const Str& y, std::size_t horizon) {
  const std::size_t len = y.size();
  const std::uint64_t lo = C.q.ceil_inverse(len, horizon);
  const std::int64_t hi = C.p.floor_inverse(len, horizon);
  if (static_cast<std::uint64_t>(hi) == horizon && C.p(horizon + 1) <= len) {
    throw PreconditionError("horizon " + std::to_string(horizon) + " too small to bracket the index window for " +
                            format(y));
  }
  if (hi < 0 || lo > static_cast<std::uint64_t>(hi)) return false;
  bool member = false;
  for (std::size_t m = lo; m <= static_cast<std::size_t>(hi) && !member; ++m) {
    if (!enumeration_feasible(C.alphabet(), m)) throw InfeasibleError("transversal: index window too large");
    for_each_of_length(C.alphabet(), m, [&](const Str& x) {
      if (member || !C.in_slice(x, y)) return;
      bool earlier = false;
      detail::scan_lengths(C.alphabet(), static_cast<std::size_t>(C.p(m)), len, [&](const Str& y2) {
        if (!(y2 < y)) return false;
        if (C.in_slice(x, y2)) earlier = true;
        return !earlier;
      });
      if (!earlier) member = true;
    });
  }
  return member;
}

/// A multivalued map given by its graph over pair encodings, with the
/// output-length window used for searching.
struct MultiMap {
  Language graph;
  Polynomial lo;
  Polynomial hi;
};

/// Single-valued refinement: the least y in the window with (x, y) in R.
inline PartialMap refine_uniformize(const MultiMap& R) {
  if (R.hi.coefficients().empty()) throw PreconditionError("uniformize: output window unspecified");
  Collection C{R.graph, R.lo, R.hi};
  return PartialMap(
      "uniformize(" + R.graph.name() + ", lo=" + R.lo.to_string() + ", hi=" + R.hi.to_string() + ")",
      R.graph.alphabet(), R.graph.alphabet(),
      [C](const Str& x, Clock& clock) {
        auto y = first_in_window(C, x);
        clock.charge(x.size() + (y ? y->size() : 0));
        return y;
      },
      TimeBound{std::numeric_limits<std::uint64_t>::max() / 4, 1});
}

struct RefinementReport {
  std::size_t checked = 0;
  std::vector<Str> domain_mismatch;   // f defined iff R has an output in the window
  std::vector<Str> value_outside;     // f(x) not among R's outputs
  bool clean() const { return domain_mismatch.empty() && value_outside.empty(); }
};

inline RefinementReport check_refinement(const PartialMap& f, const MultiMap& R, std::size_t nmax) {
  RefinementReport rep;
  Collection C{R.graph, R.lo, R.hi};
  for_each_upto(R.graph.alphabet(), nmax, [&](const Str& x) {
    ++rep.checked;
    auto y = f(x);
    const bool in_dom = !slice_in_window(C, x).empty();
    if (y.has_value() != in_dom) rep.domain_mismatch.push_back(x);
    if (y && !C.in_slice(x, *y)) rep.value_outside.push_back(x);
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Carriers used by the shipped collections.

namespace collections {

namespace detail {

inline Language pair_language(std::string name, Alphabet a, std::function<bool(const Str&, const Str&)> rel) {
  return Language(std::move(name), a, [rel = std::move(rel)](const Str& z, Clock& c) {
    c.charge(z.size());
    auto [x, y] = unpair(z);
    c.charge(x.size() + y.size());
    return rel(x, y);
  });
}

}  // namespace detail

/// {(x, xb) : b a symbol}; window n+1.
inline Language suffix(Alphabet a) {
  return detail::pair_language("suffix_collection(" + std::to_string(a.size()) + ")", a,
                               [](const Str& x, const Str& y) { return y.size() == x.size() + 1 && y.starts_with(x); });
}

/// {(x, xx), (x, xxb)}; window [2n, 2n+1].
inline Language doubled(Alphabet a) {
  return detail::pair_language("doubled_collection(" + std::to_string(a.size()) + ")", a,
                               [](const Str& x, const Str& y) {
                                 const Str xx = x.concat(x);
                                 return (y.size() == xx.size() || y.size() == xx.size() + 1) && y.starts_with(xx);
                               });
}

/// {(x, x1u) : |u| = |x|}; window 2n+1.
inline Language padded(Alphabet a) {
  return detail::pair_language("padded_collection(" + std::to_string(a.size()) + ")", a,
                               [](const Str& x, const Str& y) {
                                 return y.size() == 2 * x.size() + 1 && y.starts_with(x) && y.at(x.size()) == 1;
                               });
}

/// {(x, "0")}: every slice is the same singleton.
inline Language constant(Alphabet a) {
  return detail::pair_language("constant_collection(" + std::to_string(a.size()) + ")", a,
                               [](const Str&, const Str& y) { return y.symbols() == "0"; });
}

/// {(x, x0)}: the graph of a single-valued map.
inline Language append_zero(Alphabet a) {
  return detail::pair_language("append_zero_graph(" + std::to_string(a.size()) + ")", a,
                               [](const Str& x, const Str& y) { return y.symbols() == x.symbols() + "0"; });
}

/// {(x, y) : |y| = |x|, y starts with 1}: empty slice at ε.
inline Language same_length_one(Alphabet a) {
  return detail::pair_language("same_length_one_graph(" + std::to_string(a.size()) + ")", a,
                               [](const Str& x, const Str& y) { return y.size() == x.size() && !y.empty() && y.at(0) == 1; });
}

}  // namespace collections

}  // namespace pcard
