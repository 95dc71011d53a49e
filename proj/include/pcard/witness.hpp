#pragma once

// Clocked partial maps, equipollence witnesses and their exhaustive
// verification, and the arithmetic combinators on witnesses.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcard/clock.hpp"
#include "pcard/error.hpp"
#include "pcard/language.hpp"
#include "pcard/strings.hpp"

namespace pcard {

struct MapResult {
  std::optional<Str> value;
  std::uint64_t steps = 0;
  bool timed_out = false;
};

/// A deterministic partial function Σ* -> Γ* evaluated under the clock
/// t(|x|). Exceeding the clock yields no value and sets `timed_out`.
class PartialMap {
 public:
  using Eval = std::function<std::optional<Str>(const Str&, Clock&)>;

  PartialMap(std::string name, Alphabet source, Alphabet target, Eval eval, TimeBound bound)
      : impl_(std::make_shared<Impl>(Impl{std::move(name), source, target, std::move(eval), bound, {}, {}})) {}

  const std::string& name() const { return impl_->name; }
  Alphabet source() const { return impl_->source; }
  Alphabet target() const { return impl_->target; }
  TimeBound bound() const { return impl_->bound; }

  MapResult run(const Str& x) const {
    if (x.alphabet() != impl_->source) {
      throw PreconditionError("map " + name() + " applied to " + format(x) + " over the wrong alphabet");
    }
    Clock clock(impl_->bound(x.size()));
    try {
      auto y = impl_->eval(x, clock);
      return {std::move(y), clock.used(), false};
    } catch (const OutOfFuel&) {
      return {std::nullopt, clock.used(), true};
    }
  }

  std::optional<Str> operator()(const Str& x) const { return run(x).value; }

  /// Runs this map as a sub-computation, charging its steps to `clock`.
  /// A sub-computation that times out makes the caller time out too.
  std::optional<Str> call(const Str& x, Clock& clock) const {
    auto r = run(x);
    clock.charge(r.steps);
    if (r.timed_out) throw OutOfFuel{};
    return r.value;
  }

  /// Caller-supplied inverse, when known.
  const PartialMap* inverse() const { return impl_->inverse.get(); }
  PartialMap with_inverse(const PartialMap& inv) const {
    PartialMap copy = *this;
    auto impl = std::make_shared<Impl>(*impl_);
    impl->inverse = std::make_shared<const PartialMap>(inv);
    copy.impl_ = std::move(impl);
    return copy;
  }

  const std::optional<Language>& domain() const { return impl_->domain; }
  PartialMap with_domain(const Language& L) const {
    PartialMap copy = *this;
    auto impl = std::make_shared<Impl>(*impl_);
    impl->domain = L;
    copy.impl_ = std::move(impl);
    return copy;
  }

  PartialMap renamed(std::string name) const {
    PartialMap copy = *this;
    auto impl = std::make_shared<Impl>(*impl_);
    impl->name = std::move(name);
    copy.impl_ = std::move(impl);
    return copy;
  }

 private:
  struct Impl {
    std::string name;
    Alphabet source;
    Alphabet target;
    Eval eval;
    TimeBound bound;
    std::shared_ptr<const PartialMap> inverse;
    std::optional<Language> domain;
  };
  std::shared_ptr<const Impl> impl_;
};

namespace maps {

namespace detail {

/// Wraps a pure function charging |x| + |output|.
inline PartialMap primitive(std::string name, Alphabet src, Alphabet tgt, std::uint64_t c,
                            std::function<std::optional<Str>(const Str&)> fn) {
  return PartialMap(
      std::move(name), src, tgt,
      [fn = std::move(fn)](const Str& x, Clock& clock) -> std::optional<Str> {
        clock.charge(x.size());
        auto y = fn(x);
        if (y) clock.charge(y->size());
        return y;
      },
      linear(c));
}

inline std::string alpha(Alphabet a) { return std::to_string(a.size()); }

}  // namespace detail

inline PartialMap identity(Alphabet a) {
  auto m = detail::primitive("identity(" + detail::alpha(a) + ")", a, a, 2, [](const Str& x) { return x; });
  return m.with_inverse(m);
}

inline PartialMap empty_map(Alphabet a) {
  auto m = detail::primitive("empty_map(" + detail::alpha(a) + ")", a, a, 1,
                             [](const Str&) { return std::optional<Str>{}; });
  return m.with_inverse(m);
}

inline PartialMap strip(const Str& w);

inline PartialMap prepend(const Str& w) {
  auto m = detail::primitive("prepend(" + quoted(w) + ")", w.alphabet(), w.alphabet(), 2 + 2 * w.size(),
                             [w](const Str& x) { return w.concat(x); });
  return m.with_inverse(detail::primitive("strip(" + quoted(w) + ")", w.alphabet(), w.alphabet(), 2,
                                          [w](const Str& x) -> std::optional<Str> {
                                            if (!x.starts_with(w)) return std::nullopt;
                                            return x.drop_front(w.size());
                                          }));
}

inline PartialMap strip(const Str& w) {
  auto p = prepend(w);
  return p.inverse()->with_inverse(p);
}

inline PartialMap append(const Str& w) {
  auto m = detail::primitive("append(" + quoted(w) + ")", w.alphabet(), w.alphabet(), 2 + 2 * w.size(),
                             [w](const Str& x) { return x.concat(w); });
  return m.with_inverse(detail::primitive("strip_suffix(" + quoted(w) + ")", w.alphabet(), w.alphabet(), 2,
                                          [w](const Str& x) -> std::optional<Str> {
                                            if (!x.ends_with(w)) return std::nullopt;
                                            return x.drop_back(w.size());
                                          }));
}

inline PartialMap strip_suffix(const Str& w) {
  auto p = append(w);
  return p.inverse()->with_inverse(p);
}

/// x + n in the length-lex numbering; undefined where it would precede ε.
inline PartialMap add(Alphabet a, long long n) {
  const auto mag = static_cast<std::uint64_t>(n < 0 ? -n : n);
  const std::uint64_t c = 3 + unrank(Nat(mag), a).size();
  auto make = [a, c](long long k) {
    return detail::primitive("add(" + detail::alpha(a) + ", " + std::to_string(k) + ")", a, a, c,
                             [k](const Str& x) -> std::optional<Str> {
                               Nat r = rank(x) + k;
                               if (r < 0) return std::nullopt;
                               return unrank(r, x.alphabet());
                             });
  };
  return make(n).with_inverse(make(-n));
}

/// Rank-preserving change of alphabet.
inline PartialMap convert(Alphabet from, Alphabet to) {
  auto make = [](Alphabet s, Alphabet t) {
    // |out| <= ceil(log s / log t) * |x| + 1
    std::uint64_t ratio = 1;
    while (count_exact(t, ratio) < Nat(s.size())) ++ratio;
    return detail::primitive("convert(" + detail::alpha(s) + ", " + detail::alpha(t) + ")", s, t, ratio + 3,
                             [t](const Str& x) { return convert_alphabet(x, t); });
  };
  return make(from, to).with_inverse(make(to, from));
}

/// Replaces the first symbol with `symbol`; undefined on ε.
inline PartialMap replace_first(Alphabet a, unsigned symbol) {
  return detail::primitive("replace_first(" + detail::alpha(a) + ", " + std::to_string(symbol) + ")", a, a, 3,
                           [symbol](const Str& x) -> std::optional<Str> {
                             if (x.empty()) return std::nullopt;
                             return x.drop_front(1).with_front(symbol);
                           });
}

/// Swaps a leading 0 with a leading 1; undefined on ε and other leading symbols.
inline PartialMap flip(Alphabet a) {
  auto m = detail::primitive("flip(" + detail::alpha(a) + ")", a, a, 3, [](const Str& x) -> std::optional<Str> {
    if (x.empty() || x.at(0) > 1) return std::nullopt;
    return x.drop_front(1).with_front(1 - x.at(0));
  });
  return m.with_inverse(m);
}

/// Strips the prefix w; on inputs without it, runs until its clock expires.
inline PartialMap strip_or_spin(const Str& w) {
  return PartialMap(
      "strip_or_spin(" + quoted(w) + ")", w.alphabet(), w.alphabet(),
      [w](const Str& x, Clock& clock) -> std::optional<Str> {
        clock.charge(x.size());
        if (!x.starts_with(w)) {
          for (;;) clock.charge(1);
        }
        return x.drop_front(w.size());
      },
      linear(2));
}

/// x -> 0 σ_{n/2} for even n = rank(x), 1 σ_{(n-1)/2} for odd n.
inline PartialMap self_sum_forward(Alphabet a) {
  return detail::primitive("self_sum_forward(" + detail::alpha(a) + ")", a, a, 3, [a](const Str& x) {
    Nat n = rank(x);
    unsigned tag = (n % 2 == 0) ? 0 : 1;
    return unrank(n / 2, a).with_front(tag);
  });
}

inline PartialMap self_sum_backward(Alphabet a) {
  return detail::primitive("self_sum_backward(" + detail::alpha(a) + ")", a, a, 3,
                           [a](const Str& x) -> std::optional<Str> {
                             if (x.empty() || x.at(0) > 1) return std::nullopt;
                             return unrank(2 * rank(x.drop_front(1)) + x.at(0), a);
                           });
}

/// x -> pair(unpair(x)): the pairing bijection read as a map Σ* -> Σ*×Σ*.
inline PartialMap repair(Alphabet a) {
  auto m = detail::primitive("repair(" + detail::alpha(a) + ")", a, a, 3, [](const Str& z) {
    auto [x, y] = unpair(z);
    return pair(x, y);
  });
  return m.with_inverse(m);
}

/// f first, then g.
inline PartialMap compose(const PartialMap& f, const PartialMap& g) {
  if (f.target() != g.source()) throw PreconditionError("compose_map(): alphabet mismatch");
  PartialMap m(
      "compose_map(" + f.name() + ", " + g.name() + ")", f.source(), g.target(),
      [f, g](const Str& x, Clock& clock) -> std::optional<Str> {
        auto y = f.call(x, clock);
        if (!y) return std::nullopt;
        return g.call(*y, clock);
      },
      bound_sequence(f.bound(), g.bound()));
  if (f.inverse() && g.inverse()) {
    const PartialMap gi = *g.inverse(), fi = *f.inverse();
    m = m.with_inverse(PartialMap(
        "compose_map(" + gi.name() + ", " + fi.name() + ")", g.target(), f.source(),
        [gi, fi](const Str& x, Clock& clock) -> std::optional<Str> {
          auto y = gi.call(x, clock);
          if (!y) return std::nullopt;
          return fi.call(*y, clock);
        },
        bound_sequence(gi.bound(), fi.bound())));
  }
  return m;
}

/// 0x -> 0 f(x), 1x -> 1 g(x).
inline PartialMap oplus(const PartialMap& f, const PartialMap& g) {
  if (f.source() != g.source() || f.target() != g.target()) throw PreconditionError("oplus_map(): alphabet mismatch");
  return PartialMap(
      "oplus_map(" + f.name() + ", " + g.name() + ")", f.source(), f.target(),
      [f, g](const Str& x, Clock& clock) -> std::optional<Str> {
        clock.charge(2);
        if (x.empty() || x.at(0) > 1) return std::nullopt;
        const unsigned tag = x.at(0);
        auto y = (tag == 0 ? f : g).call(x.drop_front(1), clock);
        if (!y) return std::nullopt;
        return y->with_front(tag);
      },
      bound_plus(bound_max(f.bound(), g.bound()), linear(2)));
}

/// pair(x, y) -> pair(f(x), g(y)).
inline PartialMap times(const PartialMap& f, const PartialMap& g) {
  if (f.source() != g.source() || f.target() != g.target() || f.source() != f.target()) {
    throw PreconditionError("times_map(): maps must share one alphabet");
  }
  TimeBound inner = bound_max(f.bound(), g.bound());
  inner.e = std::max(inner.e, 1u);
  return PartialMap(
      "times_map(" + f.name() + ", " + g.name() + ")", f.source(), f.target(),
      [f, g](const Str& z, Clock& clock) -> std::optional<Str> {
        clock.charge(z.size());
        auto [x, y] = unpair(z);
        auto fx = f.call(x, clock);
        if (!fx) return std::nullopt;
        auto gy = g.call(y, clock);
        if (!gy) return std::nullopt;
        Str out = pair(*fx, *gy);
        clock.charge(out.size());
        return out;
      },
      TimeBound{sat_add(sat_mul(4, inner.c), 5), inner.e});
}

}  // namespace maps

/// A claimed p-equipollence A ≈ B: forward maps A onto B, backward inverts it.
struct Equipollence {
  std::string name;
  PartialMap forward;
  PartialMap backward;
  Language A;
  Language B;
};

inline Equipollence make_equipollence(std::string name, PartialMap forward, PartialMap backward, Language A,
                                      Language B) {
  if (forward.source() != A.alphabet() || forward.target() != B.alphabet() || backward.source() != B.alphabet() ||
      backward.target() != A.alphabet()) {
    throw PreconditionError("equipollence " + name + ": map alphabets do not match the endpoint languages");
  }
  return Equipollence{std::move(name), std::move(forward), std::move(backward), std::move(A), std::move(B)};
}

enum class ViolationKind { Undefined, EscapesCodomain, RoundtripFailure, ClockBreach };

inline std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Undefined: return "undefined";
    case ViolationKind::EscapesCodomain: return "escapes_codomain";
    case ViolationKind::RoundtripFailure: return "roundtrip_failure";
    case ViolationKind::ClockBreach: return "clock_breach";
  }
  return "?";
}

struct Violation {
  Str input;
  char side;  // 'A' or 'B': which endpoint the input was drawn from
  ViolationKind kind;
  std::string detail;
};

struct VerificationReport {
  std::size_t checked_up_to = 0;
  std::vector<Violation> violations;
  std::vector<std::uint64_t> max_steps;  // indexed by input length
  std::size_t checked_a = 0;
  std::size_t checked_b = 0;

  bool clean() const { return violations.empty(); }

  bool has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
  }
};

namespace detail {

inline void note_steps(VerificationReport& r, std::size_t len, std::uint64_t steps) {
  if (r.max_steps.size() <= len) r.max_steps.resize(len + 1, 0);
  r.max_steps[len] = std::max(r.max_steps[len], steps);
}

inline std::string show(const std::optional<Str>& y) { return y ? format(*y) : std::string("undefined"); }

}  // namespace detail

/// Exhaustive check of both roundtrips on A and B up to length n.
///
/// A-side inputs report forward failures as undefined / escapes_codomain and
/// a bad return trip as roundtrip_failure. B-side inputs report any break in
/// y -> backward(y) -> forward(backward(y)) as roundtrip_failure, except a
/// backward image outside A, which is escapes_codomain. Any clock overrun is
/// clock_breach.
inline VerificationReport verify_equipollence(const Equipollence& E, std::size_t n) {
  VerificationReport report;
  report.checked_up_to = n;
  report.max_steps.assign(n + 1, 0);
  auto add = [&](const Str& x, char side, ViolationKind k, std::string detail) {
    report.violations.push_back({x, side, k, std::move(detail)});
  };

  for (const Str& x : enumerate_upto(E.A, n)) {
    ++report.checked_a;
    auto fx = E.forward.run(x);
    detail::note_steps(report, x.size(), fx.steps);
    if (fx.timed_out) {
      add(x, 'A', ViolationKind::ClockBreach, "forward exceeded " + E.forward.bound().to_string());
      continue;
    }
    if (!fx.value) {
      add(x, 'A', ViolationKind::Undefined, "forward undefined");
      continue;
    }
    if (!E.B.contains(*fx.value)) {
      add(x, 'A', ViolationKind::EscapesCodomain, "forward gives " + format(*fx.value) + " outside " + E.B.name());
      continue;
    }
    auto back = E.backward.run(*fx.value);
    if (back.timed_out) {
      add(x, 'A', ViolationKind::ClockBreach, "backward exceeded " + E.backward.bound().to_string());
    } else if (!back.value || !(*back.value == x)) {
      add(x, 'A', ViolationKind::RoundtripFailure,
          "backward(" + format(*fx.value) + ") = " + detail::show(back.value));
    }
  }

  for (const Str& y : enumerate_upto(E.B, n)) {
    ++report.checked_b;
    auto gy = E.backward.run(y);
    detail::note_steps(report, y.size(), gy.steps);
    if (gy.timed_out) {
      add(y, 'B', ViolationKind::ClockBreach, "backward exceeded " + E.backward.bound().to_string());
      continue;
    }
    if (!gy.value) {
      add(y, 'B', ViolationKind::RoundtripFailure, "backward undefined");
      continue;
    }
    if (!E.A.contains(*gy.value)) {
      add(y, 'B', ViolationKind::EscapesCodomain, "backward gives " + format(*gy.value) + " outside " + E.A.name());
      continue;
    }
    auto fwd = E.forward.run(*gy.value);
    if (fwd.timed_out) {
      add(y, 'B', ViolationKind::ClockBreach, "forward exceeded " + E.forward.bound().to_string());
    } else if (!fwd.value || !(*fwd.value == y)) {
      add(y, 'B', ViolationKind::RoundtripFailure,
          "forward(" + format(*gy.value) + ") = " + detail::show(fwd.value));
    }
  }
  return report;
}

struct MapAudit {
  std::size_t checked_up_to = 0;
  bool injective = true;
  std::optional<std::pair<Str, Str>> collision;
  bool length_increasing = true;
  std::optional<Str> not_increasing_at;
  /// Least k with |x| <= |f(x)|^k + k over all defined inputs.
  std::optional<unsigned> honest_with;
  std::vector<Str> timeouts;
  std::size_t defined = 0;
};

/// Audits f on its declared domain (or all of Σ^{<=n}) up to length n.
inline MapAudit audit_map(const PartialMap& f, std::size_t n) {
  MapAudit audit;
  audit.checked_up_to = n;
  std::vector<Str> inputs;
  if (f.domain()) {
    inputs = enumerate_upto(*f.domain(), n);
  } else {
    if (!enumeration_feasible(f.source(), n)) throw InfeasibleError("audit_map infeasible up to length " + std::to_string(n));
    for_each_upto(f.source(), n, [&](const Str& x) { inputs.push_back(x); });
  }
  std::unordered_map<Str, Str> seen;
  unsigned k = 0;
  for (const Str& x : inputs) {
    auto r = f.run(x);
    if (r.timed_out) {
      audit.timeouts.push_back(x);
      continue;
    }
    if (!r.value) continue;
    const Str& y = *r.value;
    ++audit.defined;
    auto [it, fresh] = seen.emplace(y, x);
    if (!fresh && audit.injective) {
      audit.injective = false;
      audit.collision = std::make_pair(it->second, x);
    }
    if (y.size() <= x.size() && audit.length_increasing) {
      audit.length_increasing = false;
      audit.not_increasing_at = x;
    }
    while (x.size() > sat_add(sat_pow(y.size(), k), k)) ++k;
  }
  if (audit.defined > 0) audit.honest_with = k;
  return audit;
}

// ---------------------------------------------------------------------------
// Canonical witnesses and combinators.

inline Equipollence identity_witness(const Language& L) {
  auto id = maps::identity(L.alphabet());
  return make_equipollence("identity_w(" + L.name() + ")", id, id, L, L);
}

/// Σ* ≈ wΣ* by prepending w.
inline Equipollence prepend_witness(const Str& w) {
  auto p = maps::prepend(w);
  return make_equipollence("prepend_w(" + quoted(w) + ")", p, *p.inverse(), gallery::sigma_star(w.alphabet()),
                           gallery::prefix(w));
}

/// Σ* ≈ Σ* ⊕ Σ*.
inline Equipollence sigma_self_sum(Alphabet a) {
  auto S = gallery::sigma_star(a);
  return make_equipollence("sigma_self_sum(" + std::to_string(a.size()) + ")", maps::self_sum_forward(a),
                           maps::self_sum_backward(a), S, gallery::oplus(S, S));
}

/// Σ* ≈ Σ* × Σ*.
inline Equipollence sigma_self_product(Alphabet a) {
  auto S = gallery::sigma_star(a);
  auto m = maps::repair(a);
  return make_equipollence("sigma_self_product(" + std::to_string(a.size()) + ")", m, m, S, gallery::times(S, S));
}

/// Σ* ≈ A_n, shifting every string up n places.
inline Equipollence shift_witness(Alphabet a, long long n) {
  if (n < 0) throw PreconditionError("shift(): negative shift");
  auto f = maps::add(a, n);
  return make_equipollence("shift(" + std::to_string(a.size()) + ", " + std::to_string(n) + ")", f, *f.inverse(),
                           gallery::sigma_star(a), gallery::shift_set(a, n));
}

inline Equipollence inverse(const Equipollence& E) {
  return Equipollence{"inverse(" + E.name + ")", E.backward, E.forward, E.B, E.A};
}

/// E : A ≈ B restricted to X ⊆ A gives X ≈ E(X); y lies in E(X) iff its
/// backward image lies in X and maps forward to y again.
inline Equipollence restrict_witness(const Equipollence& E, const Language& X) {
  if (X.alphabet() != E.A.alphabet()) throw PreconditionError("restrict(): alphabet mismatch");
  const PartialMap f = E.forward, g = E.backward;
  Language image(
      "image(" + E.name + ", " + X.name() + ")", E.B.alphabet(),
      [f, g, X](const Str& y, Clock& c) {
        auto x = g.call(y, c);
        if (!x || !X.member_on(*x, c)) return false;
        auto back = f.call(*x, c);
        return back && *back == y;
      },
      {}, X.fuel_limit());
  return make_equipollence("restrict(" + E.name + ", " + X.name() + ")", f, g, X, image);
}

/// E1 : A ≈ B and E2 : B ≈ C give A ≈ C; E1 is applied first. When E2 starts
/// from Σ* instead of B, it is first restricted to B.
inline Equipollence compose_witness(const Equipollence& E1, const Equipollence& E2) {
  if (!same_language(E1.B, E2.A) && same_language(E2.A, gallery::sigma_star(E2.A.alphabet())) &&
      E1.B.alphabet() == E2.A.alphabet()) {
    const Equipollence R = restrict_witness(E2, E1.B);
    return make_equipollence("compose(" + E1.name + ", " + E2.name + ")", maps::compose(E1.forward, R.forward),
                             maps::compose(R.backward, E1.backward), E1.A, R.B);
  }
  if (!same_language(E1.B, E2.A)) {
    throw PreconditionError("compose(): endpoint mismatch, " + E1.B.name() + " vs " + E2.A.name());
  }
  return make_equipollence("compose(" + E1.name + ", " + E2.name + ")", maps::compose(E1.forward, E2.forward),
                           maps::compose(E2.backward, E1.backward), E1.A, E2.B);
}

inline Equipollence oplus_witness(const Equipollence& E1, const Equipollence& E2) {
  return make_equipollence("oplus_w(" + E1.name + ", " + E2.name + ")", maps::oplus(E1.forward, E2.forward),
                           maps::oplus(E1.backward, E2.backward), gallery::oplus(E1.A, E2.A),
                           gallery::oplus(E1.B, E2.B));
}

inline Equipollence times_witness(const Equipollence& E1, const Equipollence& E2) {
  return make_equipollence("times_w(" + E1.name + ", " + E2.name + ")", maps::times(E1.forward, E2.forward),
                           maps::times(E1.backward, E2.backward), gallery::times(E1.A, E2.A),
                           gallery::times(E1.B, E2.B));
}

/// A ⊕ B ≈ B ⊕ A by flipping the tag.
inline Equipollence commutator(const Language& A, const Language& B) {
  auto f = maps::flip(A.alphabet());
  return make_equipollence("commutator(" + A.name() + ", " + B.name() + ")", f, f, gallery::oplus(A, B),
                           gallery::oplus(B, A));
}

/// (A ⊕ B) ⊕ C ≈ A ⊕ (B ⊕ C): 00a -> 0a, 01b -> 10b, 1c -> 11c.
inline Equipollence associator(const Language& A, const Language& B, const Language& C) {
  Alphabet a = A.alphabet();
  auto fwd = maps::detail::primitive("assoc_forward(" + std::to_string(a.size()) + ")", a, a, 3,
                                     [](const Str& x) -> std::optional<Str> {
                                       const auto& s = x.symbols();
                                       if (s.starts_with("00")) return x.drop_front(1);
                                       if (s.starts_with("01")) return x.drop_front(2).with_front(0).with_front(1);
                                       if (s.starts_with("1")) return x.with_front(1);
                                       return std::nullopt;
                                     });
  auto bwd = maps::detail::primitive("assoc_backward(" + std::to_string(a.size()) + ")", a, a, 3,
                                     [](const Str& x) -> std::optional<Str> {
                                       const auto& s = x.symbols();
                                       if (s.starts_with("0")) return x.with_front(0);
                                       if (s.starts_with("10")) return x.drop_front(2).with_front(1).with_front(0);
                                       if (s.starts_with("11")) return x.drop_front(1);
                                       return std::nullopt;
                                     });
  return make_equipollence("associator(" + A.name() + ", " + B.name() + ", " + C.name() + ")", fwd, bwd,
                           gallery::oplus(gallery::oplus(A, B), C), gallery::oplus(A, gallery::oplus(B, C)));
}

}  // namespace pcard
