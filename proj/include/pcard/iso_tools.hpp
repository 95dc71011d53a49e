#pragma once

// Total isomorphisms assembled from equipollences, enumeration and
// compression maps, reductions extracted from witnesses, and cylinders.

#include <optional>
#include <string>
#include <vector>

#include "pcard/ranking.hpp"
#include "pcard/witness.hpp"

namespace pcard {

namespace detail {

inline void require_clean(const Equipollence& E, std::size_t n) {
  auto r = verify_equipollence(E, n);
  if (!r.clean()) {
    const auto& v = r.violations.front();
    throw PreconditionError("witness " + E.name + " fails verification at " + format(v.input) + ": " +
                            to_string(v.kind));
  }
}

/// True when L has a member of length exactly n (evidence of infinitude).
inline bool has_member_of_length(const Language& L, std::size_t n) {
  return census(L, n) > census_signed(L, static_cast<long long>(n) - 1);
}

inline std::string sigma_name(Alphabet a) { return gallery::sigma_star(a).name(); }

}  // namespace detail

/// Agreement of membership under a total map: x in `from` iff h(x) in `to`.
struct MembershipAudit {
  std::size_t checked = 0;
  std::vector<Str> mismatches;
  std::vector<Str> undefined;
  bool clean() const { return mismatches.empty() && undefined.empty(); }
};

inline MembershipAudit audit_membership(const PartialMap& h, const Language& from, const Language& to, std::size_t n) {
  MembershipAudit out;
  for_each_upto(h.source(), n, [&](const Str& x) {
    ++out.checked;
    auto y = h(x);
    if (!y) {
      out.undefined.push_back(x);
      return;
    }
    if (from.contains(x) != to.contains(*y)) out.mismatches.push_back(x);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism from equipollences of a set and of its complement.

enum class DualPath { SingleF, SingleG, Agree, Disambiguated, None };

inline std::string to_string(DualPath p) {
  switch (p) {
    case DualPath::SingleF: return "single_f";
    case DualPath::SingleG: return "single_g";
    case DualPath::Agree: return "agree";
    case DualPath::Disambiguated: return "disambiguated";
    case DualPath::None: return "none";
  }
  return "?";
}

struct DualTrace {
  DualPath path;
  std::optional<Str> value;
  std::uint64_t steps = 0;
};

/// φ(x) = f(x) on A and g(x) off A.
inline std::optional<Str> iso_phi(const Equipollence& E, const Equipollence& Ec, const Str& x, Clock* clock = nullptr) {
  auto r = E.A.decide(x);
  if (clock) clock->charge(r.steps);
  if (r.verdict == Verdict::Exhausted) throw FuelExhausted("membership in " + E.A.name());
  const PartialMap& m = r.verdict == Verdict::Member ? E.forward : Ec.forward;
  if (clock) return m.call(x, *clock);
  return m(x);
}

/// φ^{-1}: run both inverses under their clocks; when both answer with
/// different strings keep the one that φ maps back to x.
inline DualTrace dual_inverse(const Equipollence& E, const Equipollence& Ec, const Str& x) {
  DualTrace t{DualPath::None, std::nullopt, 0};
  auto y = E.backward.run(x);
  auto z = Ec.backward.run(x);
  t.steps = y.steps + z.steps;
  if (y.value && !z.value) return {DualPath::SingleF, y.value, t.steps};
  if (z.value && !y.value) return {DualPath::SingleG, z.value, t.steps};
  if (!y.value) return t;
  if (*y.value == *z.value) return {DualPath::Agree, y.value, t.steps};
  Clock clock(std::numeric_limits<std::uint64_t>::max());
  if (iso_phi(E, Ec, *y.value, &clock) == std::optional<Str>(x)) t.value = y.value;
  else if (iso_phi(E, Ec, *z.value, &clock) == std::optional<Str>(x)) t.value = z.value;
  t.steps += clock.used();
  t.path = t.value ? DualPath::Disambiguated : DualPath::None;
  return t;
}

/// Total bijection Σ* -> Γ* carrying A onto B, from E : A ≈ B and Ec : Ā ≈ B̄.
inline Equipollence iso_from_complements(const Equipollence& E, const Equipollence& Ec) {
  if (!same_language(Ec.A, gallery::complement(E.A)) || !same_language(Ec.B, gallery::complement(E.B))) {
    throw PreconditionError("iso_from_complements: second witness must relate " + gallery::complement(E.A).name() +
                            " and " + gallery::complement(E.B).name());
  }
  const TimeBound fwd_bound = bound_plus(bound_max(E.forward.bound(), Ec.forward.bound()), linear(8));
  const TimeBound inv = bound_plus(E.backward.bound(), Ec.backward.bound());
  const TimeBound bwd_bound = bound_plus(bound_plus(inv, bound_scale(bound_after(fwd_bound, inv), 2)), linear(2));
  PartialMap phi(
      "iso_phi(" + E.name + ", " + Ec.name + ")", E.A.alphabet(), E.B.alphabet(),
      [E, Ec](const Str& x, Clock& clock) { return iso_phi(E, Ec, x, &clock); }, fwd_bound);
  PartialMap phi_inv(
      "iso_phi_inv(" + E.name + ", " + Ec.name + ")", E.B.alphabet(), E.A.alphabet(),
      [E, Ec](const Str& x, Clock& clock) {
        auto t = dual_inverse(E, Ec, x);
        clock.charge(t.steps);
        return t.value;
      },
      bwd_bound);
  return make_equipollence("iso(" + E.name + ", " + Ec.name + ")", phi, phi_inv, gallery::sigma_star(E.A.alphabet()),
                           gallery::sigma_star(E.B.alphabet()));
}

// ---------------------------------------------------------------------------
// Maps built from a witness L ≈ Σ*.

/// f̂(x) = f(x) on L and x elsewhere.
inline PartialMap compress_extend(const Equipollence& E) {
  const Language L = E.A;
  const PartialMap f = E.forward;
  return PartialMap(
      "compress(" + E.name + ")", L.alphabet(), E.B.alphabet(),
      [L, f](const Str& x, Clock& clock) -> std::optional<Str> {
        auto r = L.decide(x);
        clock.charge(r.steps);
        if (r.verdict == Verdict::Exhausted) throw OutOfFuel{};
        if (r.verdict == Verdict::Member) return f.call(x, clock);
        clock.charge(x.size());
        return x;
      },
      bound_plus(f.bound(), linear(8)));
}

struct Enumeration {
  Str x0;
  PartialMap step;          // x -> f^{-1}(f(x) + 1)
  PartialMap step_inverse;  // x -> f^{-1}(f(x) - 1)

  /// The first `count` iterates starting from x0.
  std::vector<Str> iterate(std::size_t count) const {
    std::vector<Str> out;
    if (count == 0) return out;
    out.push_back(x0);
    while (out.size() < count) {
      auto next = step(out.back());
      if (!next) break;
      out.push_back(*next);
    }
    return out;
  }
};

inline Enumeration enum_by_iteration(const Equipollence& E) {
  auto x0 = E.backward(Str(E.B.alphabet()));
  if (!x0) throw PreconditionError("enum_by_iteration: backward map undefined at the empty string");
  auto make = [&E](long long delta, const std::string& label) {
    auto shift = maps::add(E.B.alphabet(), delta);
    return maps::compose(maps::compose(E.forward, shift), E.backward).renamed(label + "(" + E.name + ")");
  };
  return Enumeration{*x0, make(1, "enum_step"), make(-1, "enum_step_inverse")};
}

// ---------------------------------------------------------------------------
// Many-one reduction B -> A from a witness A ≈ B.

enum class ReductionPath { Timeout, Undefined, Mismatch, Accepted };

inline std::string to_string(ReductionPath p) {
  switch (p) {
    case ReductionPath::Timeout: return "timeout";
    case ReductionPath::Undefined: return "undefined";
    case ReductionPath::Mismatch: return "mismatch";
    case ReductionPath::Accepted: return "accepted";
  }
  return "?";
}

struct ReductionTrace {
  ReductionPath path;
  Str value;
  std::uint64_t steps = 0;
};

/// Runs the inverse under its clock, falls back to a0 on timeout, no output,
/// or a failed forward round trip.
inline ReductionTrace reduction_trace(const Equipollence& E, const Str& a0, const Str& x) {
  auto back = E.backward.run(x);
  if (back.timed_out) return {ReductionPath::Timeout, a0, back.steps};
  if (!back.value) return {ReductionPath::Undefined, a0, back.steps};
  auto fwd = E.forward.run(*back.value);
  const std::uint64_t steps = back.steps + fwd.steps;
  if (fwd.timed_out || !fwd.value || !(*fwd.value == x)) return {ReductionPath::Mismatch, a0, steps};
  return {ReductionPath::Accepted, *back.value, steps};
}

inline PartialMap reduction_from_witness(const Equipollence& E, const Str& a0) {
  if (a0.alphabet() != E.A.alphabet()) throw PreconditionError("reduce: a0 has the wrong alphabet");
  if (E.A.contains(a0)) throw PreconditionError("reduce: a0 = " + format(a0) + " must lie outside " + E.A.name());
  const TimeBound bwd = E.backward.bound();
  TimeBound bound = bound_plus(bound_plus(bwd, bound_after(E.forward.bound(), bwd)), linear(a0.size() + 4));
  return PartialMap(
      "reduce(" + E.name + ", " + quoted(a0) + ")", E.B.alphabet(), E.A.alphabet(),
      [E, a0](const Str& x, Clock& clock) -> std::optional<Str> {
        auto t = reduction_trace(E, a0, x);
        clock.charge(t.steps + t.value.size());
        return t.value;
      },
      bound);
}

/// Decision procedure for B read off the reduction: x in B iff r(x) in A.
inline Language decider_from_witness(const Equipollence& E, const Str& a0) {
  const PartialMap r = reduction_from_witness(E, a0);
  const Language A = E.A;
  return Language(
      "reduce_decider(" + E.name + ", " + quoted(a0) + ")", E.B.alphabet(),
      [r, A](const Str& x, Clock& clock) {
        auto y = r.call(x, clock);
        return y && A.member_on(*y, clock);
      },
      {}, A.fuel_limit());
}

// ---------------------------------------------------------------------------
// Total isomorphisms from witnesses to Σ*.

/// Tagged total injection x -> 0 f1(x) on A, 1 f2(x) off A, with inverse.
inline std::pair<PartialMap, PartialMap> tagged_total(const Equipollence& f1, const Equipollence& f2,
                                                      const std::string& label) {
  const Language A = f1.A;
  const Alphabet a = A.alphabet();
  PartialMap f(
      label + "(" + f1.name + ", " + f2.name + ")", a, a,
      [A, f1, f2](const Str& x, Clock& clock) -> std::optional<Str> {
        auto r = A.decide(x);
        clock.charge(r.steps + 1);
        if (r.verdict == Verdict::Exhausted) throw OutOfFuel{};
        const bool in = r.verdict == Verdict::Member;
        auto y = (in ? f1.forward : f2.forward).call(x, clock);
        if (!y) return std::nullopt;
        return y->with_front(in ? 0 : 1);
      },
      bound_plus(bound_max(f1.forward.bound(), f2.forward.bound()), linear(8)));
  PartialMap finv(
      label + "_inv(" + f1.name + ", " + f2.name + ")", a, a,
      [f1, f2](const Str& y, Clock& clock) -> std::optional<Str> {
        clock.charge(1);
        if (y.empty() || y.at(0) > 1) return std::nullopt;
        return (y.at(0) == 0 ? f1.backward : f2.backward).call(y.drop_front(1), clock);
      },
      bound_plus(bound_max(f1.backward.bound(), f2.backward.bound()), linear(2)));
  return {f, finv};
}

/// h = f^{-1} ∘ g, a total bijection carrying B onto A, from witnesses of
/// A, Ā, B, B̄ with Σ*. Each witness is verified up to `verify_upto`.
inline Equipollence ghk_iso(const Equipollence& fA, const Equipollence& fAc, const Equipollence& gB,
                            const Equipollence& gBc, std::size_t verify_upto = 6, std::size_t probe_len = 8) {
  const Alphabet a = fA.A.alphabet();
  for (const auto* E : {&fA, &fAc, &gB, &gBc}) {
    if (E->B.name() != detail::sigma_name(a)) throw PreconditionError("ghk: witness " + E->name + " must end in sigma_star");
    if (!detail::has_member_of_length(E->A, probe_len)) {
      throw PreconditionError("ghk: " + E->A.name() + " must be infinite; no member of length " +
                              std::to_string(probe_len));
    }
  }
  if (!same_language(fAc.A, gallery::complement(fA.A)) || !same_language(gBc.A, gallery::complement(gB.A))) {
    throw PreconditionError("ghk: complement witnesses must start from the complements");
  }
  for (const auto* E : {&fA, &fAc, &gB, &gBc}) detail::require_clean(*E, verify_upto);
  auto [f, finv] = tagged_total(fA, fAc, "ghk_f");
  auto [g, ginv] = tagged_total(gB, gBc, "ghk_g");
  return make_equipollence("ghk(" + fA.name + ", " + fAc.name + ", " + gB.name + ", " + gBc.name + ")",
                           maps::compose(g, finv), maps::compose(f, ginv), gallery::sigma_star(a),
                           gallery::sigma_star(a));
}

/// Total iso Σ* ≈ Σ*×Σ* carrying A onto A×Σ*, from A ≈ Σ* and Ā ≈ Σ*.
inline Equipollence cylinder_witness(const Equipollence& EA, const Equipollence& EAc, std::size_t verify_upto = 6,
                                     std::size_t probe_len = 8) {
  const Alphabet a = EA.A.alphabet();
  const Language S = gallery::sigma_star(a);
  if (!same_language(EAc.A, gallery::complement(EA.A))) {
    throw PreconditionError("cylinder: second witness must start from " + gallery::complement(EA.A).name());
  }
  for (const auto* E : {&EA, &EAc}) {
    if (E->B.name() != S.name()) throw PreconditionError("cylinder: witness " + E->name + " must end in sigma_star");
    if (!detail::has_member_of_length(E->A, probe_len)) {
      throw PreconditionError("cylinder: " + E->A.name() + " must be infinite; no member of length " +
                              std::to_string(probe_len));
    }
    detail::require_clean(*E, verify_upto);
  }
  // X ≈ Σ* ≈ Σ*×Σ* ≈ X×Σ*
  auto lift = [&](const Equipollence& E) {
    return compose_witness(compose_witness(E, sigma_self_product(a)), times_witness(inverse(E), identity_witness(S)));
  };
  const Equipollence f = lift(EA), g = lift(EAc);
  const Language A = EA.A;
  PartialMap h(
      "cylinder_h(" + EA.name + ", " + EAc.name + ")", a, a,
      [A, f, g](const Str& x, Clock& clock) -> std::optional<Str> {
        auto r = A.decide(x);
        clock.charge(r.steps);
        if (r.verdict == Verdict::Exhausted) throw OutOfFuel{};
        return (r.verdict == Verdict::Member ? f.forward : g.forward).call(x, clock);
      },
      bound_plus(bound_max(f.forward.bound(), g.forward.bound()), linear(8)));
  PartialMap hinv(
      "cylinder_h_inv(" + EA.name + ", " + EAc.name + ")", a, a,
      [A, f, g](const Str& y, Clock& clock) -> std::optional<Str> {
        clock.charge(y.size());
        auto [first, rest] = unpair(y);
        auto r = A.decide(first);
        clock.charge(r.steps);
        if (r.verdict == Verdict::Exhausted) throw OutOfFuel{};
        return (r.verdict == Verdict::Member ? f.backward : g.backward).call(y, clock);
      },
      bound_plus(bound_max(f.backward.bound(), g.backward.bound()), linear(8)));
  return make_equipollence("cylinder(" + EA.name + ", " + EAc.name + ")", h, hinv, S, gallery::times(S, S));
}

}  // namespace pcard
