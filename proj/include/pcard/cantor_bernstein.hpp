#pragma once

// Bijections from pairs of length-increasing injections by chain
// classification in the back-and-forth graph.

#include <optional>
#include <string>
#include <vector>

#include "pcard/witness.hpp"

namespace pcard {

enum class Side { A, B };
enum class Origin { SourceInA, SourceInB };

inline std::string to_string(Origin o) { return o == Origin::SourceInA ? "SourceInA" : "SourceInB"; }

struct ChainVerdict {
  Origin origin;
  std::vector<Str> walk;  // the start vertex followed by its predecessors
  std::uint64_t steps_used = 0;
};

/// The two injections p : A -> B and q : B -> A with their inverses.
struct InjectionPair {
  Language A;
  Language B;
  PartialMap p;
  PartialMap q;
  PartialMap p_inv;
  PartialMap q_inv;
};

class CbAuditError : public PreconditionError {
 public:
  CbAuditError(const std::string& what, Str offending) : PreconditionError(what), offending_(std::move(offending)) {}
  const Str& offending() const { return offending_; }

 private:
  Str offending_;
};

inline InjectionPair make_injection_pair(Language A, Language B, PartialMap p, PartialMap q) {
  if (!p.inverse() || !q.inverse()) throw PreconditionError("cb: both maps need an attached inverse");
  PartialMap pi = *p.inverse(), qi = *q.inverse();
  return InjectionPair{std::move(A), std::move(B), std::move(p), std::move(q), std::move(pi), std::move(qi)};
}

namespace detail {

inline bool member_charged(const Language& L, const Str& x, std::uint64_t& steps) {
  auto r = L.decide(x);
  steps += r.steps;
  if (r.verdict == Verdict::Exhausted) throw FuelExhausted("membership of " + format(x) + " in " + L.name());
  return r.verdict == Verdict::Member;
}

/// The hatted inverse: inv(v) if it lands in `domain` and `fwd` maps it back
/// to v; nothing otherwise (including on timeout).
inline std::optional<Str> hatted(const PartialMap& inv, const PartialMap& fwd, const Language& domain, const Str& v,
                                 std::uint64_t& steps) {
  auto r = inv.run(v);
  steps += r.steps;
  if (!r.value) return std::nullopt;
  if (!member_charged(domain, *r.value, steps)) return std::nullopt;
  auto back = fwd.run(*r.value);
  steps += back.steps;
  if (!back.value || !(*back.value == v)) return std::nullopt;
  return r.value;
}

}  // namespace detail

/// Follows predecessors from vertex (side, x) until a source is reached.
inline ChainVerdict classify(const Str& x, Side side, const InjectionPair& P) {
  ChainVerdict v{Origin::SourceInA, {x}, 0};
  Str cur = x;
  Side at = side;
  const std::size_t max_hops = x.size() + 1;
  for (std::size_t hops = 0;; ++hops) {
    auto pred = at == Side::A ? detail::hatted(P.q_inv, P.q, P.B, cur, v.steps_used)
                              : detail::hatted(P.p_inv, P.p, P.A, cur, v.steps_used);
    if (!pred) {
      v.origin = at == Side::A ? Origin::SourceInA : Origin::SourceInB;
      return v;
    }
    if (pred->size() >= cur.size()) {
      throw InvariantBreach("maps not length-increasing: predecessor of " + format(cur) + " is " + format(*pred));
    }
    if (hops + 1 > max_hops) throw InvariantBreach("chain walk from " + format(x) + " exceeded |x|+1 hops");
    v.walk.push_back(*pred);
    cur = *pred;
    at = at == Side::A ? Side::B : Side::A;
  }
}

/// Audits p on A and q on B for injectivity and strict length increase.
inline void audit_injection_pair(const InjectionPair& P, std::size_t n) {
  auto check = [n](const PartialMap& f, const Language& dom, const char* label) {
    auto a = audit_map(f.with_domain(dom), n);
    if (!a.injective) {
      throw CbAuditError(std::string(label) + " is not injective: " + format(a.collision->first) + " and " +
                             format(a.collision->second) + " collide",
                         a.collision->second);
    }
    if (!a.length_increasing) {
      throw CbAuditError(std::string(label) + " is not length-increasing at " + format(*a.not_increasing_at),
                         *a.not_increasing_at);
    }
    if (!a.timeouts.empty()) {
      throw CbAuditError(std::string(label) + " timed out at " + format(a.timeouts.front()), a.timeouts.front());
    }
  };
  check(P.p, P.A, "p");
  check(P.q, P.B, "q");
}

namespace detail {

inline TimeBound cb_bound(const PartialMap& inv1, const PartialMap& fwd1, const PartialMap& inv2,
                          const PartialMap& fwd2) {
  TimeBound hop = bound_max(bound_sequence(inv1.bound(), fwd1.bound()), bound_sequence(inv2.bound(), fwd2.bound()));
  return bound_plus(bound_rounds(bound_plus(hop, linear(16))), bound_max(fwd1.bound(), inv2.bound()));
}

}  // namespace detail

/// φ(x) = p(x) when x's chain has its source in A, q^{-1}(x) otherwise; ψ is
/// the symmetric map on B. Audits the pair up to `audit_upto` first.
inline Equipollence cb_witness(const InjectionPair& P, std::size_t audit_upto) {
  audit_injection_pair(P, audit_upto);
  PartialMap phi(
      "cb_phi(" + P.p.name() + ", " + P.q.name() + ")", P.A.alphabet(), P.B.alphabet(),
      [P](const Str& x, Clock& clock) -> std::optional<Str> {
        auto v = classify(x, Side::A, P);
        clock.charge(v.steps_used);
        if (v.origin == Origin::SourceInA) return P.p.call(x, clock);
        return v.walk[1];
      },
      detail::cb_bound(P.q_inv, P.q, P.p_inv, P.p));
  PartialMap psi(
      "cb_psi(" + P.p.name() + ", " + P.q.name() + ")", P.B.alphabet(), P.A.alphabet(),
      [P](const Str& y, Clock& clock) -> std::optional<Str> {
        auto v = classify(y, Side::B, P);
        clock.charge(v.steps_used);
        if (v.origin == Origin::SourceInB) return P.q.call(y, clock);
        return v.walk[1];
      },
      detail::cb_bound(P.p_inv, P.p, P.q_inv, P.q));
  return make_equipollence("cb(" + P.p.name() + ", " + P.q.name() + ", " + P.A.name() + ", " + P.B.name() + ")",
                           phi, psi, P.A, P.B);
}

}  // namespace pcard
