#pragma once

// Finite-horizon simulation of the stage construction that places a language
// C strictly between A and B. Every case predicate is decided by exhaustive
// search over strings of length <= H; a search that finds nothing yields
// INCONCLUSIVE and leaves the state untouched.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcard/witness.hpp"

namespace pcard {

struct CatalogEntry {
  std::string name;
  PartialMap alpha;
  PartialMap beta;
};

/// Finite list of (M_alpha, M_beta) pairs. Requirement index k is decoded as
/// (alpha, beta) = cantor_unpair(k) for the log; the entry used is k mod size.
struct MachineCatalog {
  std::vector<CatalogEntry> pairs;

  std::size_t size() const { return pairs.size(); }
  const CatalogEntry& at_requirement(const Nat& k) const {
    if (pairs.empty()) throw PreconditionError("diag: empty catalog");
    return pairs[static_cast<std::size_t>(k % pairs.size())];
  }
};

enum class StageKind { Init, Grow, R1, R2 };
enum class StageVerdict { Applied, Inconclusive };

inline std::string to_string(StageKind k) {
  switch (k) {
    case StageKind::Init: return "init";
    case StageKind::Grow: return "grow";
    case StageKind::R1: return "R1";
    case StageKind::R2: return "R2";
  }
  return "?";
}

inline std::string to_string(StageVerdict v) { return v == StageVerdict::Applied ? "APPLIED" : "INCONCLUSIVE"; }

struct StageRecord {
  std::uint64_t stage = 0;  // the index of the state this stage produced
  StageKind kind = StageKind::Init;
  std::optional<Nat> requirement;  // k with s = 3k + 1 or 3k + 2
  std::optional<std::pair<Nat, Nat>> indices;
  std::string pair_name;
  std::string case_label;     // "1", "2" or "" for grow/inconclusive
  std::string subcase_label;  // "2.1" .. "2.4", "1.1" .. "1.3" or ""
  std::vector<Str> added;
  std::vector<Str> excluded;
  StageVerdict verdict = StageVerdict::Applied;
};

struct DiagState {
  std::uint64_t stage = 0;
  std::vector<Str> added;     // C_s \ A, in insertion order
  std::vector<Str> excluded;  // E_s, in insertion order
  std::vector<StageRecord> log;

  bool in_added(const Str& x) const { return std::find(added.begin(), added.end(), x) != added.end(); }
  bool in_excluded(const Str& x) const { return std::find(excluded.begin(), excluded.end(), x) != excluded.end(); }
};

inline DiagState initial_state() {
  DiagState s;
  s.log.push_back(StageRecord{});
  return s;
}

namespace detail {

struct DiagContext {
  const Language& A;
  const Language& B;
  const DiagState& state;
  std::size_t H;

  bool in_A(const Str& x) const { return A.contains(x); }
  bool in_B(const Str& x) const { return B.contains(x); }
  bool in_C(const Str& x) const { return state.in_added(x) || A.contains(x); }

  std::vector<Str> members_A() const { return enumerate_upto(A, H); }
  std::vector<Str> members_B() const { return enumerate_upto(B, H); }
  std::vector<Str> members_C() const {
    auto out = enumerate_upto(A, H);
    for (const auto& x : state.added)
      if (x.size() <= H) out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

/// First collision of f on xs (xs in length-lex order), reported as the pair of inputs.
inline std::optional<std::pair<Str, Str>> first_collision(const PartialMap& f, const std::vector<Str>& xs) {
  std::map<Str, Str> seen;
  for (const auto& x : xs) {
    auto y = f(x);
    if (!y) continue;
    auto [it, fresh] = seen.emplace(*y, x);
    if (!fresh) return std::make_pair(it->second, x);
  }
  return std::nullopt;
}

inline void check_state(const DiagContext& ctx) {
  for (const auto& x : ctx.state.added) {
    if (!ctx.in_B(x)) throw InvariantBreach("diag: added string " + format(x) + " is outside B");
    if (ctx.state.in_excluded(x)) throw InvariantBreach("diag: " + format(x) + " is both added and excluded");
  }
  for (const auto& x : ctx.state.excluded) {
    if (!ctx.in_B(x)) throw InvariantBreach("diag: excluded string " + format(x) + " is outside B");
    if (ctx.in_A(x)) throw InvariantBreach("diag: excluded string " + format(x) + " lies in A");
  }
}

inline StageRecord grow_stage(const DiagContext& ctx) {
  StageRecord r;
  r.kind = StageKind::Grow;
  for (const auto& y : ctx.members_B()) {
    if (ctx.in_C(y) || ctx.state.in_excluded(y)) continue;
    r.added.push_back(y);
    return r;
  }
  r.verdict = StageVerdict::Inconclusive;
  return r;
}

inline void r1_stage(const DiagContext& ctx, const CatalogEntry& e, StageRecord& r) {
  const PartialMap &Ma = e.alpha, &Mb = e.beta;
  const auto As = ctx.members_A();
  // Case 1: a counterexample to "M_alpha restricted to A is an equipollence
  // into B with inverse M_beta" within the horizon.
  bool case1 = false;
  for (const auto& a : As) {
    auto y = Ma(a);
    if (!y || !ctx.in_B(*y) || Mb(*y) != std::optional<Str>(a)) {
      case1 = true;
      break;
    }
  }
  if (!case1 && first_collision(Ma, As)) case1 = true;
  if (case1) {
    r.case_label = "1";
    return;
  }
  r.case_label = "2";
  std::vector<Str> Y;
  for (const auto& y : ctx.members_B())
    if (!ctx.state.in_excluded(y)) Y.push_back(y);
  for (const auto& y : Y) {
    if (!Mb(y)) {
      r.subcase_label = "2.1";
      r.added.push_back(y);
      return;
    }
  }
  if (auto c = first_collision(Mb, Y)) {
    r.subcase_label = "2.2";
    r.added = {c->first, c->second};
    return;
  }
  for (const auto& y : Y) {
    if (!ctx.in_A(*Mb(y))) {
      r.subcase_label = "2.3";
      r.added.push_back(y);
      return;
    }
  }
  for (const auto& y : Y) {
    if (Ma(*Mb(y)) != std::optional<Str>(y)) {
      r.subcase_label = "2.4";
      r.added.push_back(y);
      return;
    }
  }
  r.case_label.clear();
  r.verdict = StageVerdict::Inconclusive;
}

inline void r2_stage(const DiagContext& ctx, const CatalogEntry& e, StageRecord& r) {
  const PartialMap &Ma = e.alpha, &Mb = e.beta;
  const auto Cs = ctx.members_C();
  for (const auto& c : Cs) {
    auto y = Ma(c);
    if (y && !ctx.in_B(*y)) {
      r.case_label = "1";
      r.subcase_label = "1.1";
      return;
    }
  }
  bool not_equi = false;
  for (const auto& c : Cs) {
    auto y = Ma(c);
    if (!y || Mb(*y) != std::optional<Str>(c)) {
      not_equi = true;
      break;
    }
  }
  if (not_equi || first_collision(Ma, Cs)) {
    r.case_label = "1";
    r.subcase_label = "1.2";
    return;
  }
  // x lies in M_alpha(C_s) iff M_beta(x) is in C_s and maps back to x.
  auto in_image = [&](const Str& x, const std::optional<Str>& bx) { return bx && ctx.in_C(*bx) && Ma(*bx) == std::optional<Str>(x); };
  std::vector<Str> X;
  for (const auto& x : ctx.members_B()) {
    if (ctx.state.in_excluded(x)) continue;
    auto bx = Mb(x);
    if (in_image(x, bx)) continue;
    if (!bx) {
      r.case_label = "1";
      r.subcase_label = "1.3";
      return;
    }
    X.push_back(x);
  }
  // Case 2 excludes x; strings already in C_s are skipped to keep C and E disjoint.
  for (const auto& x : X) {
    if (ctx.in_C(x)) continue;
    if (!ctx.in_C(*Mb(x))) {
      r.case_label = "2";
      r.excluded.push_back(x);
      return;
    }
  }
  r.verdict = StageVerdict::Inconclusive;
}

}  // namespace detail

/// Advances the construction by one stage.
inline DiagState run_stage(const DiagState& state, const Language& A, const Language& B, const MachineCatalog& cat,
                           std::size_t H) {
  if (A.alphabet() != B.alphabet()) throw PreconditionError("diag: A and B use different alphabets");
  if (!enumeration_feasible(B.alphabet(), H)) throw InfeasibleError("diag: horizon " + std::to_string(H) + " too large");
  detail::DiagContext ctx{A, B, state, H};
  detail::check_state(ctx);
  const std::uint64_t s = state.stage;
  StageRecord r;
  if (s % 3 == 0) {
    r = detail::grow_stage(ctx);
  } else {
    const Nat k = Nat((s - (s % 3 == 1 ? 1 : 2)) / 3);
    const auto& e = cat.at_requirement(k);
    r.kind = s % 3 == 1 ? StageKind::R1 : StageKind::R2;
    r.requirement = k;
    r.indices = cantor_unpair(k);
    r.pair_name = e.name;
    if (r.kind == StageKind::R1) {
      detail::r1_stage(ctx, e, r);
    } else {
      detail::r2_stage(ctx, e, r);
    }
  }
  r.stage = s + 1;
  DiagState next = state;
  next.stage = s + 1;
  if (r.verdict == StageVerdict::Applied) {
    for (const auto& y : r.added)
      if (!A.contains(y) && !next.in_added(y)) next.added.push_back(y);
    for (const auto& x : r.excluded)
      if (!next.in_excluded(x)) next.excluded.push_back(x);
  } else {
    r.added.clear();
    r.excluded.clear();
  }
  next.log.push_back(std::move(r));
  detail::check_state(detail::DiagContext{A, B, next, H});
  return next;
}

// ---------------------------------------------------------------------------
// Requirement audits.

enum class ReqStatus { Satisfied, Unsatisfied, Inconclusive };

inline std::string to_string(ReqStatus s) {
  switch (s) {
    case ReqStatus::Satisfied: return "SATISFIED";
    case ReqStatus::Unsatisfied: return "UNSATISFIED";
    case ReqStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

struct ReqOutcome {
  ReqStatus status = ReqStatus::Unsatisfied;
  char clause = 0;  // 'a'..'e' when satisfied
  std::optional<Str> witness;

  std::string label() const {
    return status == ReqStatus::Satisfied ? "SATISFIED(" + std::string(1, clause) + ")" : to_string(status);
  }
  bool operator==(const ReqOutcome& o) const { return status == o.status && clause == o.clause; }
};

struct RequirementRecord {
  Nat requirement;
  std::string pair_name;
  ReqOutcome r1;
  ReqOutcome r2;
};

namespace detail {

inline ReqOutcome satisfied(char clause, const Str& w) { return ReqOutcome{ReqStatus::Satisfied, clause, w}; }

inline ReqOutcome check_r1(const DiagContext& ctx, const CatalogEntry& e) {
  const PartialMap &Ma = e.alpha, &Mb = e.beta;
  const auto As = ctx.members_A(), Cs = ctx.members_C();
  for (const auto& a : As)
    if (!Ma(a)) return satisfied('a', a);
  if (auto c = first_collision(Ma, As)) return satisfied('a', c->second);
  for (const auto& c : Cs)
    if (!Mb(c)) return satisfied('b', c);
  if (auto c = first_collision(Mb, Cs)) return satisfied('b', c->second);
  for (const auto& a : As)
    if (!ctx.in_B(*Ma(a))) return satisfied('c', a);
  for (const auto& c : Cs)
    if (!ctx.in_A(*Mb(c))) return satisfied('d', c);
  for (const auto& a : As)
    if (Mb(*Ma(a)) != std::optional<Str>(a)) return satisfied('e', a);
  for (const auto& c : Cs)
    if (Ma(*Mb(c)) != std::optional<Str>(c)) return satisfied('e', c);
  return ReqOutcome{};
}

inline ReqOutcome check_r2(const DiagContext& ctx, const CatalogEntry& e) {
  const PartialMap &Ma = e.alpha, &Mb = e.beta;
  const auto Cs = ctx.members_C(), Bs = ctx.members_B();
  for (const auto& c : Cs)
    if (!Ma(c)) return satisfied('a', c);
  if (auto c = first_collision(Ma, Cs)) return satisfied('a', c->second);
  for (const auto& b : Bs)
    if (!Mb(b)) return satisfied('b', b);
  if (auto c = first_collision(Mb, Bs)) return satisfied('b', c->second);
  for (const auto& c : Cs)
    if (!ctx.in_B(*Ma(c))) return satisfied('c', c);
  for (const auto& b : Bs)
    if (ctx.state.in_excluded(*Mb(b))) return satisfied('d', b);
  for (const auto& c : Cs)
    if (Mb(*Ma(c)) != std::optional<Str>(c)) return satisfied('e', c);
  for (const auto& b : Bs)
    if (Ma(*Mb(b)) != std::optional<Str>(b)) return satisfied('e', b);
  return ReqOutcome{};
}

/// INCONCLUSIVE when the stage serving this requirement gave up at the horizon.
inline void downgrade(ReqOutcome& o, const DiagState& state, const Nat& k, StageKind kind) {
  if (o.status == ReqStatus::Satisfied) return;
  for (const auto& r : state.log) {
    if (r.kind == kind && r.requirement && *r.requirement == k && r.verdict == StageVerdict::Inconclusive) {
      o.status = ReqStatus::Inconclusive;
      return;
    }
  }
}

}  // namespace detail

/// One record per requirement index 0 .. count-1 (count defaults to the catalog size).
inline std::vector<RequirementRecord> check_requirements(const DiagState& state, const Language& A, const Language& B,
                                                         const MachineCatalog& cat, std::size_t H,
                                                         std::optional<std::size_t> count = std::nullopt) {
  detail::DiagContext ctx{A, B, state, H};
  std::vector<RequirementRecord> out;
  const std::size_t n = count.value_or(cat.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Nat k(i);
    const auto& e = cat.at_requirement(k);
    RequirementRecord rec{k, e.name, detail::check_r1(ctx, e), detail::check_r2(ctx, e)};
    detail::downgrade(rec.r1, state, k, StageKind::R1);
    detail::downgrade(rec.r2, state, k, StageKind::R2);
    out.push_back(std::move(rec));
  }
  return out;
}

struct Construction {
  DiagState state;
  Language C;
};

/// C = A together with the strings added so far.
inline Language diag_language(const Language& A, const DiagState& state, const std::string& label) {
  auto added = std::make_shared<const std::set<Str>>(state.added.begin(), state.added.end());
  return Language("diag(" + label + ")", A.alphabet(), [A, added](const Str& x, Clock& c) {
    c.charge(x.size() + 1);
    if (added->count(x)) return true;
    return A.member_on(x, c);
  });
}

inline Construction run_construction(const Language& A, const Language& B, const MachineCatalog& cat,
                                     std::uint64_t stages, std::size_t H) {
  DiagState s = initial_state();
  for (std::uint64_t i = 0; i < stages; ++i) s = run_stage(s, A, B, cat, H);
  const std::string label = A.name() + ", " + B.name() + ", stages=" + std::to_string(stages) + ", H=" + std::to_string(H);
  Language C = diag_language(A, s, label);
  return Construction{std::move(s), std::move(C)};
}

namespace catalogs {

/// The shipped catalog of six pairs.
inline MachineCatalog standard(Alphabet a) {
  const Str zero = parse_str(std::to_string(a.size()) + ":0");
  const Str one = parse_str(std::to_string(a.size()) + ":1");
  MachineCatalog cat;
  cat.pairs.push_back({"identity/identity", maps::identity(a), maps::identity(a)});
  cat.pairs.push_back({"empty/empty", maps::empty_map(a), maps::empty_map(a)});
  cat.pairs.push_back({"prepend0/strip0", maps::prepend(zero), maps::strip(zero)});
  cat.pairs.push_back({"succ/pred", maps::add(a, 1), maps::add(a, -1)});
  cat.pairs.push_back({"append1/strip_suffix1", maps::append(one), maps::strip_suffix(one)});
  cat.pairs.push_back({"self_sum", maps::self_sum_forward(a), maps::self_sum_backward(a)});
  return cat;
}

}  // namespace catalogs

}  // namespace pcard
