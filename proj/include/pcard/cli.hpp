#pragma once

// Command-line front end. Every subcommand emits a JSON report
//   {command, inputs, checked_up_to, violations, summary}
// and exits 0 when clean, 1 when violations were found, 2 on usage errors
// or infeasible requests.

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcard/diag.hpp"
#include "pcard/dsl.hpp"

namespace pcard::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kClean = 0;
inline constexpr int kViolations = 1;
inline constexpr int kUsage = 2;

inline Json jnat(const Nat& n) {
  if (n >= 0 && n <= Nat(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(n);
  if (n < 0 && n >= Nat(std::numeric_limits<std::int64_t>::min())) return static_cast<std::int64_t>(n);
  return n.str();
}

inline Json jstr(const std::optional<Str>& s) { return s ? Json(format(*s)) : Json(nullptr); }

inline Json jstrs(const std::vector<Str>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(format(x));
  return a;
}

struct Options {
  std::size_t upto = 6;
  std::optional<std::uint64_t> fuel;
  std::string json_path;
  std::string csv_path;
  std::optional<long long> seed;  // accepted and ignored: every command is deterministic

  // Expression-valued inputs keyed by flag name.
  std::map<std::string, std::string> values;

  std::size_t count = 10;
  std::size_t stages = 30;
  std::size_t horizon = 6;
  std::size_t nmax = 16;
  std::size_t brute = 16;
  std::string rank;
  std::string exp;
  std::string catalog = "standard";
  std::string trace;
  bool emit_chains = false;

  const std::string& expr(const std::string& key) const { return values.at(key); }
  bool has(const std::string& key) const {
    auto it = values.find(key);
    return it != values.end() && !it->second.empty();
  }
  dsl::EvalOptions eval() const { return dsl::EvalOptions{fuel}; }
};

struct Outcome {
  Json report;
  std::optional<std::string> text;  // replaces the JSON on stdout when set
  std::optional<std::string> csv;
  int code = kClean;
};

namespace detail {

inline Outcome envelope(const std::string& command, const Options& o, std::optional<std::size_t> checked) {
  Outcome out;
  Json inputs = Json::object();
  for (const auto& [k, v] : o.values)
    if (!v.empty()) inputs[k] = v;
  out.report["command"] = command;
  out.report["inputs"] = inputs;
  out.report["checked_up_to"] = checked ? Json(*checked) : Json(nullptr);
  out.report["violations"] = Json::array();
  out.report["summary"] = Json::object();
  return out;
}

inline void finish(Outcome& out) {
  out.report["summary"]["violation_count"] = out.report["violations"].size();
  out.code = out.report["violations"].empty() ? kClean : kViolations;
}

inline Json violation(const Str& input, const std::string& kind, const std::string& detail) {
  return Json{{"input", format(input)}, {"kind", kind}, {"detail", detail}};
}

inline void add_verification(Outcome& out, const VerificationReport& r) {
  for (const auto& v : r.violations) {
    Json j = violation(v.input, to_string(v.kind), v.detail);
    j["side"] = std::string(1, v.side);
    out.report["violations"].push_back(j);
  }
  out.report["summary"]["checked_a"] = r.checked_a;
  out.report["summary"]["checked_b"] = r.checked_b;
  out.report["summary"]["max_steps"] = Json::array();
  for (std::size_t len = 0; len < r.max_steps.size(); ++len) {
    out.report["summary"]["max_steps"].push_back(Json{{"length", len}, {"steps", r.max_steps[len]}});
  }
}

inline Json bound_json(const TimeBound& t) { return Json{{"c", t.c}, {"e", t.e}}; }

// ---------------------------------------------------------------------------
// Subcommands.

inline Outcome cmd_eval(const Options& o) {
  Outcome out = envelope("eval", o, std::nullopt);
  auto e = dsl::parse(o.expr("expr"));
  auto v = dsl::evaluate(e, o.eval());
  auto& s = out.report["summary"];
  s["kind"] = dsl::kind_name(v);
  s["canonical"] = dsl::print(e);
  s["name"] = dsl::describe(v);
  if (const auto* L = std::get_if<Language>(&v.v)) {
    s["alphabet"] = L->alphabet().size();
    s["members_upto"] = jstrs(enumerate_upto(*L, std::min<std::size_t>(o.upto, 4)));
  } else if (const auto* f = std::get_if<PartialMap>(&v.v)) {
    s["bound"] = bound_json(f->bound());
    s["has_inverse"] = f->inverse() != nullptr;
  } else if (const auto* E = std::get_if<Equipollence>(&v.v)) {
    s["A"] = E->A.name();
    s["B"] = E->B.name();
    s["forward_bound"] = bound_json(E->forward.bound());
    s["backward_bound"] = bound_json(E->backward.bound());
  }
  finish(out);
  return out;
}

inline Outcome cmd_census(const Options& o) {
  Outcome out = envelope("census", o, o.upto);
  Language L = dsl::eval_language(o.expr("lang"), o.eval());
  auto table = census_table(L, o.upto);
  Json rows = Json::array();
  for (const auto& [n, c] : table.entries) rows.push_back(Json{{"n", n}, {"count", jnat(c)}});
  out.report["summary"]["census"] = rows;
  if (!table.valid(L.alphabet())) {
    out.report["violations"].push_back(Json{{"kind", "census_invalid"}, {"detail", "census not monotone or exceeds |Σ^{<=n}|"}});
  }
  out.csv = table.to_csv();
  out.text = out.csv;
  finish(out);
  return out;
}

inline Outcome cmd_density_compare(const Options& o) {
  Outcome out = envelope("density-compare", o, o.upto);
  Language A = dsl::eval_language(o.expr("a"), o.eval()), B = dsl::eval_language(o.expr("b"), o.eval());
  Polynomial p = dsl::eval_polynomial(o.expr("p")), q = dsl::eval_polynomial(o.expr("q"));
  auto rep = census_poly_related(A, B, p, q, o.upto, o.brute);
  std::string csv = "n,census_a,census_b,a_into_b,b_into_a\n";
  Json rows = Json::array();
  std::size_t inconclusive = 0;
  for (const auto& r : rep.rows) {
    rows.push_back(Json{{"n", r.n}, {"census_a", jnat(r.ca)}, {"census_b", jnat(r.cb)},
                        {"a_into_b", to_string(r.a_into_b)}, {"b_into_a", to_string(r.b_into_a)}});
    csv += std::to_string(r.n) + "," + r.ca.str() + "," + r.cb.str() + "," + to_string(r.a_into_b) + "," +
           to_string(r.b_into_a) + "\n";
    if (r.combined() == RelVerdict::Fail) {
      out.report["violations"].push_back(Json{{"n", r.n}, {"kind", "not_polynomially_related"},
                                              {"detail", "a_into_b=" + to_string(r.a_into_b) + ", b_into_a=" + to_string(r.b_into_a)}});
    }
    if (r.combined() == RelVerdict::Inconclusive) ++inconclusive;
  }
  out.report["summary"]["rows"] = rows;
  out.report["summary"]["overall"] = to_string(rep.overall());
  out.report["summary"]["inconclusive_rows"] = inconclusive;
  if (!o.exp.empty()) {
    const double c = std::stod(o.exp);
    auto d = exp_density_check(A, c, o.upto);
    std::ostringstream a;
    a.precision(6);
    a << d.a;
    out.report["summary"]["exp_density"] = Json{{"c", o.exp}, {"passed", d.passed}, {"a", a.str()}};
  }
  out.csv = csv;
  finish(out);
  return out;
}

inline Outcome cmd_check_equi(const Options& o) {
  Outcome out = envelope("check-equi", o, o.upto);
  Equipollence E = dsl::eval_witness(o.expr("witness"), o.eval());
  out.report["summary"]["witness"] = E.name;
  out.report["summary"]["A"] = E.A.name();
  out.report["summary"]["B"] = E.B.name();
  add_verification(out, verify_equipollence(E, o.upto));
  finish(out);
  return out;
}

inline Outcome cmd_audit_map(const Options& o) {
  Outcome out = envelope("audit-map", o, o.upto);
  PartialMap f = dsl::eval_map(o.expr("map"), o.eval());
  if (o.has("domain")) f = f.with_domain(dsl::eval_language(o.expr("domain"), o.eval()));
  auto a = audit_map(f, o.upto);
  auto& s = out.report["summary"];
  s["map"] = f.name();
  s["bound"] = bound_json(f.bound());
  s["injective"] = a.injective;
  s["length_increasing"] = a.length_increasing;
  s["honest_with"] = a.honest_with ? Json(*a.honest_with) : Json(nullptr);
  s["defined"] = a.defined;
  if (a.collision) {
    out.report["violations"].push_back(violation(a.collision->second, "collision",
                                                 "same image as " + format(a.collision->first)));
  }
  for (const auto& x : a.timeouts) out.report["violations"].push_back(violation(x, "clock_breach", "declared bound exceeded"));
  finish(out);
  return out;
}

inline Outcome cmd_cb(const Options& o) {
  Outcome out = envelope("cb", o, o.upto);
  auto ev = o.eval();
  InjectionPair P = make_injection_pair(dsl::eval_language(o.expr("A"), ev), dsl::eval_language(o.expr("B"), ev),
                                        dsl::eval_map(o.expr("p"), ev), dsl::eval_map(o.expr("q"), ev));
  try {
    Equipollence E = cb_witness(P, o.upto);
    out.report["summary"]["witness"] = E.name;
    add_verification(out, verify_equipollence(E, o.upto));
    Json table = Json::array();
    for (const auto& x : enumerate_upto(P.A, o.upto)) {
      Json row{{"x", format(x)}, {"phi", jstr(E.forward(x))}};
      if (o.emit_chains) {
        auto v = classify(x, Side::A, P);
        row["origin"] = to_string(v.origin);
        row["walk"] = jstrs(v.walk);
      }
      table.push_back(row);
    }
    out.report["summary"]["phi"] = table;
  } catch (const CbAuditError& e) {
    out.report["violations"].push_back(violation(e.offending(), "audit_failure", e.what()));
  }
  finish(out);
  return out;
}

inline Outcome cmd_rank(const Options& o) {
  Outcome out = envelope("rank", o, std::nullopt);
  Language L = dsl::eval_language(o.expr("lang"), o.eval());
  Str x = dsl::eval_str(o.expr("str"));
  out.report["summary"]["rank"] = jnat(strong_rank(L, x));
  out.report["summary"]["member"] = L.contains(x);
  finish(out);
  return out;
}

inline Outcome cmd_unrank_in(const Options& o) {
  Outcome out = envelope("unrank-in", o, o.nmax);
  Language L = dsl::eval_language(o.expr("lang"), o.eval());
  const Nat r(o.rank);
  try {
    std::uint64_t steps = 0;
    Str x = rank_inverse(L, r, o.nmax, &steps);
    out.report["summary"]["string"] = format(x);
    out.report["summary"]["steps"] = steps;
  } catch (const RankNotFound& e) {
    out.report["violations"].push_back(Json{{"kind", "rank_not_found"}, {"detail", e.what()},
                                            {"low", jnat(e.low)}, {"high", jnat(e.high)}});
  }
  finish(out);
  return out;
}

/// rk_B(x) = rk_A(x) + σ(x), with both ranks counted directly.
inline void check_shift_identity(Outcome& out, const FiniteDiff& d, std::size_t n) {
  const Language B = derived_language(d);
  const ShiftFn sigma = shift_function(d);
  long long ra = 0, rb = 0;
  std::size_t checked = 0;
  for_each_upto(d.base.alphabet(), n, [&](const Str& x) {
    ++checked;
    if (d.base.contains(x)) ++ra;
    if (B.contains(x)) ++rb;
    if (rb != ra + sigma(x)) {
      out.report["violations"].push_back(violation(x, "shift_identity", "rk_B=" + std::to_string(rb) + ", rk_A+σ=" +
                                                                           std::to_string(ra + sigma(x))));
    }
  });
  out.report["summary"]["shift_checked"] = checked;
}

inline Outcome cmd_findiff(const Options& o) {
  Outcome out = envelope("findiff", o, o.upto);
  auto ev = o.eval();
  FiniteDiff d = dsl::eval_diff(o.expr("diff"), ev);
  auto& s = out.report["summary"];
  s["language"] = findiff_name(d);
  s["offset"] = d.offset();
  check_shift_identity(out, d, o.upto);
  if (o.has("other")) {
    FiniteDiff d2 = dsl::eval_diff(o.expr("other"), ev);
    s["other_offset"] = d2.offset();
    try {
      Equipollence E = findiff_witness(d, d2);
      s["witness"] = E.name;
      add_verification(out, verify_equipollence(E, o.upto));
    } catch (const OffsetMismatch& e) {
      s["witness"] = nullptr;
      s["reason"] = e.what();
    }
  }
  if (o.has("transfer")) {
    Equipollence E = dsl::eval_witness(o.expr("transfer"), ev);
    Equipollence T = transfer_countability(E, d);
    s["transfer"] = T.name;
    add_verification(out, verify_equipollence(T, o.upto));
  }
  finish(out);
  return out;
}

inline Outcome cmd_iso(const Options& o) {
  Outcome out = envelope("iso", o, o.upto);
  auto ev = o.eval();
  Equipollence E = dsl::eval_witness(o.expr("witness"), ev), Ec = dsl::eval_witness(o.expr("complement"), ev);
  Equipollence I = iso_from_complements(E, Ec);
  out.report["summary"]["iso"] = I.name;
  add_verification(out, verify_equipollence(I, o.upto));
  auto m = audit_membership(I.forward, E.A, E.B, o.upto);
  for (const auto& x : m.mismatches) out.report["violations"].push_back(violation(x, "membership_mismatch", "x in A differs from h(x) in B"));
  for (const auto& x : m.undefined) out.report["violations"].push_back(violation(x, "undefined", "iso undefined"));
  std::map<std::string, std::size_t> paths;
  for_each_upto(E.B.alphabet(), o.upto, [&](const Str& x) { ++paths[to_string(dual_inverse(E, Ec, x).path)]; });
  out.report["summary"]["inverse_paths"] = paths;
  finish(out);
  return out;
}

inline Outcome cmd_reduce(const Options& o) {
  Outcome out = envelope("reduce", o, o.upto);
  auto ev = o.eval();
  Equipollence E = dsl::eval_witness(o.expr("witness"), ev);
  Str a0 = dsl::eval_str(o.expr("a0"));
  reduction_from_witness(E, a0);  // validates a0
  std::map<std::string, std::size_t> paths;
  for_each_upto(E.B.alphabet(), o.upto, [&](const Str& x) {
    auto t = reduction_trace(E, a0, x);
    ++paths[to_string(t.path)];
    if (E.B.contains(x) != E.A.contains(t.value)) {
      out.report["violations"].push_back(violation(x, "reduction_mismatch", "r(x)=" + format(t.value) + " via " + to_string(t.path)));
    }
  });
  out.report["summary"]["paths"] = paths;
  finish(out);
  return out;
}

inline Outcome cmd_enumerate(const Options& o) {
  Outcome out = envelope("enumerate", o, std::nullopt);
  Equipollence E = dsl::eval_witness(o.expr("witness"), o.eval());
  Enumeration en = enum_by_iteration(E);
  auto xs = en.iterate(o.count);
  out.report["summary"]["iterates"] = jstrs(xs);
  std::set<Str> seen;
  for (const auto& x : xs) {
    if (!seen.insert(x).second) out.report["violations"].push_back(violation(x, "repeat", "iterate seen before"));
    if (!E.A.contains(x)) out.report["violations"].push_back(violation(x, "escapes_domain", "iterate outside " + E.A.name()));
  }
  if (xs.size() < o.count) out.report["summary"]["stopped_early"] = true;
  finish(out);
  return out;
}

inline Outcome cmd_cylinder(const Options& o) {
  Outcome out = envelope("cylinder", o, o.upto);
  auto ev = o.eval();
  Equipollence EA = dsl::eval_witness(o.expr("witness"), ev), EAc = dsl::eval_witness(o.expr("complement"), ev);
  Equipollence C = cylinder_witness(EA, EAc);
  out.report["summary"]["cylinder"] = C.name;
  add_verification(out, verify_equipollence(C, o.upto));
  auto m = audit_membership(C.forward, EA.A, gallery::times(EA.A, gallery::sigma_star(EA.A.alphabet())), o.upto);
  for (const auto& x : m.mismatches) out.report["violations"].push_back(violation(x, "membership_mismatch", "x in A differs from h(x) in A×Σ*"));
  for (const auto& x : m.undefined) out.report["violations"].push_back(violation(x, "undefined", "cylinder map undefined"));
  finish(out);
  return out;
}

inline Outcome cmd_choice(const Options& o) {
  Outcome out = envelope("choice", o, o.upto);
  Collection C = dsl::eval_collection(o.expr("collection"), o.eval());
  Json rows = Json::array();
  for (const auto& r : check_honestly_nonempty(C, o.upto)) {
    rows.push_back(Json{{"x", format(r.x)}, {"choice", jstr(r.witness)}});
    if (!r.witness) {
      out.report["violations"].push_back(violation(r.x, "empty_slice", "no member in the honesty window"));
      continue;
    }
    const std::size_t len = r.witness->size();
    if (len < C.p(r.x.size()) || len > C.q(r.x.size()) || !C.in_slice(r.x, *r.witness)) {
      out.report["violations"].push_back(violation(r.x, "choice_outside_window", format(*r.witness)));
    }
  }
  out.report["summary"]["collection"] = C.name();
  out.report["summary"]["choices"] = rows;
  finish(out);
  return out;
}

inline Outcome cmd_transversal(const Options& o) {
  Outcome out = envelope("transversal", o, o.upto);
  Collection C = dsl::eval_collection(o.expr("collection"), o.eval());
  auto disj = audit_pairwise_disjoint(C, o.upto);
  out.report["summary"]["disjoint"] = disj.disjoint;
  if (!disj.disjoint) {
    out.report["violations"].push_back(violation(*disj.shared, "not_disjoint",
                                                 "in the slices of " + format(disj.owners->first) + " and " +
                                                     format(disj.owners->second)));
    finish(out);
    return out;
  }
  const std::size_t horizon = std::max<std::size_t>(o.horizon, 2 * o.upto + 8);
  std::size_t nonempty = 0;
  for_each_upto(C.alphabet(), o.upto, [&](const Str& x) {
    auto slice = slice_in_window(C, x);
    std::size_t hits = 0;
    for (const auto& y : slice)
      if (transversal_member(C, y, horizon)) ++hits;
    if (!slice.empty()) ++nonempty;
    if (hits != (slice.empty() ? 0u : 1u)) {
      out.report["violations"].push_back(violation(x, "transversal_count", "meets the slice " + std::to_string(hits) + " times"));
    }
  });
  out.report["summary"]["nonempty_slices"] = nonempty;
  finish(out);
  return out;
}

inline Outcome cmd_uniformize(const Options& o) {
  Outcome out = envelope("uniformize", o, o.upto);
  MultiMap R{dsl::eval_language(o.expr("graph"), o.eval()), dsl::eval_polynomial(o.expr("lo")),
             dsl::eval_polynomial(o.expr("hi"))};
  PartialMap f = refine_uniformize(R);
  auto rep = check_refinement(f, R, o.upto);
  Json table = Json::array();
  for_each_upto(R.graph.alphabet(), std::min<std::size_t>(o.upto, 3), [&](const Str& x) {
    table.push_back(Json{{"x", format(x)}, {"f", jstr(f(x))}});
  });
  out.report["summary"]["map"] = f.name();
  out.report["summary"]["sample"] = table;
  for (const auto& x : rep.domain_mismatch) out.report["violations"].push_back(violation(x, "domain_mismatch", "refinement domain differs"));
  for (const auto& x : rep.value_outside) out.report["violations"].push_back(violation(x, "value_outside", "value not an output of R"));
  finish(out);
  return out;
}

inline MachineCatalog load_catalog(const std::string& spec, Alphabet a, const dsl::EvalOptions& ev) {
  if (spec == "standard") return catalogs::standard(a);
  std::ifstream in(spec);
  if (!in) throw PreconditionError("cannot open catalog file " + spec);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw PreconditionError("catalog " + spec + ": " + e.what());
  }
  if (!j.is_array()) throw PreconditionError("catalog " + spec + ": expected a JSON list");
  MachineCatalog cat;
  for (const auto& e : j) {
    if (!e.contains("name") || !e.contains("alpha") || !e.contains("beta")) {
      throw PreconditionError("catalog " + spec + ": entries need name, alpha and beta");
    }
    cat.pairs.push_back({e["name"].get<std::string>(), dsl::eval_map(e["alpha"].get<std::string>(), ev),
                         dsl::eval_map(e["beta"].get<std::string>(), ev)});
  }
  if (cat.pairs.empty()) throw PreconditionError("catalog " + spec + " is empty");
  return cat;
}

inline Json stage_json(const StageRecord& r) {
  Json j{{"stage", r.stage}, {"kind", to_string(r.kind)}};
  j["requirement"] = r.requirement ? jnat(*r.requirement) : Json(nullptr);
  j["alpha_beta"] = r.indices ? Json::array({jnat(r.indices->first), jnat(r.indices->second)}) : Json(nullptr);
  j["pair"] = r.pair_name;
  j["case"] = r.case_label;
  j["subcase"] = r.subcase_label;
  j["added"] = jstrs(r.added);
  j["excluded"] = jstrs(r.excluded);
  j["verdict"] = to_string(r.verdict);
  return j;
}

inline Outcome cmd_diag(const Options& o) {
  Outcome out = envelope("diag", o, o.horizon);
  auto ev = o.eval();
  Language A = dsl::eval_language(o.expr("A"), ev), B = dsl::eval_language(o.expr("B"), ev);
  MachineCatalog cat = load_catalog(o.catalog, A.alphabet(), ev);
  DiagState s = initial_state();
  std::map<std::pair<std::size_t, int>, std::string> secured;  // (pair, 1|2) -> clause label
  for (std::size_t i = 0; i < o.stages; ++i) {
    s = run_stage(s, A, B, cat, o.horizon);
    for (const auto& rec : check_requirements(s, A, B, cat, o.horizon)) {
      const auto k = static_cast<std::size_t>(rec.requirement);
      for (int which : {1, 2}) {
        const ReqOutcome& r = which == 1 ? rec.r1 : rec.r2;
        auto it = secured.find({k, which});
        if (it != secured.end() && r.status != ReqStatus::Satisfied) {
          out.report["violations"].push_back(Json{{"kind", "injury"}, {"stage", s.stage}, {"pair", rec.pair_name},
                                                  {"requirement", "R" + std::to_string(which)}, {"was", it->second}});
        }
        if (r.status == ReqStatus::Satisfied && it == secured.end()) secured[{k, which}] = r.label();
      }
    }
  }
  Json trace = Json::array();
  for (const auto& r : s.log) trace.push_back(stage_json(r));
  Json reqs = Json::array();
  const std::size_t served = std::min<std::size_t>(cat.size(), (o.stages + 1) / 3);
  for (const auto& rec : check_requirements(s, A, B, cat, o.horizon, served)) {
    reqs.push_back(Json{{"requirement", jnat(rec.requirement)}, {"pair", rec.pair_name}, {"R1", rec.r1.label()},
                        {"R2", rec.r2.label()}});
    for (const auto* r : {&rec.r1, &rec.r2}) {
      if (r->status == ReqStatus::Unsatisfied) {
        out.report["violations"].push_back(Json{{"kind", "unsatisfied"}, {"pair", rec.pair_name},
                                                {"requirement", r == &rec.r1 ? "R1" : "R2"}});
      }
    }
  }
  auto& sm = out.report["summary"];
  sm["C"] = diag_language(A, s, A.name() + ", " + B.name()).name();
  sm["stages"] = s.stage;
  sm["added"] = jstrs(s.added);
  sm["excluded"] = jstrs(s.excluded);
  sm["requirements"] = reqs;
  sm["note"] = "the much-smaller precondition on A and B is assumed, not checked";
  if (!o.trace.empty()) {
    std::ofstream f(o.trace);
    if (!f) throw PreconditionError("cannot write trace " + o.trace);
    f << trace.dump(2) << "\n";
  }
  out.report["trace"] = trace;
  finish(out);
  return out;
}

inline Outcome cmd_gallery(const Options& o) {
  Outcome out = envelope("gallery", o, o.upto);
  const Alphabet a(2);
  const Str zero = parse_str("2:0");
  std::vector<Language> langs = {gallery::sigma_star(a),   gallery::empty(a),        gallery::prefix(zero),
                                 gallery::complement(gallery::prefix(zero)),         gallery::shift_set(a, 3),
                                 gallery::oplus(gallery::sigma_star(a), gallery::empty(a)),
                                 gallery::times(gallery::sigma_star(a), gallery::sigma_star(a)),
                                 gallery::tower_gap_A0(a), gallery::tower_gap_A1(a), gallery::dedekind(a)};
  Json rows = Json::array();
  for (const auto& L : langs) {
    Json c = Json::array();
    for (const auto& [n, k] : census_table(L, o.upto).entries) c.push_back(jnat(k));
    rows.push_back(Json{{"name", L.name()}, {"census", c}});
  }
  out.report["summary"]["languages"] = rows;
  Json names = Json::array();
  for (const auto& n : dsl::builtin_names()) names.push_back(n);
  out.report["summary"]["builtins"] = names;
  finish(out);
  return out;
}

}  // namespace detail

/// Runs one command line (without the program name) in-process.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-cardinality toolkit"};
  app.require_subcommand(1);
  Options o;
  using Handler = Outcome (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> handlers;

  auto sub = [&](const std::string& name, const std::string& help, Handler h,
                 std::vector<std::pair<std::string, bool>> exprs) {
    CLI::App* s = app.add_subcommand(name, help);
    for (const auto& [flag, required] : exprs) {
      auto* opt = s->add_option("--" + flag, o.values[flag], flag + " expression");
      if (required) opt->required();
    }
    s->add_option("--upto", o.upto, "verification bound");
    s->add_option("--fuel", o.fuel, "membership fuel");
    s->add_option("--json", o.json_path, "also write the JSON report here");
    s->add_option("--csv", o.csv_path, "write CSV output here");
    s->add_option("--seed", o.seed, "ignored; all commands are deterministic");
    handlers.emplace_back(s, h);
    return s;
  };

  sub("eval", "evaluate an expression", detail::cmd_eval, {{"expr", true}});
  sub("census", "census table of a language", detail::cmd_census, {{"lang", true}});
  auto* dc = sub("density-compare", "polynomial relatedness of two censuses", detail::cmd_density_compare,
                 {{"a", true}, {"b", true}, {"p", true}, {"q", true}});
  dc->add_option("--brute", o.brute, "brute-force census horizon");
  dc->add_option("--exp", o.exp, "also test exponential density with this exponent");
  sub("check-equi", "verify a witness", detail::cmd_check_equi, {{"witness", true}});
  sub("audit-map", "audit a partial map", detail::cmd_audit_map, {{"map", true}, {"domain", false}});
  auto* cb = sub("cb", "bijection from two injections", detail::cmd_cb, {{"p", true}, {"q", true}, {"A", true}, {"B", true}});
  cb->add_option("--verify-upto", o.upto, "verification bound");
  cb->add_flag("--emit-chains", o.emit_chains, "include chain walks");
  sub("rank", "strong rank of a string", detail::cmd_rank, {{"lang", true}, {"str", true}});
  auto* ur = sub("unrank-in", "member of a given rank", detail::cmd_unrank_in, {{"lang", true}});
  ur->add_option("--rank", o.rank, "1-based rank")->required();
  ur->add_option("--nmax", o.nmax, "length limit");
  sub("findiff", "finite-difference checks", detail::cmd_findiff, {{"diff", true}, {"other", false}, {"transfer", false}});
  sub("iso", "isomorphism from witnesses of a set and its complement", detail::cmd_iso,
      {{"witness", true}, {"complement", true}});
  sub("reduce", "reduction read off a witness", detail::cmd_reduce, {{"witness", true}, {"a0", true}});
  auto* en = sub("enumerate", "enumeration by iteration", detail::cmd_enumerate, {{"witness", true}});
  en->add_option("--count", o.count, "number of iterates");
  sub("cylinder", "cylinder isomorphism", detail::cmd_cylinder, {{"witness", true}, {"complement", true}});
  sub("choice", "brute-force choice", detail::cmd_choice, {{"collection", true}});
  auto* tr = sub("transversal", "transversal of a disjoint collection", detail::cmd_transversal, {{"collection", true}});
  tr->add_option("--horizon", o.horizon, "index-length search limit");
  sub("uniformize", "single-valued refinement", detail::cmd_uniformize, {{"graph", true}, {"lo", true}, {"hi", true}});
  auto* dg = sub("diag", "stage construction between A and B", detail::cmd_diag, {{"A", true}, {"B", true}});
  dg->add_option("--catalog", o.catalog, "catalog file, or 'standard'");
  dg->add_option("--stages", o.stages, "number of stages");
  dg->add_option("--horizon", o.horizon, "search horizon");
  dg->add_option("--trace", o.trace, "write the stage trace here");
  sub("gallery", "the shipped languages", detail::cmd_gallery, {});

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kClean;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  for (auto& [s, h] : handlers) {
    if (!s->parsed()) continue;
    try {
      Outcome res = h(o);
      if (res.text) out << *res.text;
      else out << res.report.dump(2) << "\n";
      if (!o.json_path.empty()) {
        std::ofstream f(o.json_path);
        if (!f) throw PreconditionError("cannot write " + o.json_path);
        f << res.report.dump(2) << "\n";
      }
      if (!o.csv_path.empty()) {
        if (!res.csv) throw PreconditionError("this command has no CSV output");
        std::ofstream f(o.csv_path);
        if (!f) throw PreconditionError("cannot write " + o.csv_path);
        f << *res.csv;
      }
      return res.code;
    } catch (const InvariantBreach& e) {
      err << "invariant breach: " << e.what() << "\n";
      return kViolations;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }
  return kUsage;
}

}  // namespace pcard::cli
