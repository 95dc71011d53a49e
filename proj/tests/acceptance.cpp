// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "pcard.hpp"
#include "pcard/cli.hpp"

using namespace pcard;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

Result fail(std::string why) { return Result{false, std::move(why)}; }

// 1. Ternary numbering table.
Result table_fidelity() {
  const std::vector<std::string> expected = {"",   "0",  "1",  "2",  "00", "01", "02",  "10",  "11",
                                             "12", "20", "21", "22", "000", "001", "002", "010", "011"};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const Str x = unrank(Nat(i), Alphabet(3));
    if (x.symbols() != expected[i]) return fail("index " + std::to_string(i) + " gives " + format(x));
    if (rank(x) != i) return fail("rank of " + format(x) + " is not " + std::to_string(i));
  }
  return {true, "18 entries"};
}

// 2. Canonical witnesses verify with no violations.
Result canonical_witnesses() {
  std::size_t checked = 0;
  for (const auto& f : fixtures::canonical_witnesses()) {
    auto E = dsl::eval_witness(f.expr);
    auto r = verify_equipollence(E, f.upto);
    if (!r.clean()) {
      const auto& v = r.violations.front();
      return fail(f.expr + ": " + to_string(v.kind) + " at " + format(v.input));
    }
    checked += r.checked_a + r.checked_b;
  }
  return {true, std::to_string(fixtures::canonical_witnesses().size()) + " witnesses, " + std::to_string(checked) +
                    " inputs"};
}

// 3. Cantor-Bernstein over a catalog of injection pairs.
Result cantor_bernstein() {
  std::size_t walks = 0;
  for (const auto& f : fixtures::injection_pairs()) {
    const std::string label = "(" + f.p + ", " + f.q + ")";
    auto P = make_injection_pair(dsl::eval_language(f.A), dsl::eval_language(f.B), dsl::eval_map(f.p),
                                 dsl::eval_map(f.q));
    auto E = cb_witness(P, 8);
    auto r = verify_equipollence(E, 8);
    if (!r.clean()) return fail(label + ": " + to_string(r.violations.front().kind) + " at " + format(r.violations.front().input));
    for (Side side : {Side::A, Side::B}) {
      for (const auto& x : enumerate_upto(side == Side::A ? P.A : P.B, 8)) {
        auto v = classify(x, side, P);
        ++walks;
        if (v.walk.size() > x.size() + 2) return fail(label + ": walk from " + format(x) + " too long");
        for (std::size_t i = 1; i < v.walk.size(); ++i) {
          if (v.walk[i].size() >= v.walk[i - 1].size()) return fail(label + ": walk from " + format(x) + " not decreasing");
        }
      }
    }
  }
  return {true, std::to_string(fixtures::injection_pairs().size()) + " pairs, " + std::to_string(walks) + " walks"};
}

// 4. Reductions read off verified witnesses.
Result reduction_law() {
  std::map<ReductionPath, std::size_t> paths;
  for (const auto& f : fixtures::proper_witnesses()) {
    auto E = dsl::eval_witness(f.witness);
    if (!verify_equipollence(E, 7).clean()) return fail(f.witness + " does not verify");
    const Str a0 = dsl::eval_str(f.a0);
    auto r = reduction_from_witness(E, a0);
    std::string bad;
    for_each_upto(E.B.alphabet(), 7, [&](const Str& x) {
      ++paths[reduction_trace(E, a0, x).path];
      auto y = r(x);
      if (bad.empty() && (!y || E.B.contains(x) != E.A.contains(*y))) bad = format(x);
    });
    if (!bad.empty()) return fail(f.witness + ": membership differs at " + bad);
  }
  if (!paths[ReductionPath::Timeout]) return fail("no input exercised the timeout path");
  if (!paths[ReductionPath::Mismatch]) return fail("no input exercised the mismatch path");
  std::ostringstream os;
  os << "paths:";
  for (auto [p, n] : paths) os << " " << to_string(p) << "=" << n;
  return {true, os.str()};
}

// 5. Census relatedness, positive and negative.
Result census_relatedness() {
  std::vector<std::string> exprs;
  for (const auto& f : fixtures::proper_witnesses()) exprs.push_back(f.witness);
  for (const auto& f : fixtures::canonical_witnesses())
    if (f.upto == 8) exprs.push_back(f.expr);
  for (const auto& e : exprs) {
    auto E = dsl::eval_witness(e);
    auto rep = census_poly_related(E.A, E.B, E.forward.bound().as_polynomial(), E.backward.bound().as_polynomial(), 8);
    if (rep.overall() != RelVerdict::Pass) return fail(e + ": " + to_string(rep.overall()));
  }
  const Alphabet a(2);
  const auto A0 = gallery::tower_gap_A0(a), A1 = gallery::tower_gap_A1(a);
  const std::vector<Polynomial> polys = {Polynomial({0, 1}),    Polynomial({1, 1}),       Polynomial({3, 2}),
                                         Polynomial({0, 0, 1}), Polynomial({1, 1, 1}),    Polynomial({0, 0, 0, 1}),
                                         Polynomial({5, 5, 5, 5}), Polynomial({8, 0, 0, 8})};
  // Each stretch stays below 65536 for n <= 20, so the gap between bands is visible at this scale.
  for (const auto& p : polys) {
    if (p(20) >= 65536) return fail("polynomial " + p.to_string() + " reaches the next band");
    for (const auto& q : polys) {
      if (census_poly_related(A0, A1, p, q, 20).overall() != RelVerdict::Fail) {
        return fail("tower gaps look related under " + p.to_string() + ", " + q.to_string());
      }
    }
  }
  return {true, std::to_string(exprs.size()) + " witnesses related; tower gaps unrelated under " +
                    std::to_string(polys.size() * polys.size()) + " polynomial pairs"};
}

// 6. Shift-function identity and transferred countability.
Result finite_differences() {
  std::size_t points = 0, transfers = 0;
  for (const auto& f : fixtures::finite_diffs()) {
    auto d = dsl::eval_diff(f.diff);
    auto B = derived_language(d);
    auto sigma = shift_function(d);
    Nat rk_a = 0, rk_b = 0;
    std::string bad;
    for_each_upto(d.base.alphabet(), 8, [&](const Str& x) {
      if (d.base.contains(x)) ++rk_a;
      if (B.contains(x)) ++rk_b;
      ++points;
      if (bad.empty() && rk_b != rk_a + sigma(x)) bad = format(x);
    });
    if (!bad.empty()) return fail(f.diff + ": identity fails at " + bad);
    if (!f.base_witness.empty()) {
      auto E = transfer_countability(dsl::eval_witness(f.base_witness), d);
      auto r = verify_equipollence(E, 7);
      if (!r.clean()) return fail(E.name + ": " + to_string(r.violations.front().kind) + " at " + format(r.violations.front().input));
      ++transfers;
    }
  }
  return {true, std::to_string(fixtures::finite_diffs().size()) + " fixtures, " + std::to_string(points) + " points, " +
                    std::to_string(transfers) + " transfers"};
}

// 7. Dedekind lengths and the offset criterion.
Result dedekind() {
  if (!dedekind_gap_check(2)) return fail("gap check failed");
  if (dedekind_length(0) != 4 || dedekind_length(1) != 16 || dedekind_length(2) != 65536) return fail("lengths");
  for (const auto& c : fixtures::offset_matrix()) {
    auto d1 = dsl::eval_diff(c.left), d2 = dsl::eval_diff(c.right);
    try {
      auto E = findiff_witness(d1, d2);
      if (!c.matches) return fail(c.left + " vs " + c.right + ": witness built despite offset mismatch");
      if (!verify_equipollence(E, 8).clean()) return fail(E.name + " does not verify");
    } catch (const OffsetMismatch&) {
      if (c.matches) return fail(c.left + " vs " + c.right + ": rejected despite equal offsets");
    }
  }
  return {true, std::to_string(fixtures::offset_matrix().size()) + " cases"};
}

// 8. Transversals and brute-force choice.
Result transversals() {
  std::size_t slices = 0;
  for (const auto& src : fixtures::disjoint_collections()) {
    auto C = dsl::eval_collection(src);
    if (!audit_pairwise_disjoint(C, 6).disjoint) return fail(src + " is not pairwise disjoint");
    std::string bad;
    for_each_upto(C.alphabet(), 6, [&](const Str& x) {
      if (!bad.empty()) return;
      auto slice = slice_in_window(C, x);
      if (slice.empty()) return;
      ++slices;
      std::size_t hits = 0;
      for (const auto& y : slice) hits += transversal_member(C, y, 16) ? 1 : 0;
      if (hits != 1) bad = format(x) + " meets the transversal " + std::to_string(hits) + " times";
      const Str y = choice_bruteforce(C, x);
      if (y.size() < C.p(x.size()) || y.size() > C.q(x.size()) || !C.in_slice(x, y)) {
        bad = "choice at " + format(x) + " leaves the window";
      }
    });
    if (!bad.empty()) return fail(src + ": " + bad);
  }
  return {true, std::to_string(fixtures::disjoint_collections().size()) + " collections, " + std::to_string(slices) +
                    " slices"};
}

// 9. Stage construction with A = ∅, B = Σ*.
Result diagonalization() {
  const Alphabet a(2);
  const Language A = gallery::empty(a), B = gallery::sigma_star(a);
  const MachineCatalog cat = catalogs::standard(a);
  const std::size_t H = 8;
  DiagState s = initial_state();
  std::map<std::pair<std::size_t, int>, bool> secured;
  for (int i = 0; i < 30; ++i) {
    s = run_stage(s, A, B, cat, H);
    for (const auto& x : s.added)
      if (!B.contains(x) || s.in_excluded(x)) return fail("invariant broken by " + format(x));
    for (const auto& rec : check_requirements(s, A, B, cat, H)) {
      const auto k = static_cast<std::size_t>(rec.requirement);
      for (int which : {1, 2}) {
        const bool ok = (which == 1 ? rec.r1 : rec.r2).status == ReqStatus::Satisfied;
        if (secured[{k, which}] && !ok) {
          return fail("R" + std::to_string(which) + " for " + rec.pair_name + " injured at stage " +
                      std::to_string(s.stage));
        }
        if (ok) secured[{k, which}] = true;
      }
    }
  }
  std::size_t inconclusive = 0;
  for (const auto& rec : check_requirements(s, A, B, cat, H)) {
    for (const auto* r : {&rec.r1, &rec.r2}) {
      if (r->status == ReqStatus::Unsatisfied) return fail(rec.pair_name + " unsatisfied");
      if (r->status == ReqStatus::Inconclusive) ++inconclusive;
    }
  }
  return {true, std::to_string(s.stage) + " stages, " + std::to_string(s.added.size()) + " added, " +
                    std::to_string(s.excluded.size()) + " excluded, " + std::to_string(inconclusive) + " inconclusive"};
}

// 10. Reports are byte-identical across runs.
Result determinism() {
  const std::vector<std::vector<std::string>> runs = {
      {"census", "--lang", "tower_gap_A0(2)", "--upto", "8"},
      {"check-equi", "--witness", "times_w(sigma_self_sum(2), shift(2, 2))", "--upto", "6"},
      {"cb", "--p", R"(prepend("2:0"))", "--q", R"(prepend("2:1"))", "--A", "sigma_star(2)", "--B", "sigma_star(2)",
       "--verify-upto", "6", "--emit-chains"},
      {"findiff", "--diff", R"(findiff(prefix("2:0"), ["2:1", "2:11"], ["2:00"]))", "--transfer",
       R"(prepend_w("2:0"))", "--upto", "6"},
      {"reduce", "--witness", fixtures::proper_witnesses().back().witness, "--a0", R"("2:")", "--upto", "6"},
      {"transversal", "--collection", fixtures::disjoint_collections().front(), "--upto", "5"},
      {"diag", "--A", "empty(2)", "--B", "sigma_star(2)", "--stages", "30", "--horizon", "6"},
  };
  for (const auto& args : runs) {
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::run(args, out1, err1), c2 = cli::run(args, out2, err2);
    if (c1 != c2 || out1.str() != out2.str() || err1.str() != err2.str()) return fail(args.front() + " differs between runs");
    if (c1 != cli::kClean) return fail(args.front() + " exited " + std::to_string(c1) + ": " + err1.str());
  }
  return {true, std::to_string(runs.size()) + " commands"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Result()> run;
    double budget_s;  // 0 = no limit
  };
  const std::vector<Criterion> criteria = {
      {1, "ternary numbering table", table_fidelity, 1},
      {2, "canonical witnesses verify", canonical_witnesses, 30},
      {3, "Cantor-Bernstein catalog", cantor_bernstein, 60},
      {4, "reduction from witnesses", reduction_law, 0},
      {5, "census relatedness", census_relatedness, 0},
      {6, "finite differences", finite_differences, 0},
      {7, "Dedekind set", dedekind, 0},
      {8, "transversals and choice", transversals, 0},
      {9, "stage construction", diagonalization, 60},
      {10, "determinism", determinism, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.pass && c.budget_s > 0 && secs > c.budget_s) r = fail("over the " + std::to_string(c.budget_s) + " s budget");
    failures += r.pass ? 0 : 1;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << c.name << "  ("
              << std::fixed << std::setprecision(2) << secs << " s)  " << r.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
