#pragma once

// Fixture catalogs shared by the unit tests and the acceptance binary.
// Everything is written in the expression language so the same strings can
// be handed to the command-line tool.

#include <string>
#include <vector>

#include "pcard.hpp"

namespace fixtures {

/// Witnesses whose endpoints both differ from Σ*, with an a0 outside A.
struct ReductionFixture {
  std::string witness;
  std::string a0;
};

inline const std::vector<ReductionFixture>& proper_witnesses() {
  static const std::vector<ReductionFixture> v = {
      {R"(witness(flip(2), flip(2), prefix("2:0"), prefix("2:1")))", R"("2:")"},
      {R"(commutator(prefix("2:0"), prefix("2:1")))", R"("2:")"},
      {R"(identity_w(prefix("2:0")))", R"("2:1")"},
      {R"(oplus_w(identity_w(sigma_star(2)), prepend_w("2:0")))", R"("2:")"},
      {R"(findiff_w(findiff(dedekind(2), ["2:0"], []), findiff(dedekind(2), ["2:1"], [])))", R"("2:")"},
      // backward spins on inputs outside 0Σ*, so the reduction times out there
      {R"(witness(prepend("2:0"), strip_or_spin("2:0"), prefix("2:1"), prefix("2:01")))", R"("2:")"},
      // backward answers on 0Σ* too, but the forward round trip rejects it
      {R"(witness(replace_first(2, 1), replace_first(2, 0), prefix("2:0"), prefix("2:1")))", R"("2:")"},
  };
  return v;
}

/// Canonical witnesses checked exhaustively, with their length bound.
struct WitnessFixture {
  std::string expr;
  std::size_t upto;
};

inline const std::vector<WitnessFixture>& canonical_witnesses() {
  static const std::vector<WitnessFixture> v = {
      {"sigma_self_sum(2)", 8},
      {"sigma_self_sum(3)", 5},
      {"sigma_self_product(2)", 8},
      {"sigma_self_product(3)", 5},
      {"shift(2, 0)", 8},
      {"shift(2, 1)", 8},
      {"shift(2, 2)", 8},
      {"shift(2, 3)", 8},
      {"shift(2, 4)", 8},
      {"shift(3, 4)", 5},
      {"oplus_w(sigma_self_sum(2), shift(2, 3))", 8},
      {"oplus_w(sigma_self_product(3), sigma_self_sum(3))", 5},
      {"times_w(sigma_self_sum(2), shift(2, 2))", 8},
      {"times_w(shift(3, 1), sigma_self_sum(3))", 5},
      {"times_w(sigma_self_product(2), sigma_self_product(2))", 8},
  };
  return v;
}

/// Length-increasing injective pairs (p : A -> B, q : B -> A).
struct InjectionFixture {
  std::string p, q, A, B;
};

inline const std::vector<InjectionFixture>& injection_pairs() {
  static const std::vector<InjectionFixture> v = {
      {R"(prepend("2:0"))", R"(prepend("2:1"))", "sigma_star(2)", "sigma_star(2)"},
      {R"(append("2:0"))", R"(append("2:0"))", "sigma_star(2)", "sigma_star(2)"},
      {R"(prepend("2:00"))", R"(append("2:1"))", "sigma_star(2)", "sigma_star(2)"},
      {R"(prepend("2:1"))", R"(prepend("2:0"))", R"(prefix("2:0"))", R"(prefix("2:1"))"},
      {R"(prepend("2:01"))", R"(append("2:1"))", "sigma_star(2)", R"(prefix("2:0"))"},
      {R"(prepend("3:2"))", R"(append("3:12"))", "sigma_star(3)", "sigma_star(3)"},
      {R"(compose_map(append("2:0"), prepend("2:0")))", R"(prepend("2:1"))", R"(prefix("2:1"))", R"(prefix("2:0"))"},
  };
  return v;
}

/// Finite differences over bases with a known witness Σ* ≈ base.
struct DiffFixture {
  std::string diff;
  std::string base_witness;  // Σ* ≈ base, or empty when the base is not countable this way
};

inline const std::vector<DiffFixture>& finite_diffs() {
  static const std::vector<DiffFixture> v = {
      {R"(findiff(sigma_star(2), [], ["2:"]))", "identity_w(sigma_star(2))"},
      {R"(findiff(prefix("2:0"), ["2:1", "2:11"], ["2:00"]))", R"(prepend_w("2:0"))"},
      {R"(findiff(shift_set(2, 3), ["2:0"], ["2:11", "2:000"]))", "shift(2, 3)"},
      {R"(findiff(tower_gap_A0(2), ["2:", "2:10"], ["2:0000", "2:1"]))", "inverse(rank_witness(tower_gap_A0(2)))"},
      {R"(findiff(dedekind(2), ["2:0", "2:101"], []))", ""},
  };
  return v;
}

/// Pairs for findiff_witness, and whether their offsets match.
struct OffsetCase {
  std::string left, right;
  bool matches;
};

inline const std::vector<OffsetCase>& offset_matrix() {
  static const std::vector<OffsetCase> v = {
      {R"(findiff(dedekind(2), ["2:0"], []))", R"(findiff(dedekind(2), ["2:1"], []))", true},
      {R"(findiff(dedekind(2), [], []))", R"(findiff(dedekind(2), [], []))", true},
      {R"(findiff(dedekind(2), ["2:0"], ["2:1111"]))", R"(findiff(dedekind(2), [], []))", true},
      {R"(findiff(sigma_star(2), [], ["2:"]))", R"(findiff(sigma_star(2), [], ["2:0"]))", true},
      {R"(findiff(prefix("2:0"), ["2:1"], []))", R"(findiff(prefix("2:0"), ["2:11"], []))", true},
      {R"(findiff(dedekind(2), [], ["2:1111"]))", R"(findiff(dedekind(2), [], []))", false},
      {R"(findiff(dedekind(2), ["2:0", "2:1"], []))", R"(findiff(dedekind(2), ["2:00"], []))", false},
      {R"(findiff(sigma_star(2), [], []))", R"(findiff(sigma_star(2), [], ["2:"]))", false},
  };
  return v;
}

/// Pairwise-disjoint collections with their honesty windows.
inline const std::vector<std::string>& disjoint_collections() {
  static const std::vector<std::string> v = {
      "collection(suffix_collection(2), [1, 1], [1, 1])",
      "collection(doubled_collection(2), [0, 2], [1, 2])",
      "collection(padded_collection(2), [1, 2], [1, 2])",
      "collection(suffix_collection(3), [1, 1], [1, 1])",
  };
  return v;
}

}  // namespace fixtures
