#include <gtest/gtest.h>

#include "support.hpp"

using namespace pcard;
using testing_support::bin;
using testing_support::symbols;
using testing_support::ter;

namespace {
const Alphabet k2(2), k3(3);
}

TEST(Language, MembershipVerdicts) {
  auto L = gallery::prefix(bin("0"));
  EXPECT_TRUE(L.contains(bin("01")));
  EXPECT_FALSE(L.contains(bin("10")));
  EXPECT_EQ(L.decide(bin("")).verdict, Verdict::NotMember);
}

TEST(Language, ExhaustedIsNotNonMembership) {
  Language spin("spin(2)", k2, [](const Str&, Clock& c) {
    for (;;) c.charge(1);
    return false;
  }, {}, 1000);
  auto r = spin.decide(bin("0"));
  EXPECT_EQ(r.verdict, Verdict::Exhausted);
  EXPECT_GT(r.steps, 1000u);
  EXPECT_THROW(spin.contains(bin("0")), FuelExhausted);
}

TEST(Language, WrongAlphabetIsRejected) {
  EXPECT_THROW(gallery::sigma_star(k2).contains(ter("2")), PreconditionError);
}

TEST(Language, CensusSigmaStar) {
  EXPECT_EQ(census(gallery::sigma_star(k2), 3), 15);
  EXPECT_EQ(census(gallery::empty(k2), 5), 0);
}

TEST(Language, TowerGapCensusMatchesOracle) {
  // Brute-force oracle: lengths 1 and 4..15 lie in A0, so 2 + 16 + 32 = 50 up to length 5.
  EXPECT_EQ(census(gallery::tower_gap_A0(k2), 5), 50);
  const Nat ternary[] = {0, 3, 3, 3, 84};
  for (std::size_t n = 0; n < 5; ++n) EXPECT_EQ(census(gallery::tower_gap_A0(k3), n), ternary[n]) << n;
}

TEST(Language, ClosedCensusAgreesWithEnumeration) {
  const Str zero = bin("0");
  std::vector<Language> langs = {gallery::sigma_star(k2), gallery::prefix(zero), gallery::complement(gallery::prefix(zero)),
                                 gallery::shift_set(k2, 5), gallery::tower_gap_A0(k2), gallery::tower_gap_A1(k2),
                                 gallery::dedekind(k2), gallery::finite(k2, {bin("1"), bin("00")}),
                                 gallery::oplus(gallery::sigma_star(k2), gallery::empty(k2))};
  for (const auto& L : langs) {
    ASSERT_TRUE(L.has_closed_census()) << L.name();
    Nat running = 0;
    for (std::size_t n = 0; n <= 8; ++n) {
      for_each_of_length(k2, n, [&](const Str& x) { running += L.contains(x) ? 1 : 0; });
      EXPECT_EQ(L.closed().census(n), running) << L.name() << " n=" << n;
    }
  }
}

TEST(Language, ClosedRankAgreesWithEnumeration) {
  const Str zero = bin("0");
  std::vector<Language> langs = {gallery::sigma_star(k2), gallery::prefix(zero), gallery::complement(gallery::prefix(zero)),
                                 gallery::shift_set(k2, 5), gallery::tower_gap_A0(k2), gallery::dedekind(k2)};
  for (const auto& L : langs) {
    ASSERT_TRUE(L.has_closed_rank()) << L.name();
    Nat running = 0;
    for_each_upto(k2, 8, [&](const Str& x) {
      if (L.contains(x)) ++running;
      ASSERT_EQ(L.closed().rank(x), running) << L.name() << " at " << x;
    });
  }
}

TEST(Language, CensusTableCsv) {
  auto t = census_table(gallery::sigma_star(k2), 3);
  EXPECT_TRUE(t.valid(k2));
  EXPECT_EQ(t.to_csv(), "n,count\n0,1\n1,3\n2,7\n3,15\n");
}

TEST(Language, EnumerateUpto) {
  EXPECT_EQ(symbols(enumerate_upto(gallery::prefix(bin("0")), 2)), (std::vector<std::string>{"0", "00", "01"}));
  EXPECT_EQ(symbols(enumerate_upto(gallery::dedekind(k2), 16)), (std::vector<std::string>{"1111", std::string(16, '1')}));
}

TEST(Language, DedekindMembership) {
  auto D = gallery::dedekind(k2);
  EXPECT_TRUE(D.contains(bin("1111")));
  EXPECT_FALSE(D.contains(bin("11")));
  EXPECT_FALSE(D.contains(bin("1101")));
  EXPECT_EQ(dedekind_length(0), 4);
  EXPECT_EQ(dedekind_length(1), 16);
  EXPECT_EQ(dedekind_length(2), 65536);
}

TEST(Language, DedekindGapCheck) {
  EXPECT_TRUE(dedekind_gap_check(1));
  EXPECT_TRUE(dedekind_gap_check(2));
  EXPECT_THROW(dedekind_gap_check(3), PreconditionError);
}

TEST(Language, TowerValues) {
  EXPECT_EQ(tow(0), 1);
  EXPECT_EQ(tow(3), 16);
  EXPECT_EQ(tow(4), 65536);
  EXPECT_THROW(tow(6), PreconditionError);
}

TEST(Language, OplusAndTimesMembership) {
  auto S = gallery::sigma_star(k2), F = gallery::finite(k2, {bin("1")});
  auto O = gallery::oplus(S, F);
  EXPECT_TRUE(O.contains(bin("0110")));
  EXPECT_TRUE(O.contains(bin("11")));
  EXPECT_FALSE(O.contains(bin("10")));
  EXPECT_FALSE(O.contains(bin("")));
  EXPECT_EQ(census(O, 3), 8);
  auto T = gallery::times(gallery::prefix(bin("0")), S);
  EXPECT_TRUE(T.contains(pair(bin("01"), bin("1"))));
  EXPECT_FALSE(T.contains(pair(bin("1"), bin("0"))));
}

TEST(Language, FiniteNames) {
  EXPECT_EQ(gallery::finite(k2, {bin("1")}).name(), "finite([\"2:1\"])");
  EXPECT_EQ(gallery::finite(k2, {}).name(), "finite(2, [])");
}

TEST(Language, EnumerationGuard) {
  EXPECT_TRUE(enumeration_feasible(k2, 20));
  EXPECT_FALSE(enumeration_feasible(k2, 40));
  EXPECT_THROW(enumerate_upto(gallery::complement(gallery::dedekind(k2)), 40), InfeasibleError);
}
