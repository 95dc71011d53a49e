#include <gtest/gtest.h>

#include "support.hpp"

using namespace pcard;
using testing_support::bin;

namespace {

const Alphabet k2(2);

std::vector<std::string> images(const PartialMap& f, const std::vector<std::string>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) {
    auto y = f(bin(x));
    out.push_back(y ? y->symbols() : "<undefined>");
  }
  return out;
}

std::vector<std::string> violation_inputs(const VerificationReport& r, char side) {
  std::vector<std::string> out;
  for (const auto& v : r.violations)
    if (v.side == side) out.push_back(v.input.symbols());
  return out;
}

}  // namespace

TEST(PartialMap, ClockedRun) {
  auto p = maps::prepend(bin("0"));
  auto r = p.run(bin("1"));
  ASSERT_TRUE(r.value);
  EXPECT_EQ(r.value->symbols(), "01");
  EXPECT_FALSE(r.timed_out);
  EXPECT_LE(r.steps, p.bound()(1));

  auto spin = maps::strip_or_spin(bin("0"));
  auto s = spin.run(bin("1"));
  EXPECT_TRUE(s.timed_out);
  EXPECT_FALSE(s.value);
  EXPECT_EQ(spin(bin("01"))->symbols(), "1");
}

TEST(PartialMap, WrongAlphabetRejected) {
  EXPECT_THROW(maps::identity(k2).run(Str(Alphabet(3), "2")), PreconditionError);
}

TEST(Maps, SelfSumValues) {
  EXPECT_EQ(images(maps::self_sum_forward(k2), {"", "0", "1"}), (std::vector<std::string>{"0", "1", "00"}));
  auto back = maps::self_sum_backward(k2);
  for_each_upto(k2, 6, [&](const Str& x) { EXPECT_EQ(*back(*maps::self_sum_forward(k2)(x)), x); });
  EXPECT_FALSE(back(bin("")));
}

TEST(Maps, ShiftValues) {
  EXPECT_EQ(images(maps::add(k2, 2), {"", "0"}), (std::vector<std::string>{"1", "00"}));
  EXPECT_EQ(images(maps::add(k2, -2), {"0", "1"}), (std::vector<std::string>{"<undefined>", ""}));
}

TEST(Maps, TimesActsComponentwise) {
  auto t = maps::times(maps::prepend(bin("0")), maps::identity(k2));
  EXPECT_EQ(t(pair(bin(""), bin("")))->symbols(), "0");
  EXPECT_EQ(*t(pair(bin("1"), bin("01"))), pair(bin("01"), bin("01")));
}

TEST(Maps, OplusDispatchesOnTag) {
  auto o = maps::oplus(maps::prepend(bin("1")), maps::add(k2, 1));
  EXPECT_EQ(o(bin("00"))->symbols(), "010");
  EXPECT_EQ(o(bin("1"))->symbols(), "10");
  EXPECT_FALSE(o(bin("")));
}

TEST(Maps, ComposeAppliesFirstArgumentFirst) {
  auto c = maps::compose(maps::prepend(bin("1")), maps::prepend(bin("0")));
  EXPECT_EQ(c(bin(""))->symbols(), "01");
  ASSERT_NE(c.inverse(), nullptr);
  EXPECT_EQ((*c.inverse())(bin("01"))->symbols(), "");
}

TEST(Audit, SuccessorIsNotLengthIncreasing) {
  auto a = audit_map(maps::add(k2, 1), 6);
  EXPECT_TRUE(a.injective);
  EXPECT_FALSE(a.length_increasing);
  ASSERT_TRUE(a.not_increasing_at);
  EXPECT_EQ(a.not_increasing_at->symbols(), "0");
}

TEST(Audit, CollisionReported) {
  auto a = audit_map(maps::replace_first(k2, 0), 4);
  EXPECT_FALSE(a.injective);
  ASSERT_TRUE(a.collision);
  EXPECT_EQ(a.collision->first.symbols(), "0");
  EXPECT_EQ(a.collision->second.symbols(), "1");
}

TEST(Audit, HonestyExponent) {
  auto a = audit_map(maps::prepend(bin("0")), 6);
  EXPECT_TRUE(a.length_increasing);
  EXPECT_EQ(a.honest_with, 1u);
  EXPECT_EQ(a.defined, 127u);
}

TEST(Audit, TimeoutsCollected) {
  auto a = audit_map(maps::strip_or_spin(bin("0")), 2);
  EXPECT_EQ(testing_support::symbols(a.timeouts), (std::vector<std::string>{"", "1", "10", "11"}));
}

TEST(Verify, PrependIntoSigmaStarBreaksOnTheBSide) {
  auto p = maps::prepend(bin("0"));
  auto S = gallery::sigma_star(k2);
  auto E = make_equipollence("prepend_into_sigma", p, *p.inverse(), S, S);
  auto r = verify_equipollence(E, 2);
  EXPECT_TRUE(violation_inputs(r, 'A').empty());
  EXPECT_EQ(violation_inputs(r, 'B'), (std::vector<std::string>{"", "1", "10", "11"}));
  EXPECT_TRUE(r.has(ViolationKind::RoundtripFailure));
  EXPECT_EQ(r.checked_a, 7u);
  EXPECT_EQ(r.checked_b, 7u);
}

TEST(Verify, EscapeAndClockBreach) {
  auto S = gallery::sigma_star(k2);
  auto p = maps::prepend(bin("0"));
  auto escaping = make_equipollence("escape", p, *p.inverse(), S, gallery::prefix(bin("1")));
  EXPECT_TRUE(verify_equipollence(escaping, 3).has(ViolationKind::EscapesCodomain));

  auto spinning = make_equipollence("spin", maps::identity(k2), maps::strip_or_spin(bin("")).renamed("spin"), S, S);
  EXPECT_TRUE(verify_equipollence(spinning, 3).clean());
  auto breaking = make_equipollence("breach", maps::identity(k2), maps::strip_or_spin(bin("0")), S, S);
  EXPECT_TRUE(verify_equipollence(breaking, 3).has(ViolationKind::ClockBreach));
}

TEST(Verify, MaxStepsStayWithinBounds) {
  auto E = sigma_self_sum(k2);
  auto r = verify_equipollence(E, 8);
  ASSERT_TRUE(r.clean());
  ASSERT_EQ(r.max_steps.size(), 9u);
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_LE(r.max_steps[n], std::max(E.forward.bound()(n), E.backward.bound()(n)));
}

TEST(Witness, CanonicalWitnessesVerify) {
  EXPECT_TRUE(verify_equipollence(sigma_self_sum(k2), 8).clean());
  EXPECT_TRUE(verify_equipollence(sigma_self_product(k2), 8).clean());
  EXPECT_TRUE(verify_equipollence(sigma_self_sum(Alphabet(3)), 5).clean());
  for (long long n = 0; n <= 4; ++n) EXPECT_TRUE(verify_equipollence(shift_witness(k2, n), 8).clean()) << n;
  EXPECT_TRUE(verify_equipollence(prepend_witness(bin("01")), 8).clean());
  EXPECT_THROW(shift_witness(k2, -1), PreconditionError);
}

TEST(Witness, Combinators) {
  auto S = gallery::sigma_star(k2);
  auto P0 = gallery::prefix(bin("0"));
  EXPECT_TRUE(verify_equipollence(oplus_witness(sigma_self_sum(k2), shift_witness(k2, 3)), 7).clean());
  EXPECT_TRUE(verify_equipollence(times_witness(shift_witness(k2, 1), sigma_self_sum(k2)), 7).clean());
  EXPECT_TRUE(verify_equipollence(commutator(P0, S), 7).clean());
  EXPECT_TRUE(verify_equipollence(associator(S, P0, gallery::dedekind(k2)), 7).clean());
  EXPECT_TRUE(verify_equipollence(inverse(sigma_self_sum(k2)), 7).clean());
  EXPECT_TRUE(verify_equipollence(identity_witness(gallery::tower_gap_A1(k2)), 7).clean());
}

TEST(Witness, ComposeRunsFirstWitnessFirst) {
  auto E = compose_witness(prepend_witness(bin("1")), prepend_witness(bin("0")));
  EXPECT_EQ(E.forward(bin(""))->symbols(), "01");
  EXPECT_EQ(E.B.name(), "image(prepend_w(\"2:0\"), prefix(\"2:1\"))");
  EXPECT_TRUE(verify_equipollence(E, 7).clean());
}

TEST(Witness, ComposeShiftsThroughRestriction) {
  auto E = compose_witness(shift_witness(k2, 1), shift_witness(k2, 1));
  EXPECT_EQ(E.B.name(), "image(shift(2, 1), shift_set(2, 1))");
  EXPECT_TRUE(verify_equipollence(E, 8).clean());
  EXPECT_EQ(census(E.B, 3), 13);
}

TEST(Witness, ComposeRejectsUnrelatedEndpoints) {
  EXPECT_THROW(compose_witness(prepend_witness(bin("1")), identity_witness(gallery::prefix(bin("0")))),
               PreconditionError);
}

TEST(Witness, RestrictToSubset) {
  auto R = restrict_witness(sigma_self_sum(k2), gallery::prefix(bin("1")));
  EXPECT_TRUE(verify_equipollence(R, 7).clean());
  EXPECT_TRUE(R.B.contains(*R.forward(bin("10"))));
  EXPECT_FALSE(R.B.contains(*R.forward(bin("01"))));
}

TEST(Witness, AlphabetMismatchRejected) {
  EXPECT_THROW(make_equipollence("bad", maps::identity(k2), maps::identity(k2), gallery::sigma_star(k2),
                                 gallery::sigma_star(Alphabet(3))),
               PreconditionError);
}
