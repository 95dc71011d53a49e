#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "support.hpp"

using namespace pcard;
using testing_support::bin;
using testing_support::symbols;

namespace {

const Alphabet k2(2);

InjectionPair prepend_pair() {
  auto S = gallery::sigma_star(k2);
  return make_injection_pair(S, S, maps::prepend(bin("0")), maps::prepend(bin("1")));
}

}  // namespace

TEST(Classify, ChainsOfPrependPair) {
  auto P = prepend_pair();
  auto e = classify(bin(""), Side::A, P);
  EXPECT_EQ(e.origin, Origin::SourceInA);
  EXPECT_EQ(symbols(e.walk), (std::vector<std::string>{""}));

  auto ones = classify(bin("11"), Side::A, P);
  EXPECT_EQ(ones.origin, Origin::SourceInB);
  EXPECT_EQ(symbols(ones.walk), (std::vector<std::string>{"11", "1"}));

  auto zeros = classify(bin("00"), Side::A, P);
  EXPECT_EQ(zeros.origin, Origin::SourceInA);
  EXPECT_EQ(symbols(zeros.walk), (std::vector<std::string>{"00"}));
}

TEST(Classify, WalksShrinkAndStayShort) {
  auto P = prepend_pair();
  for (Side side : {Side::A, Side::B}) {
    for_each_upto(k2, 7, [&](const Str& x) {
      auto v = classify(x, side, P);
      ASSERT_LE(v.walk.size(), x.size() + 2);
      for (std::size_t i = 1; i < v.walk.size(); ++i) ASSERT_LT(v.walk[i].size(), v.walk[i - 1].size());
    });
  }
}

TEST(CantorBernstein, PrependPairValues) {
  auto E = cb_witness(prepend_pair(), 6);
  EXPECT_EQ(E.forward(bin(""))->symbols(), "0");
  EXPECT_EQ(E.forward(bin("11"))->symbols(), "1");
  EXPECT_TRUE(verify_equipollence(E, 8).clean());
}

TEST(CantorBernstein, AppendZeroBothWays) {
  auto S = gallery::sigma_star(k2);
  auto E = cb_witness(make_injection_pair(S, S, maps::append(bin("0")), maps::append(bin("0"))), 6);
  std::vector<std::string> got;
  for (const char* x : {"", "0", "1", "00", "01"}) got.push_back(E.forward(bin(x))->symbols());
  // Oracle values: the bijection differs from p wherever the chain starts in B.
  EXPECT_EQ(got, (std::vector<std::string>{"0", "", "10", "000", "010"}));
  EXPECT_TRUE(verify_equipollence(E, 8).clean());
}

TEST(CantorBernstein, FixtureCatalogVerifies) {
  ASSERT_GE(fixtures::injection_pairs().size(), 5u);
  for (const auto& f : fixtures::injection_pairs()) {
    auto P = make_injection_pair(dsl::eval_language(f.A), dsl::eval_language(f.B), dsl::eval_map(f.p),
                                 dsl::eval_map(f.q));
    EXPECT_TRUE(verify_equipollence(cb_witness(P, 8), 7).clean()) << f.p << " / " << f.q;
  }
}

TEST(CantorBernstein, AuditRejectsShrinkingMap) {
  auto S = gallery::sigma_star(k2);
  auto P = make_injection_pair(S, S, maps::prepend(bin("0")), maps::add(k2, 1));
  try {
    cb_witness(P, 4);
    FAIL() << "expected an audit error";
  } catch (const CbAuditError& e) {
    EXPECT_EQ(e.offending().symbols(), "0");
  }
}

TEST(CantorBernstein, AuditRejectsCollision) {
  auto S = gallery::sigma_star(k2);
  auto q = maps::replace_first(k2, 0).with_inverse(maps::identity(k2));
  auto P = make_injection_pair(S, S, maps::prepend(bin("0")), q);
  try {
    cb_witness(P, 4);
    FAIL() << "expected an audit error";
  } catch (const CbAuditError& e) {
    EXPECT_EQ(e.offending().symbols(), "1");
  }
}

TEST(CantorBernstein, MapsNeedInverses) {
  auto S = gallery::sigma_star(k2);
  EXPECT_THROW(make_injection_pair(S, S, maps::prepend(bin("0")), maps::replace_first(k2, 1)), PreconditionError);
}
