#include "hyplan/error.hpp"
#include "hyplan/hybrid_time.hpp"
#include "hyplan/solution_pair.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace hyplan {
namespace {

using test::sample;

TEST(HybridTime, LexicographicOrder) {
  EXPECT_LT((HybridTime{0.5, 1}), (HybridTime{1.0, 0}));
  EXPECT_LT((HybridTime{1.0, 0}), (HybridTime{1.0, 1}));
  EXPECT_LT((HybridTime{1.0, 1}), (HybridTime{1.5, 1}));
  EXPECT_EQ((HybridTime{1.0, 2} + HybridTime{0.5, 1}), (HybridTime{1.5, 3}));
}

TEST(DomainOf, FlowOnly) {
  SolutionPair sp({sample(0, 0, {0}), sample(0.5, 0, {1}), sample(1.0, 0, {2})});
  const HybridTimeDomain expected{{{0.0, 1.0, 0}}};
  EXPECT_EQ(domain_of(sp), expected);
}

TEST(DomainOf, OneJump) {
  SolutionPair sp({sample(0, 0, {0}), sample(1, 0, {1}), sample(1, 1, {2}), sample(1.5, 1, {3})});
  const HybridTimeDomain expected{{{0.0, 1.0, 0}, {1.0, 1.5, 1}}};
  EXPECT_EQ(domain_of(sp), expected);
}

TEST(DomainOf, InstantaneousJump) {
  SolutionPair sp({sample(0, 0, {0}), sample(0, 1, {1})});
  const HybridTimeDomain expected{{{0.0, 0.0, 0}, {0.0, 0.0, 1}}};
  EXPECT_EQ(domain_of(sp), expected);
  EXPECT_TRUE(domain_of(sp).well_formed(true));
}

TEST(DomainOf, EmptyPairThrows) {
  try {
    domain_of(SolutionPair{});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySolutionPair);
  }
}

TEST(HybridTimeDomain, WellFormedRejectsBrokenChains) {
  std::string why;
  EXPECT_FALSE((HybridTimeDomain{{{0.0, 1.0, 0}, {1.5, 2.0, 1}}}).well_formed(false, &why));
  EXPECT_FALSE(why.empty());
  EXPECT_FALSE((HybridTimeDomain{{{0.0, 1.0, 0}, {1.0, 2.0, 2}}}).well_formed());
  EXPECT_FALSE((HybridTimeDomain{{{1.0, 0.5, 0}}}).well_formed());
  EXPECT_FALSE((HybridTimeDomain{{{0.5, 1.0, 0}}}).well_formed(true));
  EXPECT_TRUE((HybridTimeDomain{{{0.5, 1.0, 0}}}).well_formed(false));
  EXPECT_EQ((HybridTimeDomain{{{0.0, 1.0, 0}, {1.0, 2.0, 1}}}).max(), (HybridTime{2.0, 1}));
}

}  // namespace
}  // namespace hyplan
