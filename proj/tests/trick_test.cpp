#include <gtest/gtest.h>

#include "permsum/error.hpp"
#include "permsum/trick.hpp"

using namespace permsum;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

template <typename F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::MalformedInput;
}

TrickPlan original_plan() { return plan(3, 18, WeightSeq({1, 2, 4})); }

}  // namespace

TEST(TrickPlan, OriginalTrick) {
  const auto p = original_plan();
  EXPECT_EQ(p.n(), 3);
  EXPECT_EQ(p.pool(), 18);
  EXPECT_EQ(p.inputs(), InputVector::identity(3));
  EXPECT_EQ(p.labels(), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(TrickPlan, PoolDefaultsToLargestSum) {
  EXPECT_EQ(plan(3, std::nullopt, WeightSeq({1, 2, 4})).pool(), 17);
  EXPECT_EQ(plan(4, std::nullopt, GreedyWeights{}).pool(), 80);
  EXPECT_EQ(plan(3, std::nullopt, BaseWeights{3}).pool(), 1 + 2 * 3 + 3 * 9);
}

TEST(TrickPlan, Rejections) {
  EXPECT_EQ(error_of([] { plan(3, 10, WeightSeq({1, 2, 4})); }), ErrorKind::PoolTooSmall);
  EXPECT_EQ(error_of([] { plan(4, std::nullopt, WeightSeq({1, 3, 9, 27})); }), ErrorKind::NotDistinguishing);
  EXPECT_EQ(error_of([] { plan(1, std::nullopt, GreedyWeights{}); }), ErrorKind::BadIndex);
  EXPECT_EQ(error_of([] { plan(3, std::nullopt, WeightSeq({1, 2})); }), ErrorKind::SizeMismatch);
  EXPECT_EQ(error_of([] { plan(11, std::nullopt, GreedyWeights{}); }), ErrorKind::TooLarge);
  EXPECT_EQ(error_of([] { plan(3, std::nullopt, GreedyWeights{}, {"a", "b"}); }), ErrorKind::SizeMismatch);
  EXPECT_EQ(error_of([] { TrickPlan::make(InputVector({1, 1, 2}), WeightSeq({1, 2, 4}), 30); }),
            ErrorKind::NonInjectiveInputs);
}

TEST(Encode, Examples) {
  const auto p = original_plan();
  EXPECT_EQ(encode(p, P({1, 2, 3})), 1);
  EXPECT_EQ(encode(p, P({3, 2, 1})), 7);
  EXPECT_EQ(encode(p, P({2, 1, 3})), 2);
  EXPECT_EQ(error_of([&] { encode(p, P({1, 2})); }), ErrorKind::SizeMismatch);
}

TEST(Decode, Examples) {
  const auto p = original_plan();
  EXPECT_EQ(decode(p, 1).perm, P({1, 2, 3}));
  EXPECT_EQ(decode(p, 7).perm, P({3, 2, 1}));
  EXPECT_EQ(error_of([&] { decode(p, 0); }), ErrorKind::UnknownSum);
  EXPECT_EQ(error_of([&] { decode(p, 4); }), ErrorKind::UnknownSum);  // 14 is never taken
  EXPECT_EQ(error_of([&] { decode(p, -1); }), ErrorKind::RemainingOutOfRange);
  EXPECT_EQ(error_of([&] { decode(p, 19); }), ErrorKind::RemainingOutOfRange);
}

TEST(Decode, ReadableAssignment) {
  const auto p = plan(3, 18, WeightSeq({1, 2, 4}), {"lipstick", "knife", "pencil"});
  const auto a = decode(p, 7);  // (3,2,1): person 3 took the lipstick, ...
  ASSERT_EQ(a.readable.size(), 3u);
  EXPECT_EQ(a.total, 11);
  EXPECT_EQ(a.readable[0].object, "lipstick");
  EXPECT_EQ(a.readable[0].person, 3);
  EXPECT_EQ(a.readable[0].nuts, 3);
  EXPECT_EQ(a.readable[1].person, 2);
  EXPECT_EQ(a.readable[1].nuts, 4);
  EXPECT_EQ(a.readable[2].person, 1);
  EXPECT_EQ(a.readable[2].nuts, 4);
  std::int64_t taken = 0;
  for (const auto& e : a.readable) taken += e.nuts;
  EXPECT_EQ(taken, a.total);
}

TEST(Decode, RoundTripAndRemainderRange) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : {plan(n, std::nullopt, GreedyWeights{}), plan(n, 1000000, BaseWeights{n + 1})}) {
      const auto low = extremal_sums(p.weights(), p.inputs()).min;
      for (const auto& perm : enumerate_antilex(n)) {
        const auto left = encode(p, perm);
        ASSERT_GE(left, 0);
        ASSERT_LE(left, p.pool() - low);
        ASSERT_EQ(decode(p, left).perm, perm);
      }
    }
  }
}

TEST(TrickPlan, DefaultLabels) {
  EXPECT_EQ(default_labels(2), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(default_labels(27).back(), "object 27");
}
