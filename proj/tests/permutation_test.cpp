#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "permsum/error.hpp"
#include "permsum/permutation.hpp"

using namespace permsum;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

std::vector<Permutation> collect(int n) {
  std::vector<Permutation> out;
  for (const auto& p : enumerate_antilex(n)) out.push_back(p);
  return out;
}

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

}  // namespace

TEST(Permutation, RejectsNonPermutations) {
  EXPECT_EQ(error_of([] { P({1, 1, 2}); }), ErrorKind::NotAPermutation);
  EXPECT_EQ(error_of([] { P({0, 1}); }), ErrorKind::NotAPermutation);
  EXPECT_EQ(error_of([] { P({}); }), ErrorKind::NotAPermutation);
  EXPECT_EQ(P({2, 1})(1), 2);
}

TEST(CompareAntilex, ReversedDisplayExamples) {
  // <5,2,4,3,1>← vs <4,5,2,3,1>←
  auto r = compare_antilex(P({1, 3, 4, 2, 5}), P({1, 3, 2, 5, 4}));
  EXPECT_EQ(r.outcome, Order::Greater);
  EXPECT_EQ(r.pivot, 5);

  r = compare_antilex(P({1, 5, 3, 2, 4}), P({3, 5, 1, 2, 4}));
  EXPECT_EQ(r.outcome, Order::Greater);
  EXPECT_EQ(r.pivot, 3);

  r = compare_antilex(P({3, 5, 1, 2, 4}), P({1, 5, 3, 2, 4}));
  EXPECT_EQ(r.outcome, Order::Less);
  EXPECT_EQ(r.pivot, 3);
}

TEST(CompareAntilex, SuccessorPairPivotIsAnIndex) {
  // <5,2,4,3,1>← |> <5,2,4,1,3>← differ at indices 1 and 2 only.
  auto r = compare_antilex(parse_reversed("⟨5,2,4,3,1⟩←"), parse_reversed("⟨5,2,4,1,3⟩←"));
  EXPECT_EQ(r.outcome, Order::Greater);
  EXPECT_EQ(r.pivot, 2);
}

TEST(CompareAntilex, EqualAndExtremes) {
  auto r = compare_antilex(P({2, 1, 3}), P({2, 1, 3}));
  EXPECT_EQ(r.outcome, Order::Equal);
  EXPECT_FALSE(r.pivot);

  for (int n = 1; n <= 5; ++n) {
    for (const auto& q : collect(n)) {
      if (q.is_identity()) continue;
      EXPECT_EQ(compare_antilex(Permutation::identity(n), q).outcome, Order::Greater);
      if (!q.is_reversal()) EXPECT_EQ(compare_antilex(Permutation::reversal(n), q).outcome, Order::Less);
    }
  }
  EXPECT_EQ(error_of([] { compare_antilex(P({1, 2}), P({1, 2, 3})); }), ErrorKind::SizeMismatch);
}

TEST(CompareAntilex, TotalTransitiveAndPivotBounded) {
  for (int n = 1; n <= 5; ++n) {
    const auto all = collect(n);
    for (const auto& p : all) {
      for (const auto& q : all) {
        const auto pq = compare_antilex(p, q);
        const auto qp = compare_antilex(q, p);
        EXPECT_EQ(pq.outcome == Order::Equal, p == q);
        if (pq.outcome == Order::Greater) EXPECT_EQ(qp.outcome, Order::Less);
        if (pq.pivot) {
          EXPECT_GE(*pq.pivot, 2);
          EXPECT_LE(*pq.pivot, n);
        }
      }
    }
  }
  const auto all = collect(5);
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (compare_antilex(a, b).outcome != Order::Greater) continue;
      for (const auto& c : all) {
        if (compare_antilex(b, c).outcome == Order::Greater) {
          ASSERT_EQ(compare_antilex(a, c).outcome, Order::Greater);
        }
      }
    }
  }
}

TEST(Successor, Examples) {
  EXPECT_EQ(successor(P({3, 1, 4, 2, 5})), P({1, 3, 4, 2, 5}));
  EXPECT_EQ(successor(P({3, 2, 1})), P({2, 3, 1}));
  EXPECT_EQ(error_of([] { successor(Permutation::identity(4)); }), ErrorKind::NoSuccessor);
  EXPECT_EQ(error_of([] { successor(Permutation::identity(1)); }), ErrorKind::NoSuccessor);
}

TEST(Predecessor, Examples) {
  EXPECT_EQ(predecessor(P({1, 3, 4, 2, 5})), P({3, 1, 4, 2, 5}));
  EXPECT_EQ(predecessor(P({2, 3, 1})), P({3, 2, 1}));
  EXPECT_EQ(error_of([] { predecessor(P({3, 2, 1})); }), ErrorKind::NoPredecessor);
}

TEST(EnumerateAntilex, SmallCases) {
  ASSERT_EQ(collect(1), std::vector<Permutation>{P({1})});
  const std::vector<Permutation> s3{P({3, 2, 1}), P({2, 3, 1}), P({3, 1, 2}),
                                    P({1, 3, 2}), P({2, 1, 3}), P({1, 2, 3})};
  EXPECT_EQ(collect(3), s3);
  const auto s4 = collect(4);
  ASSERT_EQ(s4.size(), 24u);
  EXPECT_EQ(s4.front(), P({4, 3, 2, 1}));
  EXPECT_EQ(s4.back(), P({1, 2, 3, 4}));
}

TEST(EnumerateAntilex, Limits) {
  EXPECT_EQ(error_of([] { enumerate_antilex(11); }), ErrorKind::TooLarge);
  EXPECT_EQ(error_of([] { enumerate_antilex(4, 3); }), ErrorKind::TooLarge);
  EXPECT_EQ(error_of([] { enumerate_antilex(0); }), ErrorKind::BadIndex);
  EXPECT_NO_THROW(enumerate_antilex(12, 12));
}

TEST(EnumerateAntilex, MatchesSortedOracle) {
  for (int n = 1; n <= 6; ++n) {
    const auto expected = oracle::sorted_perms(n);
    const auto got = collect(n);
    ASSERT_EQ(got.size(), expected.size());
    ASSERT_EQ(got.size(), factorial(n));
    for (std::size_t k = 0; k < got.size(); ++k) {
      ASSERT_EQ(std::vector<int>(got[k].values().begin(), got[k].values().end()), expected[k]) << "n=" << n;
    }
  }
}

TEST(EnumerateAntilex, AdjacencyAndInversePairs) {
  for (int n = 1; n <= 7; ++n) {
    const auto all = collect(n);
    std::set<std::vector<int>> unique;
    for (std::size_t k = 0; k < all.size(); ++k) {
      unique.insert({all[k].values().begin(), all[k].values().end()});
      if (k + 1 < all.size()) {
        ASSERT_EQ(successor(all[k]), all[k + 1]);
        ASSERT_EQ(predecessor(all[k + 1]), all[k]);
        ASSERT_EQ(compare_antilex(all[k + 1], all[k]).outcome, Order::Greater);
      }
    }
    EXPECT_EQ(unique.size(), factorial(n));
  }
}

TEST(Successor, LowerPartShape) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : collect(n)) {
      if (p.is_identity()) continue;
      const auto q = successor(p);
      const int j0 = *compare_antilex(q, p).pivot;
      for (int j = 1; j + 1 < j0; ++j) {
        EXPECT_GT(q(j), q(j + 1));
        EXPECT_LT(p(j), p(j + 1));
      }
    }
  }
}

TEST(ReversedDisplay, ParseAndFormat) {
  EXPECT_EQ(parse_reversed("⟨5,2,4,3,1⟩←"), P({1, 3, 4, 2, 5}));
  EXPECT_EQ(parse_reversed("⟨1⟩←"), P({1}));
  EXPECT_EQ(parse_reversed("5,2,4,3,1"), P({1, 3, 4, 2, 5}));
  EXPECT_EQ(parse_reversed("<3,1,2,4>"), P({4, 2, 1, 3}));
  EXPECT_EQ(format_reversed(P({4, 2, 1, 3})), "⟨3,1,2,4⟩←");
  EXPECT_EQ(format_one_line(P({3, 1, 4, 2})), "3,1,4,2");
  EXPECT_EQ(parse_one_line(" 3, 1,4 ,2"), P({3, 1, 4, 2}));

  EXPECT_EQ(error_of([] { parse_reversed("⟨1,2"); }), ErrorKind::MalformedInput);
  EXPECT_EQ(error_of([] { parse_one_line("1,,2"); }), ErrorKind::MalformedInput);
  EXPECT_EQ(error_of([] { parse_one_line("1,x"); }), ErrorKind::MalformedInput);
  EXPECT_EQ(error_of([] { parse_one_line("1,2,2"); }), ErrorKind::NotAPermutation);
  EXPECT_EQ(error_of([] { parse_reversed("⟨1,4⟩←"); }), ErrorKind::NotAPermutation);
}

TEST(ReversedDisplay, RoundTripRandom) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    const Permutation p(v);
    ASSERT_EQ(parse_reversed(format_reversed(p)), p);
    ASSERT_EQ(parse_one_line(format_one_line(p)), p);
  }
}
