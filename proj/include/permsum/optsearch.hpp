#pragma once

// Exact minimization of the largest permutation sum over strictly increasing
// integer weights, subject to all n! sums being distinct.

#include <cstdint>
#include <optional>
#include <vector>

#include "permsum/weighting.hpp"

namespace permsum {

inline constexpr int kDefaultSearchLimit = 5;

struct SearchConfig {
  int n = 0;
  /// Inclusive cap on the objective. Defaults to the cheapest known feasible
  /// sequence (greedy, or a base-m sequence when greedy collides on `inputs`).
  std::optional<std::int64_t> budget;
  bool allow_zero = false;
  /// Defaults to the identity. Entries must be distinct and non-negative.
  std::optional<InputVector> inputs;
  int max_n = kDefaultSearchLimit;
  /// Stop after this many nodes; the result is then reported as not optimal.
  std::optional<std::uint64_t> node_limit;
};

struct SearchResult {
  WeightSeq weights;
  std::int64_t max_sum = 0;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  std::int64_t budget = 0;
};

/// Depth-first branch and bound over increasing prefixes in lexicographic
/// order. A prefix is cut when its cheapest completion cannot beat the
/// incumbent, or when two permutations agreeing above the prefix already
/// share a sum. Among objective-minimal sequences the lexicographically
/// smallest is returned.
/// Throws TooLarge, InfeasibleBudget, NodeLimitReached, NegativeInputs,
/// NonInjectiveInputs, SizeMismatch.
SearchResult exact_search(const SearchConfig& cfg);

/// p - q over all ordered pairs of distinct permutations of {1..n}
/// (n! * (n! - 1) vectors, duplicates kept). Throws TooLarge past max_n.
std::vector<std::vector<int>> difference_vectors(int n, int max_n = kDefaultSearchLimit);

}  // namespace permsum
