#pragma once

// Permutation sums T(pi) = sum_j g[j] * x[pi(j)] over all of S_n.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "permsum/permutation.hpp"

namespace permsum {

/// Strictly increasing multipliers g[1] < ... < g[n]; g[1] >= 1 unless
/// zero is explicitly allowed, in which case g[1] >= 0.
class WeightSeq {
 public:
  explicit WeightSeq(std::vector<std::int64_t> g, bool allow_zero = false);

  int size() const noexcept { return static_cast<int>(g_.size()); }
  std::int64_t operator()(int j) const { return g_[static_cast<std::size_t>(j - 1)]; }
  std::span<const std::int64_t> values() const noexcept { return g_; }
  std::int64_t total() const;

  friend bool operator==(const WeightSeq& a, const WeightSeq& b) { return a.g_ == b.g_; }

 private:
  std::vector<std::int64_t> g_;
};

/// Nuts initially given to person i. Arbitrary integers; verification
/// requires the entries to be pairwise distinct.
class InputVector {
 public:
  explicit InputVector(std::vector<std::int64_t> x);
  /// x[i] = i.
  static InputVector identity(int n);

  int size() const noexcept { return static_cast<int>(x_.size()); }
  std::int64_t operator()(int i) const { return x_[static_cast<std::size_t>(i - 1)]; }
  std::span<const std::int64_t> values() const noexcept { return x_; }
  bool injective() const;

  friend bool operator==(const InputVector&, const InputVector&) = default;

 private:
  std::vector<std::int64_t> x_;
};

struct SumTable {
  WeightSeq weights;
  InputVector inputs;
  /// Sum value -> permutations attaining it, each list in antilex order.
  std::map<std::int64_t, std::vector<Permutation>> entries;

  std::uint64_t permutation_count() const;
};

struct CollisionWitness {
  Permutation p;  // p > q in antilex order
  Permutation q;
  std::int64_t sum;
};

struct OrderWitness {
  Permutation p;  // immediate successor of q
  Permutation q;
  std::int64_t sum_p;  // sum_p <= sum_q
  std::int64_t sum_q;
};

struct VerificationReport {
  bool distinct = false;
  bool order_compatible = false;
  std::optional<CollisionWitness> collision_witness;
  std::optional<OrderWitness> order_witness;
};

struct SumRange {
  std::int64_t min;
  std::int64_t max;
};

/// Throws SizeMismatch, Overflow.
std::int64_t eval_sum(const WeightSeq& w, const InputVector& x, const Permutation& p);

/// Throws TooLarge, Overflow, SizeMismatch.
SumTable sum_table(const WeightSeq& w, const InputVector& x, int limit = kDefaultEnumerationLimit);

/// Both verifiers walk S_n once in antilex order and fill the whole report.
/// The collision witness is the first permutation in that walk whose sum was
/// already taken, paired with the earliest permutation holding that sum. The
/// order witness is the first successor step along which the sum fails to
/// increase. Throws TooLarge, Overflow, NonInjectiveInputs, SizeMismatch.
VerificationReport verify_distinct(const WeightSeq& w, const InputVector& x,
                                   int limit = kDefaultEnumerationLimit);
VerificationReport verify_order_compatible(const WeightSeq& w, const InputVector& x,
                                           int limit = kDefaultEnumerationLimit);

/// Rearrangement extremes: ascending weights against ascending inputs give
/// the maximum, against descending inputs the minimum.
SumRange extremal_sums(const WeightSeq& w, const InputVector& x);

/// Adds y to every entry. Throws Overflow.
InputVector shift_inputs(const InputVector& x, std::int64_t y);

}  // namespace permsum
