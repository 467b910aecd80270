#pragma once

// The nut trick: person i gets x[i] nuts, whoever picks object j takes
// g[j] * x[i] more from a pool, and the remainder on the table identifies
// who picked what.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "permsum/weighting.hpp"

namespace permsum {

struct GreedyWeights {};
struct BaseWeights {
  std::int64_t m;
};
using WeightSource = std::variant<GreedyWeights, BaseWeights, WeightSeq>;

class TrickPlan {
 public:
  /// Validates the plan: inputs distinct, every sum distinct, pool covering
  /// the largest sum. Throws NonInjectiveInputs, NotDistinguishing,
  /// PoolTooSmall, SizeMismatch, TooLarge.
  static TrickPlan make(InputVector inputs, WeightSeq weights, std::int64_t pool,
                        std::vector<std::string> labels = {}, int limit = kDefaultEnumerationLimit);

  int n() const noexcept { return weights_.size(); }
  const InputVector& inputs() const noexcept { return inputs_; }
  const WeightSeq& weights() const noexcept { return weights_; }
  std::int64_t pool() const noexcept { return pool_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const Permutation* lookup(std::int64_t sum) const;

 private:
  TrickPlan(InputVector inputs, WeightSeq weights, std::int64_t pool, std::vector<std::string> labels,
            std::shared_ptr<const std::unordered_map<std::int64_t, Permutation>> by_sum)
      : inputs_(std::move(inputs)),
        weights_(std::move(weights)),
        pool_(pool),
        labels_(std::move(labels)),
        by_sum_(std::move(by_sum)) {}

  InputVector inputs_;
  WeightSeq weights_;
  std::int64_t pool_;
  std::vector<std::string> labels_;
  std::shared_ptr<const std::unordered_map<std::int64_t, Permutation>> by_sum_;
};

struct AssignmentEntry {
  std::string object;
  int person;
  std::int64_t nuts;  // g[j] * x[person]
};

struct Assignment {
  Permutation perm;
  std::int64_t total;  // sum of nuts taken
  std::vector<AssignmentEntry> readable;
};

/// "a", "b", ... for n <= 26, otherwise "object 1", "object 2", ...
std::vector<std::string> default_labels(int n);

/// Identity inputs, weights from `source`, pool defaulting to the largest sum.
/// Throws BadIndex for n < 2, PoolTooSmall, TooLarge.
TrickPlan plan(int n, std::optional<std::int64_t> pool, const WeightSource& source,
               std::vector<std::string> labels = {}, int limit = kDefaultEnumerationLimit);

/// Nuts left on the table once the choice p has been carried out.
std::int64_t encode(const TrickPlan& plan, const Permutation& p);

/// Throws RemainingOutOfRange, UnknownSum.
Assignment decode(const TrickPlan& plan, std::int64_t remaining);

}  // namespace permsum
