#include "permsum/trick.hpp"

#include "permsum/construct.hpp"
#include "permsum/error.hpp"

namespace permsum {

TrickPlan TrickPlan::make(InputVector inputs, WeightSeq weights, std::int64_t pool, std::vector<std::string> labels,
                          int limit) {
  const int n = weights.size();
  if (inputs.size() != n) fail(ErrorKind::SizeMismatch, "inputs and weights differ in length");
  if (labels.empty()) labels = default_labels(n);
  if (static_cast<int>(labels.size()) != n) fail(ErrorKind::SizeMismatch, "need one label per object");
  if (!inputs.injective()) fail(ErrorKind::NonInjectiveInputs, "inputs must be pairwise distinct");

  const auto range = extremal_sums(weights, inputs);
  if (pool < range.max) {
    fail(ErrorKind::PoolTooSmall,
         "pool " + std::to_string(pool) + " is below the largest sum " + std::to_string(range.max));
  }

  auto by_sum = std::make_shared<std::unordered_map<std::int64_t, Permutation>>();
  for (auto& [sum, perms] : sum_table(weights, inputs, limit).entries) {
    if (perms.size() != 1) {
      fail(ErrorKind::NotDistinguishing, "sum " + std::to_string(sum) + " is shared by " +
                                             format_one_line(perms[0]) + " and " + format_one_line(perms[1]));
    }
    by_sum->emplace(sum, perms.front());
  }
  return TrickPlan(std::move(inputs), std::move(weights), pool, std::move(labels), std::move(by_sum));
}

const Permutation* TrickPlan::lookup(std::int64_t sum) const {
  auto it = by_sum_->find(sum);
  return it == by_sum_->end() ? nullptr : &it->second;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  for (int j = 0; j < n; ++j) {
    labels.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + j)) : "object " + std::to_string(j + 1));
  }
  return labels;
}

TrickPlan plan(int n, std::optional<std::int64_t> pool, const WeightSource& source, std::vector<std::string> labels,
               int limit) {
  if (n < 2) fail(ErrorKind::BadIndex, "the trick needs at least two persons");
  WeightSeq weights = std::visit(
      [n](const auto& s) -> WeightSeq {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, GreedyWeights>) {
          return greedy_sequence(n).weights;
        } else if constexpr (std::is_same_v<S, BaseWeights>) {
          return base_sequence(n, s.m);
        } else {
          if (s.size() != n) fail(ErrorKind::SizeMismatch, "explicit weights do not have n entries");
          return s;
        }
      },
      source);
  if (n > limit) fail(ErrorKind::TooLarge, "n exceeds the enumeration limit " + std::to_string(limit));
  auto inputs = InputVector::identity(n);
  const auto max_sum = extremal_sums(weights, inputs).max;
  return TrickPlan::make(std::move(inputs), std::move(weights), pool.value_or(max_sum), std::move(labels), limit);
}

std::int64_t encode(const TrickPlan& plan, const Permutation& p) {
  return checked_sub(plan.pool(), eval_sum(plan.weights(), plan.inputs(), p));
}

Assignment decode(const TrickPlan& plan, std::int64_t remaining) {
  if (remaining < 0 || remaining > plan.pool()) {
    fail(ErrorKind::RemainingOutOfRange,
         "remaining " + std::to_string(remaining) + " outside 0.." + std::to_string(plan.pool()));
  }
  const auto total = plan.pool() - remaining;
  const auto* perm = plan.lookup(total);
  if (perm == nullptr) {
    fail(ErrorKind::UnknownSum, "no assignment takes exactly " + std::to_string(total) + " nuts; recount the table");
  }
  Assignment out{*perm, total, {}};
  for (int j = 1; j <= plan.n(); ++j) {
    const int person = (*perm)(j);
    out.readable.push_back({plan.labels()[static_cast<std::size_t>(j - 1)], person,
                            plan.weights()(j) * plan.inputs()(person)});
  }
  return out;
}

}  // namespace permsum
