#include "permsum/weighting.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "permsum/error.hpp"

namespace permsum {

namespace {

void require_same_size(int a, int b, const char* what) {
  if (a != b) {
    fail(ErrorKind::SizeMismatch, std::string(what) + ": sizes " + std::to_string(a) + " and " + std::to_string(b));
  }
}

std::int64_t eval_raw(std::span<const std::int64_t> g, std::span<const std::int64_t> x, std::span<const int> p) {
  std::int64_t total = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    total = checked_add(total, checked_mul(g[j], x[static_cast<std::size_t>(p[j] - 1)]));
  }
  return total;
}

std::vector<int> reversal_values(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.rbegin(), v.rend(), 1);
  return v;
}

Permutation permutation_at_rank(int n, std::uint64_t rank) {
  auto v = reversal_values(n);
  for (std::uint64_t k = 0; k < rank; ++k) advance_antilex(v);
  return Permutation(std::move(v));
}

VerificationReport verify(const WeightSeq& w, const InputVector& x, int limit) {
  require_same_size(w.size(), x.size(), "weights and inputs");
  if (!x.injective()) fail(ErrorKind::NonInjectiveInputs, "inputs must be pairwise distinct");
  const int n = w.size();
  (void)enumerate_antilex(n, limit);

  const auto count = factorial(n);
  std::vector<std::int64_t> sums;
  sums.reserve(count);

  VerificationReport report;
  report.order_compatible = true;

  auto v = reversal_values(n);
  do {
    const auto t = eval_raw(w.values(), x.values(), v);
    if (report.order_compatible && !sums.empty() && t <= sums.back()) {
      report.order_compatible = false;
      Permutation p(v);
      report.order_witness = OrderWitness{p, predecessor(p), t, sums.back()};
    }
    sums.push_back(t);
  } while (advance_antilex(v));

  std::vector<std::uint64_t> order(sums.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return sums[a] != sums[b] ? sums[a] < sums[b] : a < b;
  });
  // The first repeated sum along the walk sits at the smallest second rank of
  // any equal-sum run.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> first;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (sums[order[i]] == sums[order[i - 1]] && (i < 2 || sums[order[i - 2]] != sums[order[i]])) {
      if (!first || order[i] < first->first) first = {{order[i], order[i - 1]}};
    }
  }
  report.distinct = !first.has_value();
  if (first) {
    report.collision_witness =
        CollisionWitness{permutation_at_rank(n, first->first), permutation_at_rank(n, first->second), sums[first->first]};
  }
  return report;
}

}  // namespace

WeightSeq::WeightSeq(std::vector<std::int64_t> g, bool allow_zero) : g_(std::move(g)) {
  if (g_.empty()) fail(ErrorKind::BadIndex, "weight sequence must be non-empty");
  const std::int64_t floor = allow_zero ? 0 : 1;
  if (g_.front() < floor) {
    fail(ErrorKind::NonPositiveWeight, "g[1] = " + std::to_string(g_.front()) + " must be >= " + std::to_string(floor));
  }
  for (std::size_t j = 1; j < g_.size(); ++j) {
    if (g_[j] <= g_[j - 1]) fail(ErrorKind::NotIncreasing, "weights must be strictly increasing");
  }
}

std::int64_t WeightSeq::total() const {
  std::int64_t s = 0;
  for (auto v : g_) s = checked_add(s, v);
  return s;
}

InputVector::InputVector(std::vector<std::int64_t> x) : x_(std::move(x)) {
  if (x_.empty()) fail(ErrorKind::BadIndex, "input vector must be non-empty");
}

InputVector InputVector::identity(int n) {
  if (n < 1) fail(ErrorKind::BadIndex, "n must be positive");
  std::vector<std::int64_t> x(static_cast<std::size_t>(n));
  std::iota(x.begin(), x.end(), 1);
  return InputVector(std::move(x));
}

bool InputVector::injective() const {
  std::set<std::int64_t> seen(x_.begin(), x_.end());
  return seen.size() == x_.size();
}

std::uint64_t SumTable::permutation_count() const {
  std::uint64_t total = 0;
  for (const auto& [sum, perms] : entries) total += perms.size();
  return total;
}

std::int64_t eval_sum(const WeightSeq& w, const InputVector& x, const Permutation& p) {
  require_same_size(w.size(), x.size(), "weights and inputs");
  require_same_size(w.size(), p.size(), "weights and permutation");
  return eval_raw(w.values(), x.values(), p.values());
}

SumTable sum_table(const WeightSeq& w, const InputVector& x, int limit) {
  require_same_size(w.size(), x.size(), "weights and inputs");
  SumTable table{w, x, {}};
  for (const auto& p : enumerate_antilex(w.size(), limit)) {
    table.entries[eval_raw(w.values(), x.values(), p.values())].push_back(p);
  }
  return table;
}

VerificationReport verify_distinct(const WeightSeq& w, const InputVector& x, int limit) {
  return verify(w, x, limit);
}

VerificationReport verify_order_compatible(const WeightSeq& w, const InputVector& x, int limit) {
  return verify(w, x, limit);
}

SumRange extremal_sums(const WeightSeq& w, const InputVector& x) {
  require_same_size(w.size(), x.size(), "weights and inputs");
  std::vector<std::int64_t> sorted(x.values().begin(), x.values().end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = sorted.size();
  SumRange range{0, 0};
  for (std::size_t j = 0; j < n; ++j) {
    range.max = checked_add(range.max, checked_mul(w.values()[j], sorted[j]));
    range.min = checked_add(range.min, checked_mul(w.values()[j], sorted[n - 1 - j]));
  }
  return range;
}

InputVector shift_inputs(const InputVector& x, std::int64_t y) {
  std::vector<std::int64_t> shifted;
  shifted.reserve(x.values().size());
  for (auto v : x.values()) shifted.push_back(checked_add(v, y));
  return InputVector(std::move(shifted));
}

}  // namespace permsum
