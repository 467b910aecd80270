#include "permsum/construct.hpp"

#include <algorithm>
#include <numeric>

#include "permsum/error.hpp"

namespace permsum {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  auto q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_level(int n, int j0, const WeightSeq& prefix) {
  if (j0 < 3 || j0 > n) {
    fail(ErrorKind::BadIndex, "level j0=" + std::to_string(j0) + " outside 3.." + std::to_string(n));
  }
  if (prefix.size() != j0 - 1) {
    fail(ErrorKind::PrefixMismatch,
         "prefix has " + std::to_string(prefix.size()) + " weights, level needs " + std::to_string(j0 - 1));
  }
}

ConstraintRecord make_record(int j0, const std::vector<int>& subset, std::size_t pivot_index,
                             const WeightSeq& prefix) {
  ConstraintRecord r;
  r.j0 = j0;
  r.subset = subset;
  r.pi_pivot = subset[pivot_index];
  r.rho_pivot = subset[pivot_index - 1];
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i != pivot_index) r.pi_low.push_back(subset[i]);
    if (i != pivot_index - 1) r.rho_low.push_back(subset[i]);
  }
  std::reverse(r.rho_low.begin(), r.rho_low.end());

  // pi_low[i] sits at position j0-1-i.
  for (std::size_t i = 0; i < r.pi_low.size(); ++i) {
    const int k = j0 - 1 - static_cast<int>(i);
    r.rhs = checked_add(r.rhs, checked_mul(prefix(k), r.rho_low[i] - r.pi_low[i]));
  }
  r.diff = r.pi_pivot - r.rho_pivot;
  r.lower_bound = std::max<std::int64_t>(1, checked_add(floor_div(r.rhs, r.diff), 1));
  return r;
}

}  // namespace

bool ConstraintRecord::satisfied_by(std::int64_t weight) const {
  return static_cast<__int128>(weight) * diff > rhs;
}

WeightSeq base_sequence(int n, std::int64_t m) {
  if (n < 1) fail(ErrorKind::BadIndex, "n must be positive");
  if (m < n) fail(ErrorKind::BaseTooSmall, "base " + std::to_string(m) + " is below n=" + std::to_string(n));
  std::vector<std::int64_t> g{1};
  for (int j = 1; j < n; ++j) g.push_back(checked_mul(g.back(), m));
  return WeightSeq(std::move(g));
}

void for_each_constraint(int n, int j0, const WeightSeq& prefix,
                         const std::function<void(const ConstraintRecord&)>& visit) {
  check_level(n, j0, prefix);
  std::vector<int> subset(static_cast<std::size_t>(j0));
  std::iota(subset.begin(), subset.end(), 1);
  while (true) {
    for (std::size_t t = 1; t < subset.size(); ++t) visit(make_record(j0, subset, t, prefix));
    // next combination in lexicographic order
    int i = j0 - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - j0 + i + 1) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < j0; ++k) {
      subset[static_cast<std::size_t>(k)] = subset[static_cast<std::size_t>(k - 1)] + 1;
    }
  }
}

std::vector<ConstraintRecord> enumerate_constraints(int n, int j0, const WeightSeq& prefix) {
  std::vector<ConstraintRecord> out;
  for_each_constraint(n, j0, prefix, [&](const ConstraintRecord& r) { out.push_back(r); });
  return out;
}

namespace {

GreedyLevel solve_level(int n, int j0, const WeightSeq& prefix) {
  GreedyLevel level;
  level.j0 = j0;
  bool have = false;
  for_each_constraint(n, j0, prefix, [&](const ConstraintRecord& r) {
    ++level.constraints_examined;
    if (!have || r.lower_bound > level.binding.lower_bound) {
      level.binding = r;
      have = true;
    }
  });
  level.weight = std::max(checked_add(prefix(j0 - 1), 1), level.binding.lower_bound);
  return level;
}

}  // namespace

std::int64_t min_weight_at(int n, int j0, const WeightSeq& prefix) {
  return solve_level(n, j0, prefix).weight;
}

GreedyTrace greedy_sequence(int n) {
  if (n < 2) fail(ErrorKind::BadIndex, "greedy construction needs n >= 2");
  std::vector<std::int64_t> g{1, 2};
  GreedyTrace trace{n, WeightSeq(g), {}};
  for (int j0 = 3; j0 <= n; ++j0) {
    auto level = solve_level(n, j0, WeightSeq(g));
    g.push_back(level.weight);
    trace.levels.push_back(std::move(level));
  }
  trace.weights = WeightSeq(std::move(g));
  return trace;
}

}  // namespace permsum
