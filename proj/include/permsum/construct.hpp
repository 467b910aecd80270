#pragma once

// Constructive weight sequences: powers of a base, and the level-by-level
// greedy sequence driven by successor-pair constraints.

#include <cstdint>
#include <functional>
#include <vector>

#include "permsum/weighting.hpp"

namespace permsum {

/// One successor pair pi |> rho with pivot j0, restricted to positions j0..1
/// (higher positions agree and cancel), and the bound it puts on g[j0]:
///   g[j0] * (pi(j0) - rho(j0)) > sum_{k<j0} g[k] * (rho(k) - pi(k)).
struct ConstraintRecord {
  int j0 = 0;
  std::vector<int> subset;  // H, ascending
  int pi_pivot = 0;
  int rho_pivot = 0;        // largest element of H below pi_pivot
  std::vector<int> pi_low;  // pi(j0-1), ..., pi(1): ascending
  std::vector<int> rho_low; // rho(j0-1), ..., rho(1): descending
  std::int64_t rhs = 0;
  std::int64_t diff = 0;
  std::int64_t lower_bound = 0;  // max(1, floor(rhs / diff) + 1)

  /// True when `weight` at position j0 satisfies the strict inequality.
  bool satisfied_by(std::int64_t weight) const;
};

struct GreedyLevel {
  int j0 = 0;
  std::int64_t weight = 0;
  ConstraintRecord binding;  // first record attaining the level's largest bound
  std::uint64_t constraints_examined = 0;
};

struct GreedyTrace {
  int n = 0;
  WeightSeq weights;
  std::vector<GreedyLevel> levels;  // j0 = 3..n
};

/// (1, m, m^2, ..., m^(n-1)). Throws BaseTooSmall when m < n, Overflow.
WeightSeq base_sequence(int n, std::int64_t m);

/// Visits every constraint at level j0: each j0-subset H of {1..n} (in
/// lexicographic order) and each non-minimal pivot value of H (ascending).
/// `prefix` holds g[1..j0-1]. Throws BadIndex, PrefixMismatch, Overflow.
void for_each_constraint(int n, int j0, const WeightSeq& prefix,
                         const std::function<void(const ConstraintRecord&)>& visit);
std::vector<ConstraintRecord> enumerate_constraints(int n, int j0, const WeightSeq& prefix);

/// Least g[j0] above g[j0-1] satisfying every constraint of the level.
std::int64_t min_weight_at(int n, int j0, const WeightSeq& prefix);

/// g[1] = 1, g[2] = 2, then min_weight_at for each further level.
/// Throws BadIndex for n < 2, Overflow.
GreedyTrace greedy_sequence(int n);

}  // namespace permsum
