#include "permsum/optsearch.hpp"

#include <algorithm>
#include <set>

#include "permsum/construct.hpp"
#include "permsum/error.hpp"

namespace permsum {

namespace {

using Vec = std::vector<std::int64_t>;

// levels[k] holds the difference vectors (x[p(j)] - x[q(j)])_{j<=k+1} of pairs
// that agree above position k+1 and differ at it, sign-normalized so the last
// entry is positive.
std::vector<std::vector<Vec>> settled_differences(const InputVector& x) {
  const int n = x.size();
  std::vector<Permutation> perms;
  for (const auto& p : AntilexRange(n)) perms.push_back(p);

  std::vector<std::set<Vec>> levels(static_cast<std::size_t>(n));
  for (const auto& p : perms) {
    for (const auto& q : perms) {
      auto rel = compare_antilex(p, q);
      if (rel.outcome != Order::Greater) continue;
      const int k = *rel.pivot;
      Vec d;
      for (int j = 1; j <= k; ++j) d.push_back(x(p(j)) - x(q(j)));
      if (d.back() < 0) {
        for (auto& v : d) v = -v;
      }
      levels[static_cast<std::size_t>(k - 1)].insert(std::move(d));
    }
  }
  std::vector<std::vector<Vec>> out;
  for (auto& s : levels) out.emplace_back(s.begin(), s.end());
  return out;
}

std::int64_t default_budget(int n, const InputVector& x) {
  const auto [lo, hi] = std::minmax_element(x.values().begin(), x.values().end());
  const auto base = base_sequence(n, std::max<std::int64_t>(n, checked_add(checked_sub(*hi, *lo), 1)));
  auto budget = extremal_sums(base, x).max;
  if (n >= 2) {
    const auto greedy = greedy_sequence(n).weights;
    if (verify_distinct(greedy, x, n).distinct) budget = std::min(budget, extremal_sums(greedy, x).max);
  }
  return budget;
}

class BranchAndBound {
 public:
  BranchAndBound(const SearchConfig& cfg, const InputVector& x, std::int64_t budget)
      : n_(cfg.n),
        lowest_(cfg.allow_zero ? 0 : 1),
        node_limit_(cfg.node_limit),
        bound_(budget),
        levels_(settled_differences(x)),
        g_(static_cast<std::size_t>(cfg.n)) {
    xs_.assign(x.values().begin(), x.values().end());
    std::sort(xs_.begin(), xs_.end());
  }

  void run() { descend(0, 0); }

  const std::optional<Vec>& best() const { return best_; }
  std::int64_t best_objective() const { return best_objective_; }
  std::uint64_t nodes() const { return nodes_; }
  bool truncated() const { return truncated_; }

 private:
  // Objective of the prefix g[0..k) extended by the cheapest completion
  // g[k] = value, g[k+i] = value + i.
  __int128 cheapest_completion(std::size_t k, std::int64_t settled, std::int64_t value) const {
    __int128 total = settled;
    for (std::size_t j = k; j < xs_.size(); ++j) {
      total += static_cast<__int128>(xs_[j]) * (value + static_cast<std::int64_t>(j - k));
    }
    return total;
  }

  bool collides(std::size_t k) const {
    for (const auto& d : levels_[k]) {
      __int128 dot = 0;
      for (std::size_t j = 0; j <= k; ++j) dot += static_cast<__int128>(g_[j]) * d[j];
      if (dot == 0) return true;
    }
    return false;
  }

  void descend(std::size_t k, std::int64_t settled) {
    if (k == static_cast<std::size_t>(n_)) {
      best_ = g_;
      best_objective_ = settled;
      bound_ = settled - 1;
      return;
    }
    bool slope_zero = true;
    for (std::size_t j = k; j < xs_.size(); ++j) slope_zero = slope_zero && xs_[j] == 0;

    for (std::int64_t value = k == 0 ? lowest_ : g_[k - 1] + 1;; ++value) {
      if (truncated_ || cheapest_completion(k, settled, value) > bound_) return;
      if (node_limit_ && nodes_ >= *node_limit_) {
        truncated_ = true;
        return;
      }
      ++nodes_;
      g_[k] = value;
      if (!collides(k)) descend(k + 1, settled + xs_[k] * value);
      if (slope_zero) return;
    }
  }

  int n_;
  std::int64_t lowest_;
  std::optional<std::uint64_t> node_limit_;
  std::int64_t bound_;
  std::vector<std::vector<Vec>> levels_;
  Vec xs_;
  Vec g_;
  std::optional<Vec> best_;
  std::int64_t best_objective_ = 0;
  std::uint64_t nodes_ = 0;
  bool truncated_ = false;
};

}  // namespace

SearchResult exact_search(const SearchConfig& cfg) {
  if (cfg.n < 1) fail(ErrorKind::BadIndex, "n must be positive");
  if (cfg.n > cfg.max_n) {
    fail(ErrorKind::TooLarge, "exact search is limited to n <= " + std::to_string(cfg.max_n));
  }
  const InputVector x = cfg.inputs.value_or(InputVector::identity(cfg.n));
  if (x.size() != cfg.n) fail(ErrorKind::SizeMismatch, "inputs do not have n entries");
  if (!x.injective()) fail(ErrorKind::NonInjectiveInputs, "inputs must be pairwise distinct");
  if (*std::min_element(x.values().begin(), x.values().end()) < 0) {
    fail(ErrorKind::NegativeInputs, "exact search needs non-negative inputs");
  }

  const std::int64_t budget = cfg.budget.value_or(default_budget(cfg.n, x));
  BranchAndBound search(cfg, x, budget);
  search.run();

  if (!search.best()) {
    if (search.truncated()) fail(ErrorKind::NodeLimitReached, "node limit hit before any feasible sequence");
    fail(ErrorKind::InfeasibleBudget, "no distinguishing sequence with objective <= " + std::to_string(budget));
  }
  WeightSeq weights(*search.best(), cfg.allow_zero);
  return SearchResult{weights, extremal_sums(weights, x).max, !search.truncated(), search.nodes(), budget};
}

std::vector<std::vector<int>> difference_vectors(int n, int max_n) {
  if (n < 1) fail(ErrorKind::BadIndex, "n must be positive");
  if (n > max_n) fail(ErrorKind::TooLarge, "difference vectors are limited to n <= " + std::to_string(max_n));
  std::vector<Permutation> perms;
  for (const auto& p : AntilexRange(n)) perms.push_back(p);
  std::vector<std::vector<int>> out;
  out.reserve(perms.size() * (perms.size() - 1));
  for (const auto& p : perms) {
    for (const auto& q : perms) {
      if (p == q) continue;
      std::vector<int> d(static_cast<std::size_t>(n));
      for (int j = 1; j <= n; ++j) d[static_cast<std::size_t>(j - 1)] = p(j) - q(j);
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace permsum
