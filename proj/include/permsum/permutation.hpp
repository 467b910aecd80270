#pragma once

// Permutations of {1..n} in one-line notation (values[j-1] = pi(j)) and the
// antilexicographic order: the largest index at which two permutations
// differ decides, so the identity is the greatest element and
// (n, n-1, ..., 1) the least.

#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permsum {

inline constexpr int kDefaultEnumerationLimit = 10;

class Permutation {
 public:
  /// Throws NotAPermutation unless `values` is a rearrangement of 1..n, n >= 1.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  /// The antilex minimum (n, n-1, ..., 1).
  static Permutation reversal(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  /// pi(j), 1-based.
  int operator()(int j) const { return values_[static_cast<std::size_t>(j - 1)]; }
  std::span<const int> values() const noexcept { return values_; }

  bool is_identity() const noexcept;
  bool is_reversal() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<int> values) : values_(std::move(values)) {}

  std::vector<int> values_;

  friend class AntilexIterator;
  friend Permutation successor(const Permutation&);
  friend Permutation predecessor(const Permutation&);
};

enum class Order { Less, Equal, Greater };

struct OrderRelation {
  Order outcome = Order::Equal;
  std::optional<int> pivot;  // largest differing index, 2 <= pivot <= n

  friend bool operator==(const OrderRelation&, const OrderRelation&) = default;
};

/// Compares p against q. Throws SizeMismatch.
OrderRelation compare_antilex(const Permutation& p, const Permutation& q);

/// Immediate antilex successor. Throws NoSuccessor for the identity.
Permutation successor(const Permutation& p);
/// Immediate antilex predecessor. Throws NoPredecessor for (n, ..., 1).
Permutation predecessor(const Permutation& p);

/// In-place successor step over raw one-line values; returns false (and leaves
/// `values` untouched) when they already form the identity.
bool advance_antilex(std::span<int> values);
/// In-place predecessor step; returns false at the antilex minimum.
bool retreat_antilex(std::span<int> values);

/// n!, throwing Overflow past 20!.
std::uint64_t factorial(int n);

class AntilexIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = Permutation;
  using difference_type = std::ptrdiff_t;
  using pointer = const Permutation*;
  using reference = const Permutation&;

  AntilexIterator() = default;
  explicit AntilexIterator(int n) : current_(Permutation::reversal(n)), done_(false) {}

  reference operator*() const { return current_; }
  pointer operator->() const { return &current_; }
  AntilexIterator& operator++();
  void operator++(int) { ++*this; }

  friend bool operator==(const AntilexIterator& it, std::default_sentinel_t) { return it.done_; }

 private:
  Permutation current_{Permutation::Unchecked{}, {}};
  bool done_ = true;
};

/// All n! permutations in strictly increasing antilex order, from
/// (n, ..., 1) to the identity. Lazy; one successor step per increment.
class AntilexRange {
 public:
  explicit AntilexRange(int n) : n_(n) {}
  AntilexIterator begin() const { return AntilexIterator(n_); }
  std::default_sentinel_t end() const { return {}; }
  int n() const noexcept { return n_; }

 private:
  int n_;
};

/// Throws TooLarge when n > limit, BadIndex when n < 1.
AntilexRange enumerate_antilex(int n, int limit = kDefaultEnumerationLimit);

/// Comma-separated one-line form, "3,1,4,2".
Permutation parse_one_line(std::string_view text);
std::string format_one_line(const Permutation& p);

/// Reversed display "⟨pi(n),...,pi(1)⟩←". The brackets are optional on input;
/// ASCII "<...>" is accepted as well.
Permutation parse_reversed(std::string_view text);
std::string format_reversed(const Permutation& p);

/// Parses a comma-separated integer list. Throws MalformedInput.
std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace permsum
