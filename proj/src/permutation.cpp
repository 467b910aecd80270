#include "permsum/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "permsum/error.hpp"

namespace permsum {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool strip_prefix(std::string_view& s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) return false;
  s.remove_prefix(prefix.size());
  return true;
}

bool strip_suffix(std::string_view& s, std::string_view suffix) {
  if (s.size() < suffix.size() || s.substr(s.size() - suffix.size()) != suffix) return false;
  s.remove_suffix(suffix.size());
  return true;
}

std::vector<int> to_int_values(const std::vector<std::int64_t>& raw) {
  std::vector<int> values;
  values.reserve(raw.size());
  for (auto v : raw) {
    if (v < 1 || v > static_cast<std::int64_t>(raw.size())) {
      fail(ErrorKind::NotAPermutation, "value " + std::to_string(v) + " outside 1.." + std::to_string(raw.size()));
    }
    values.push_back(static_cast<int>(v));
  }
  return values;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const auto n = values_.size();
  if (n == 0) fail(ErrorKind::NotAPermutation, "empty permutation");
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      fail(ErrorKind::NotAPermutation, "values must be a rearrangement of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) fail(ErrorKind::BadIndex, "n must be positive");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(Unchecked{}, std::move(v));
}

Permutation Permutation::reversal(int n) {
  if (n < 1) fail(ErrorKind::BadIndex, "n must be positive");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.rbegin(), v.rend(), 1);
  return Permutation(Unchecked{}, std::move(v));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

bool Permutation::is_reversal() const noexcept {
  const auto n = values_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (values_[i] != static_cast<int>(n - i)) return false;
  }
  return true;
}

OrderRelation compare_antilex(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) fail(ErrorKind::SizeMismatch, "permutations of different sizes");
  for (int j = p.size(); j >= 1; --j) {
    if (p(j) != q(j)) return {p(j) > q(j) ? Order::Greater : Order::Less, j};
  }
  return {Order::Equal, std::nullopt};
}

bool advance_antilex(std::span<int> v) {
  // Smallest pivot with v[j] < v[j-1]; below it the values are increasing.
  std::size_t j = 1;
  while (j < v.size() && v[j] > v[j - 1]) ++j;
  if (j >= v.size()) return false;
  auto low = v.subspan(0, j);
  auto next = std::upper_bound(low.begin(), low.end(), v[j]);
  std::iter_swap(next, v.begin() + static_cast<std::ptrdiff_t>(j));
  std::reverse(low.begin(), low.end());
  return true;
}

bool retreat_antilex(std::span<int> v) {
  std::size_t j = 1;
  while (j < v.size() && v[j] < v[j - 1]) ++j;
  if (j >= v.size()) return false;
  auto low = v.subspan(0, j);
  // low is decreasing; find the largest element below v[j].
  auto prev = std::upper_bound(low.begin(), low.end(), v[j], std::greater<>{});
  std::iter_swap(prev, v.begin() + static_cast<std::ptrdiff_t>(j));
  std::reverse(low.begin(), low.end());
  return true;
}

Permutation successor(const Permutation& p) {
  auto values = p.values_;
  if (!advance_antilex(values)) fail(ErrorKind::NoSuccessor, "the identity is the antilex maximum");
  return Permutation(Permutation::Unchecked{}, std::move(values));
}

Permutation predecessor(const Permutation& p) {
  auto values = p.values_;
  if (!retreat_antilex(values)) fail(ErrorKind::NoPredecessor, "(n,...,1) is the antilex minimum");
  return Permutation(Permutation::Unchecked{}, std::move(values));
}

std::uint64_t factorial(int n) {
  if (n < 0) fail(ErrorKind::BadIndex, "negative factorial");
  if (n > 20) fail(ErrorKind::Overflow, "n! exceeds 64 bits for n > 20");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

AntilexIterator& AntilexIterator::operator++() {
  if (!advance_antilex(current_.values_)) done_ = true;
  return *this;
}

AntilexRange enumerate_antilex(int n, int limit) {
  if (n < 1) fail(ErrorKind::BadIndex, "n must be positive");
  if (n > limit) {
    fail(ErrorKind::TooLarge, "n=" + std::to_string(n) + " exceeds the enumeration limit " + std::to_string(limit));
  }
  return AntilexRange(n);
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  text = trim(text);
  if (text.empty()) fail(ErrorKind::MalformedInput, "empty list");
  std::vector<std::int64_t> out;
  while (true) {
    auto comma = text.find(',');
    auto field = trim(text.substr(0, comma));
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      fail(ErrorKind::MalformedInput, "not an integer: '" + std::string(field) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Permutation parse_one_line(std::string_view text) {
  return Permutation(to_int_values(parse_int_list(text)));
}

std::string format_one_line(const Permutation& p) {
  std::string out;
  for (int j = 1; j <= p.size(); ++j) {
    if (j > 1) out += ',';
    out += std::to_string(p(j));
  }
  return out;
}

Permutation parse_reversed(std::string_view text) {
  text = trim(text);
  if (strip_prefix(text, "⟨")) {
    strip_suffix(text, "←");
    strip_suffix(text, "^");
    if (!strip_suffix(text, "⟩")) fail(ErrorKind::MalformedInput, "unterminated reversed display");
  } else if (strip_prefix(text, "<")) {
    strip_suffix(text, "←");
    strip_suffix(text, "^");
    if (!strip_suffix(text, ">")) fail(ErrorKind::MalformedInput, "unterminated reversed display");
  }
  auto values = to_int_values(parse_int_list(text));
  std::reverse(values.begin(), values.end());
  return Permutation(std::move(values));
}

std::string format_reversed(const Permutation& p) {
  std::string out = "⟨";
  for (int j = p.size(); j >= 1; --j) {
    if (j < p.size()) out += ',';
    out += std::to_string(p(j));
  }
  out += "⟩←";
  return out;
}

}  // namespace permsum
