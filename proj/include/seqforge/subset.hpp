#pragma once

// Finite subsets of {1..n}, the gap predicates that select subset families, and the
// exhaustive 2^n enumeration oracle that every closed form in this library is checked
// against.

#include "seqforge/bigcount.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqforge {

using Index = std::int64_t;

/// Largest ambient n the oracle accepts unless the caller overrides it.
inline constexpr int kDefaultEnumLimit = 30;
/// Hard ceiling imposed by the 64-bit characteristic-vector representation.
inline constexpr int kMaxEnumLimit = 62;

/// Raised when an exhaustive query exceeds the configured enumeration limit.
class EnumerationLimitError : public std::runtime_error {
 public:
  EnumerationLimitError(Index n, int limit);
  Index n() const noexcept { return n_; }
  int limit() const noexcept { return limit_; }

 private:
  Index n_;
  int limit_;
};

/// A strictly increasing finite set of naturals >= 1.
class Subset {
 public:
  Subset() = default;
  /// Throws std::invalid_argument unless `elements` is strictly increasing and >= 1.
  explicit Subset(std::vector<Index> elements);
  Subset(std::initializer_list<Index> elements) : Subset(std::vector<Index>(elements)) {}

  /// Bit i of `mask` selects element i + 1.
  static Subset from_mask(std::uint64_t mask);

  std::span<const Index> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  /// Precondition: non-empty.
  Index min() const { return elements_.front(); }
  Index max() const { return elements_.back(); }
  bool contains(Index value) const;

  /// Characteristic vector; requires max() <= 64.
  std::uint64_t to_mask() const;

  /// Every element shifted by `delta`; the result must stay >= 1.
  Subset shifted(Index delta) const;
  Subset without_max() const;
  Subset with_appended(Index value) const;

  std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  std::vector<Index> elements_;
};

/// Consecutive gaps s[i+1] - s[i], in order. Empty when the subset has at most one element.
using GapList = std::vector<Index>;

enum class GapParity { any, all_odd, all_even };

/// Conjunction of family clauses. Absent clauses are skipped.
struct Condition {
  std::optional<Index> alpha;
  std::optional<Index> beta;
  GapParity gap_parity = GapParity::any;
  Index min_size = 0;
  /// The subset's maximum must equal this value (empty set excluded).
  std::optional<Index> forced_max;

  friend bool operator==(const Condition&, const Condition&) = default;
};

GapList difference_set(const Subset& s);

/// min(s) >= alpha * |s|; the empty set qualifies.
bool is_alpha_schreier(const Subset& s, Index alpha);

/// Consecutive elements at least beta apart; sets of size <= 1 qualify.
bool is_beta_zeckendorf(const Subset& s, Index beta);

/// All present clauses of `c` hold for `s` inside the ambient set {1..n}.
/// Throws std::invalid_argument if an element or c.forced_max exceeds n.
bool matches(const Subset& s, const Condition& c, Index n);

/// Exact number of subsets of {1..n} matching `c`.
/// Throws EnumerationLimitError when n > limit.
BigCount count_subsets(Index n, const Condition& c, int limit = kDefaultEnumLimit);

/// Calls `visit` for every matching subset of {1..n}, in increasing characteristic-vector order.
void for_each_subset(Index n, const Condition& c, const std::function<void(const Subset&)>& visit,
                     int limit = kDefaultEnumLimit);

/// Materialised for_each_subset.
std::vector<Subset> enumerate_subsets(Index n, const Condition& c, int limit = kDefaultEnumLimit);

}  // namespace seqforge
