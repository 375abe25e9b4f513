#pragma once

// Exact generators for the subset-counting sequences and their Fibonacci-type relatives.
// Every window carries its own offset; indices are always the sequence's native ones.

#include "seqforge/bigcount.hpp"
#include "seqforge/subset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seqforge {

/// A run of exact terms; terms[i] is the value at index offset + i.
struct SequenceWindow {
  std::string id;
  Index offset = 0;
  std::vector<BigCount> terms;

  bool empty() const noexcept { return terms.empty(); }
  std::size_t size() const noexcept { return terms.size(); }
  /// Index of the last term; offset - 1 for an empty window.
  Index last_index() const noexcept { return offset + static_cast<Index>(terms.size()) - 1; }
  /// Throws std::out_of_range outside [offset, last_index()].
  const BigCount& at(Index index) const;

  friend bool operator==(const SequenceWindow&, const SequenceWindow&) = default;
};

/// Number of subsets of {1..n} that are alpha-Schreier and beta-Zeckendorf, for n = 1..n_max.
///   1                       n <= alpha - 1
///   n - alpha + 2           alpha <= n <= 2 alpha + beta - 1
///   a(n-1) + a(n-alpha-beta) n >= 2 alpha + beta
SequenceWindow schreier_zeckendorf_seq(Index alpha, Index beta, Index n_max);

/// Single term of schreier_zeckendorf_seq; n = 0 gives 1 (only the empty set).
BigCount schreier_zeckendorf_count(Index alpha, Index beta, Index n);

/// Subsets of {1..n} whose elements are pairwise at least beta apart, n = 0..n_max.
SequenceWindow zeckendorf_seq(Index beta, Index n_max);

/// F_n with F_0 = 0, F_1 = 1 (fast doubling).
BigCount fibonacci(Index n);

/// F_0..F_{n_max}.
SequenceWindow fibonacci_seq(Index n_max);

/// Running sums, same offset.
SequenceWindow partial_sum(const SequenceWindow& w);

/// H_0..H_{n_max}, the second partial sum of the Fibonacci numbers, built incrementally.
SequenceWindow h_seq(Index n_max);

/// F_{n,0..m_max}: F_{n,0} = 0, F_{n,1..n} = 1, F_{n,m} = F_{n,m-1} + F_{n,m-n}. Requires n >= 2.
SequenceWindow gen_fib_seq(Index n, Index m_max);
/// First partial sum of gen_fib_seq.
SequenceWindow gen_k_seq(Index n, Index m_max);
/// Second partial sum of gen_fib_seq.
SequenceWindow gen_h_seq(Index n, Index m_max);

struct GapCounts {
  BigCount contain_n;  ///< subsets whose maximum is n
  BigCount total;      ///< all subsets, including the empty set

  friend bool operator==(const GapCounts&, const GapCounts&) = default;
};

/// Subsets of {1..n} with all gaps odd: (F_{n+1}, F_{n+3} - 1).
GapCounts odd_gap_counts(Index n);

/// Subsets of {1..n} with all gaps even: (2^floor((n-1)/2), 3*2^((n-1)/2) - 1 or 2*2^(n/2) - 1).
GapCounts even_gap_counts(Index n);

/// Subsets of {1..n} with at least k elements and all gaps odd, by dynamic programming over
/// (maximum, capped size) with parity-bucketed prefix sums. O(n k) time, O(k) memory.
BigCount min_size_odd_gap_count(Index n, Index k);

/// min_size_odd_gap_count(n, k) for n = 1..n_max in one pass.
SequenceWindow min_size_odd_gap_seq(Index k, Index n_max);

/// Exact count for condition shapes with a known formula or recurrence, without
/// enumeration. Empty when the shape is not covered.
std::optional<BigCount> count_by_recurrence(Index n, const Condition& c);

}  // namespace seqforge
