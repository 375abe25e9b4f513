#pragma once

// Range checks of the counting identities, the max-removal bijection behind the
// Schreier-Zeckendorf recurrence, and the odd/even gap share report.
// All comparisons are between exact integers; a failed check records the first
// counterexample.

#include "seqforge/recurrences.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seqforge {

struct Counterexample {
  Index index = 0;
  BigInt lhs;
  BigInt rhs;
};

struct IdentityReport {
  std::string identity_id;
  Index range_first = 0;
  Index range_last = -1;
  bool passed = true;
  std::optional<Counterexample> first_counterexample;

  /// Records the first mismatch; later calls are ignored.
  void record(Index index, const BigInt& lhs, const BigInt& rhs);
};

/// F(n+4) = H(n) + n + 3 for n in 0..n_max.
IdentityReport check_fib_h(Index n_max);

/// sum_{i=0}^{k+1} F(n,i) = F(n, k+1+n) - 1 for k in 0..k_max.
IdentityReport check_gen_sum(Index n, Index k_max);

/// F(n, m+2n) = H(n,m) + m + n + 1 for m in 0..m_max.
IdentityReport check_gen_shift(Index n, Index m_max);

/// Subsets with at least two elements and only odd gaps number H(n-1): enumeration for
/// n <= n_max_oracle, dynamic programming for n <= n_max_dp.
IdentityReport check_odd_gap_h(Index n_max_oracle, Index n_max_dp, int limit = kDefaultEnumLimit);

/// odd_gap_counts against enumeration, n in 1..n_max (both components).
IdentityReport check_odd_gap_counts(Index n_max, int limit = kDefaultEnumLimit);

/// even_gap_counts against enumeration, n in 1..n_max (both components).
IdentityReport check_even_gap_counts(Index n_max, int limit = kDefaultEnumLimit);

/// schreier_zeckendorf_seq against enumeration, n in 1..n_max.
IdentityReport check_schreier_zeckendorf(Index alpha, Index beta, Index n_max, int limit = kDefaultEnumLimit);

/// Subsets of {1..n} with all gaps odd and all gaps even are exactly those with at most one
/// element: n + 1 of them. Enumeration for n in 1..n_max.
IdentityReport check_parity_intersection(Index n_max, int limit = kDefaultEnumLimit);

/// Drops the maximum n and shifts the rest down by alpha; {n} maps to the empty set.
/// Requires s alpha-Schreier, beta-Zeckendorf, max(s) = n. Throws std::invalid_argument.
Subset bijection_f(const Subset& s, Index n, Index alpha, Index beta);

/// Shifts s up by alpha and appends n. Requires s alpha-Schreier, beta-Zeckendorf and
/// contained in {1..n-alpha-beta}. Throws std::invalid_argument.
Subset bijection_g(const Subset& s, Index n, Index alpha, Index beta);

/// For n in 2 alpha + beta..n_max: f and g are mutually inverse on the enumerated families
/// (max = n) and (subsets of {1..n-alpha-beta}), and the families have equal size.
/// lhs/rhs of a counterexample are the two family sizes.
IdentityReport check_bijection(Index alpha, Index beta, Index n_max, int limit = kDefaultEnumLimit);

struct RatioSample {
  Index n = 0;
  BigCount odd_total;    ///< all gaps odd
  BigCount even_total;   ///< all gaps even
  BigCount union_total;  ///< all odd or all even
  Rational ratio;        ///< odd_total / union_total
  Rational minority;     ///< even_total / odd_total
  std::string ratio_decimal;
};

struct ConvergenceReport {
  std::vector<RatioSample> samples;  ///< n = 1..n_max
  Rational final_gap;                ///< 1 - ratio at n_max
  std::string final_gap_decimal;
};

/// Decimal renderings use this many significant digits.
inline constexpr int kRatioDigits = 12;

/// Exact shares of odd-gap subsets among subsets whose gaps are all odd or all even,
/// from the closed-form counts; the union uses inclusion-exclusion with intersection n + 1.
ConvergenceReport ratio_report(Index n_max);

}  // namespace seqforge
