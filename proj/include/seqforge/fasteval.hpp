#pragma once

// n-th term evaluation for homogeneous linear recurrences with constant integer
// coefficients, exact or modulo a 64-bit modulus.
//
// The kernels are templated on a coefficient ring so that the exact (GMP) and
// modular (uint64) paths share one implementation of each algorithm:
//   - iteration:                  O(k n)
//   - characteristic polynomial:  O(k^2 log n), computes x^e mod P(x)
//   - companion matrix power:     O(k^3 log n), kept for differential testing

#include "seqforge/bigcount.hpp"
#include "seqforge/subset.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace seqforge {

/// a(n) = coeffs[0] a(n-1) + ... + coeffs[k-1] a(n-k) for every n >= valid_from + k.
/// initials[i] is a(valid_from + i).
struct LinearRecurrence {
  std::vector<BigInt> coeffs;
  std::vector<BigInt> initials;
  Index valid_from = 0;

  std::size_t order() const noexcept { return coeffs.size(); }
  /// Throws std::invalid_argument unless order >= 1 and the lengths agree.
  void validate() const;
  /// Last coefficient non-zero, i.e. no trailing lag that could be dropped.
  bool has_nonzero_tail() const { return !coeffs.empty() && coeffs.back() != 0; }

  friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;
};

struct EvalMode {
  /// Absent means exact arithmetic. Must be >= 2 when present.
  std::optional<std::uint64_t> modulus;

  static EvalMode exact() { return {}; }
  static EvalMode mod(std::uint64_t m) { return {m}; }
};

enum class FastPath { characteristic_polynomial, companion_matrix };

/// Reference evaluator: plain forward iteration. Throws std::invalid_argument for n < valid_from.
BigInt eval_iterative(const LinearRecurrence& r, Index n, EvalMode mode = {});

/// Same value as eval_iterative, in O(k^2 log n) by default.
BigInt eval_fast(const LinearRecurrence& r, Index n, EvalMode mode = {},
                 FastPath path = FastPath::characteristic_polynomial);

// Sequence families with a known homogeneous tail.
struct SchreierZeckendorfFamily { Index alpha; Index beta; };
struct FibonacciFamily {};
struct HFamily {};
struct GenFibFamily { Index n; };
struct GenKFamily { Index n; };
struct GenHFamily { Index n; };

using RecurrenceFamily =
    std::variant<SchreierZeckendorfFamily, FibonacciFamily, HFamily, GenFibFamily, GenKFamily, GenHFamily>;

/// Recurrence whose every index >= valid_from reproduces the family's terms.
/// For the Schreier-Zeckendorf family: order alpha + beta, coefficient 1 at lags 1 and
/// alpha + beta, initials a(alpha) .. a(2 alpha + beta - 1).
LinearRecurrence tail_recurrence_of(const RecurrenceFamily& family);

/// If `r` holds for a sequence from index valid_from, returns the recurrence of its running
/// sums taken from index valid_from; `sums_head` supplies the first order + 1 running sums.
LinearRecurrence partial_sum_recurrence(const LinearRecurrence& r, std::vector<BigInt> sums_head);

}  // namespace seqforge
