#pragma once

#include "seqforge/fasteval.hpp"
#include "seqforge/recurrences.hpp"

#include <optional>
#include <span>
#include <vector>

namespace seqforge {

/// A prefix shorter than 2 * order + kDiscoveryMargin is reported as inconclusive.
inline constexpr std::size_t kDiscoveryMargin = 2;

enum class DiscoveryStatus {
  found,         ///< minimal recurrence with integer coefficients
  non_integral,  ///< minimal recurrence exists over the rationals only; see rational_coeffs
  inconclusive,  ///< prefix too short to trust the order
};

struct RecurrenceReport {
  DiscoveryStatus status = DiscoveryStatus::inconclusive;
  /// Present iff status == found.
  std::optional<LinearRecurrence> found;
  /// Minimal connection coefficients c_1..c_L as exact rationals, whatever the status.
  std::vector<Rational> rational_coeffs;
  std::size_t order = 0;
  /// Last index of the prefix the recurrence was fitted and checked against.
  Index verified_upto = 0;
  /// No recurrence of lower order fits the prefix.
  bool minimal = false;
};

/// Berlekamp-Massey over the rationals. prefix[i] is the term at index offset + i.
/// Throws std::invalid_argument for prefixes shorter than 2.
/// An all-zero prefix is reported as order 1 with coefficient 0.
RecurrenceReport berlekamp_massey(std::span<const BigInt> prefix, Index offset = 0);
RecurrenceReport berlekamp_massey(const SequenceWindow& window);

enum class Verdict { holds, fails, inconclusive };

struct VerifyResult {
  Verdict verdict = Verdict::inconclusive;
  /// Range of indices n at which a(n) = sum c_i a(n-i) was tested.
  Index checked_from = 0;
  Index checked_to = -1;
  std::optional<Index> first_failure;
};

/// Checks every index n >= r.valid_from + order covered by the window.
/// Inconclusive when no such index is covered.
VerifyResult verify_recurrence(const LinearRecurrence& r, const SequenceWindow& window);
/// prefix[0] is the term at r.valid_from.
VerifyResult verify_recurrence(const LinearRecurrence& r, std::span<const BigInt> prefix);

/// Runs discovery on probe_len terms of the Schreier-Zeckendorf family starting at
/// n = 2 alpha + beta. Terms are produced by the recurrence engine after cross-checking
/// the engine against exhaustive enumeration for n <= cross_check_upto.
/// probe_len < 4 (alpha + beta) yields an inconclusive report.
RecurrenceReport discover_order(Index alpha, Index beta, Index probe_len, Index cross_check_upto = 14);

}  // namespace seqforge
