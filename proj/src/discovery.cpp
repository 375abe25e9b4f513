#include "seqforge/discovery.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqforge {

RecurrenceReport berlekamp_massey(std::span<const BigInt> prefix, Index offset) {
  if (prefix.size() < 2) throw std::invalid_argument("berlekamp_massey needs at least 2 terms");

  // Connection polynomial C(x) = 1 + C_1 x + ... + C_L x^L with sum_i C_i s(n-i) = 0.
  std::vector<Rational> current{Rational(1)};
  std::vector<Rational> previous{Rational(1)};
  std::size_t length = 0;
  std::size_t shift = 1;
  Rational previous_discrepancy = 1;

  for (std::size_t n = 0; n < prefix.size(); ++n) {
    Rational discrepancy = Rational(prefix[n]);
    for (std::size_t i = 1; i <= length && i < current.size(); ++i) discrepancy += current[i] * prefix[n - i];
    if (discrepancy == 0) {
      ++shift;
      continue;
    }
    const Rational scale = discrepancy / previous_discrepancy;
    std::vector<Rational> updated = current;
    if (updated.size() < previous.size() + shift) updated.resize(previous.size() + shift, Rational(0));
    for (std::size_t i = 0; i < previous.size(); ++i) updated[i + shift] -= scale * previous[i];

    if (2 * length <= n) {
      previous = std::move(current);
      length = n + 1 - length;
      previous_discrepancy = discrepancy;
      shift = 1;
    } else {
      ++shift;
    }
    current = std::move(updated);
  }

  RecurrenceReport report;
  report.verified_upto = offset + static_cast<Index>(prefix.size()) - 1;
  current.resize(std::max(current.size(), length + 1), Rational(0));

  if (length == 0) {
    // All-zero prefix.
    report.order = 1;
    report.rational_coeffs = {Rational(0)};
    report.status = DiscoveryStatus::found;
    report.found = LinearRecurrence{{BigInt(0)}, {BigInt(0)}, offset};
    report.minimal = true;
    return report;
  }

  report.order = length;
  for (std::size_t i = 1; i <= length; ++i) report.rational_coeffs.push_back(-current[i]);

  if (prefix.size() < 2 * length + kDiscoveryMargin) {
    report.status = DiscoveryStatus::inconclusive;
    return report;
  }
  report.minimal = true;

  const bool integral = std::all_of(report.rational_coeffs.begin(), report.rational_coeffs.end(),
                                    [](const Rational& q) { return q.get_den() == 1; });
  if (!integral) {
    report.status = DiscoveryStatus::non_integral;
    return report;
  }
  LinearRecurrence r;
  r.valid_from = offset;
  for (const Rational& q : report.rational_coeffs) r.coeffs.push_back(q.get_num());
  r.initials.assign(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(length));
  report.found = std::move(r);
  report.status = DiscoveryStatus::found;
  return report;
}

RecurrenceReport berlekamp_massey(const SequenceWindow& window) {
  return berlekamp_massey(std::span<const BigInt>(window.terms), window.offset);
}

VerifyResult verify_recurrence(const LinearRecurrence& r, const SequenceWindow& window) {
  r.validate();
  const Index k = static_cast<Index>(r.order());
  VerifyResult result;
  result.checked_from = std::max(r.valid_from + k, window.offset + k);
  result.checked_to = window.last_index();
  if (result.checked_from > result.checked_to) {
    result.verdict = Verdict::inconclusive;
    return result;
  }
  result.verdict = Verdict::holds;
  for (Index n = result.checked_from; n <= result.checked_to; ++n) {
    BigInt predicted = 0;
    for (Index i = 1; i <= k; ++i) predicted += r.coeffs[static_cast<std::size_t>(i - 1)] * window.at(n - i);
    if (predicted != window.at(n)) {
      result.verdict = Verdict::fails;
      result.first_failure = n;
      break;
    }
  }
  return result;
}

VerifyResult verify_recurrence(const LinearRecurrence& r, std::span<const BigInt> prefix) {
  return verify_recurrence(r, SequenceWindow{"", r.valid_from, {prefix.begin(), prefix.end()}});
}

RecurrenceReport discover_order(Index alpha, Index beta, Index probe_len, Index cross_check_upto) {
  if (alpha < 1 || beta < 1) throw std::invalid_argument("alpha and beta must be >= 1");
  const Index tail_start = 2 * alpha + beta;
  if (probe_len < 4 * (alpha + beta)) {
    RecurrenceReport report;
    report.status = DiscoveryStatus::inconclusive;
    report.verified_upto = tail_start + std::max<Index>(probe_len, 0) - 1;
    return report;
  }

  const Index last = tail_start + probe_len - 1;
  const SequenceWindow engine = schreier_zeckendorf_seq(alpha, beta, last);
  const Condition condition{.alpha = alpha, .beta = beta};
  for (Index n = 1; n <= std::min(last, cross_check_upto); ++n) {
    if (count_subsets(n, condition, kMaxEnumLimit) != engine.at(n))
      throw std::logic_error("recurrence engine disagrees with enumeration at n = " + std::to_string(n));
  }

  std::vector<BigInt> tail(engine.terms.begin() + (tail_start - engine.offset), engine.terms.end());
  return berlekamp_massey(std::span<const BigInt>(tail), tail_start);
}

}  // namespace seqforge
