#include "seqforge/identities.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace seqforge {
namespace {

IdentityReport start(std::string id, Index first, Index last) {
  IdentityReport report;
  report.identity_id = std::move(id);
  report.range_first = first;
  report.range_last = last;
  return report;
}

BigInt as_big(Index v) { return BigInt(static_cast<long>(v)); }

Condition odd_gaps(Index min_size = 0) {
  return Condition{.gap_parity = GapParity::all_odd, .min_size = min_size};
}

// Refuse up front rather than enumerate everything below the limit first.
void require_within(Index n_max, int limit) {
  if (n_max > limit) throw EnumerationLimitError(n_max, limit);
}

void require_member(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void IdentityReport::record(Index index, const BigInt& lhs, const BigInt& rhs) {
  passed = false;
  if (!first_counterexample) first_counterexample = Counterexample{index, lhs, rhs};
}

IdentityReport check_fib_h(Index n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  IdentityReport report = start("fib-h", 0, n_max);
  const SequenceWindow fib = fibonacci_seq(n_max + 4);
  const SequenceWindow h = h_seq(n_max);
  for (Index n = 0; n <= n_max; ++n) {
    const BigInt rhs = h.at(n) + n + 3;
    if (fib.at(n + 4) != rhs) report.record(n, fib.at(n + 4), rhs);
  }
  return report;
}

IdentityReport check_gen_sum(Index n, Index k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  IdentityReport report = start("gen-sum(n=" + std::to_string(n) + ")", 0, k_max);
  const SequenceWindow f = gen_fib_seq(n, k_max + 1 + n);
  const SequenceWindow sums = partial_sum(f);
  for (Index k = 0; k <= k_max; ++k) {
    const BigInt rhs = f.at(k + 1 + n) - 1;
    if (sums.at(k + 1) != rhs) report.record(k, sums.at(k + 1), rhs);
  }
  return report;
}

IdentityReport check_gen_shift(Index n, Index m_max) {
  if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
  IdentityReport report = start("gen-shift(n=" + std::to_string(n) + ")", 0, m_max);
  const SequenceWindow f = gen_fib_seq(n, m_max + 2 * n);
  const SequenceWindow h = gen_h_seq(n, m_max);
  for (Index m = 0; m <= m_max; ++m) {
    const BigInt rhs = h.at(m) + m + (n + 1);
    if (f.at(m + 2 * n) != rhs) report.record(m, f.at(m + 2 * n), rhs);
  }
  return report;
}

IdentityReport check_odd_gap_h(Index n_max_oracle, Index n_max_dp, int limit) {
  const Index last = std::max(n_max_oracle, n_max_dp);
  IdentityReport report = start("odd-gap-h", 1, last);
  require_within(n_max_oracle, limit);
  if (last < 1) return report;
  const SequenceWindow h = h_seq(last - 1);
  for (Index n = 1; n <= n_max_oracle; ++n) {
    const BigCount oracle = count_subsets(n, odd_gaps(2), limit);
    if (oracle != h.at(n - 1)) report.record(n, oracle, h.at(n - 1));
  }
  if (n_max_dp >= 1) {
    const SequenceWindow dp = min_size_odd_gap_seq(2, n_max_dp);
    for (Index n = 1; n <= n_max_dp; ++n)
      if (dp.at(n) != h.at(n - 1)) report.record(n, dp.at(n), h.at(n - 1));
  }
  return report;
}

IdentityReport check_odd_gap_counts(Index n_max, int limit) {
  IdentityReport report = start("odd-gap", 1, n_max);
  require_within(n_max, limit);
  for (Index n = 1; n <= n_max; ++n) {
    const GapCounts formula = odd_gap_counts(n);
    Condition with_max = odd_gaps();
    with_max.forced_max = n;
    const BigCount contain = count_subsets(n, with_max, limit);
    const BigCount total = count_subsets(n, odd_gaps(), limit);
    if (contain != formula.contain_n) report.record(n, contain, formula.contain_n);
    if (total != formula.total) report.record(n, total, formula.total);
  }
  return report;
}

IdentityReport check_even_gap_counts(Index n_max, int limit) {
  IdentityReport report = start("even-gap", 1, n_max);
  require_within(n_max, limit);
  for (Index n = 1; n <= n_max; ++n) {
    const GapCounts formula = even_gap_counts(n);
    const Condition even{.gap_parity = GapParity::all_even};
    Condition with_max = even;
    with_max.forced_max = n;
    const BigCount contain = count_subsets(n, with_max, limit);
    const BigCount total = count_subsets(n, even, limit);
    if (contain != formula.contain_n) report.record(n, contain, formula.contain_n);
    if (total != formula.total) report.record(n, total, formula.total);
  }
  return report;
}

IdentityReport check_schreier_zeckendorf(Index alpha, Index beta, Index n_max, int limit) {
  IdentityReport report = start(
      "schreier-zeckendorf(alpha=" + std::to_string(alpha) + ",beta=" + std::to_string(beta) + ")", 1, n_max);
  const SequenceWindow engine = schreier_zeckendorf_seq(alpha, beta, n_max);
  require_within(n_max, limit);
  const Condition c{.alpha = alpha, .beta = beta};
  for (Index n = 1; n <= n_max; ++n) {
    const BigCount oracle = count_subsets(n, c, limit);
    if (oracle != engine.at(n)) report.record(n, oracle, engine.at(n));
  }
  return report;
}

IdentityReport check_parity_intersection(Index n_max, int limit) {
  IdentityReport report = start("parity-intersection", 1, n_max);
  require_within(n_max, limit);
  const Condition odd = odd_gaps();
  const Condition even{.gap_parity = GapParity::all_even};
  for (Index n = 1; n <= n_max; ++n) {
    long both = 0;
    for_each_subset(n, Condition{}, [&](const Subset& s) {
      if (matches(s, odd, n) && matches(s, even, n)) ++both;
    }, limit);
    if (both != n + 1) report.record(n, BigInt(both), as_big(n + 1));
  }
  return report;
}

Subset bijection_f(const Subset& s, Index n, Index alpha, Index beta) {
  require_member(alpha >= 1 && beta >= 1, "alpha and beta must be >= 1");
  require_member(n >= 2 * alpha + beta, "bijection needs n >= 2 alpha + beta");
  require_member(!s.empty() && s.max() == n, "bijection_f needs max(s) = n");
  require_member(is_alpha_schreier(s, alpha), "bijection_f needs an alpha-Schreier set");
  require_member(is_beta_zeckendorf(s, beta), "bijection_f needs a beta-Zeckendorf set");
  if (s.size() == 1) return Subset{};
  return s.without_max().shifted(-alpha);
}

Subset bijection_g(const Subset& s, Index n, Index alpha, Index beta) {
  require_member(alpha >= 1 && beta >= 1, "alpha and beta must be >= 1");
  require_member(n >= 2 * alpha + beta, "bijection needs n >= 2 alpha + beta");
  require_member(s.empty() || s.max() <= n - (alpha + beta), "bijection_g needs s within {1..n-alpha-beta}");
  require_member(is_alpha_schreier(s, alpha), "bijection_g needs an alpha-Schreier set");
  require_member(is_beta_zeckendorf(s, beta), "bijection_g needs a beta-Zeckendorf set");
  return s.shifted(alpha).with_appended(n);
}

IdentityReport check_bijection(Index alpha, Index beta, Index n_max, int limit) {
  const Index first = 2 * alpha + beta;
  IdentityReport report = start(
      "bijection(alpha=" + std::to_string(alpha) + ",beta=" + std::to_string(beta) + ")", first, n_max);
  require_within(n_max, limit);
  const Condition family{.alpha = alpha, .beta = beta};
  for (Index n = first; n <= n_max; ++n) {
    const Index reduced = n - (alpha + beta);
    Condition with_max = family;
    with_max.forced_max = n;
    const std::vector<Subset> tops = enumerate_subsets(n, with_max, limit);
    const std::vector<Subset> smaller = enumerate_subsets(reduced, family, limit);
    const std::set<Subset> smaller_set(smaller.begin(), smaller.end());

    bool ok = tops.size() == smaller.size();
    std::set<Subset> images;
    for (const Subset& s : tops) {
      const Subset image = bijection_f(s, n, alpha, beta);
      ok = ok && smaller_set.contains(image) && bijection_g(image, n, alpha, beta) == s;
      images.insert(image);
    }
    ok = ok && images.size() == tops.size();
    for (const Subset& s : smaller) ok = ok && bijection_f(bijection_g(s, n, alpha, beta), n, alpha, beta) == s;
    if (!ok) report.record(n, BigInt(static_cast<unsigned long>(tops.size())),
                           BigInt(static_cast<unsigned long>(smaller.size())));
  }
  return report;
}

ConvergenceReport ratio_report(Index n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const IdentityReport intersection = check_parity_intersection(std::min<Index>(n_max, 20), kMaxEnumLimit);
  if (!intersection.passed) throw std::logic_error("odd/even intersection count disagrees with enumeration");

  ConvergenceReport report;
  const SequenceWindow fib = fibonacci_seq(n_max + 3);
  for (Index n = 1; n <= n_max; ++n) {
    RatioSample sample;
    sample.n = n;
    sample.odd_total = fib.at(n + 3) - 1;
    sample.even_total = even_gap_counts(n).total;
    sample.union_total = sample.odd_total + sample.even_total - (n + 1);
    sample.ratio = Rational(sample.odd_total, sample.union_total);
    sample.ratio.canonicalize();
    sample.minority = Rational(sample.even_total, sample.odd_total);
    sample.minority.canonicalize();
    sample.ratio_decimal = to_decimal_string(sample.ratio, kRatioDigits);
    report.samples.push_back(std::move(sample));
  }
  report.final_gap = Rational(1) - report.samples.back().ratio;
  report.final_gap_decimal = to_decimal_string(report.final_gap, kRatioDigits);
  return report;
}

}  // namespace seqforge
