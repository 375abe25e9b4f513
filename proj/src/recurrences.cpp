#include "seqforge/recurrences.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace seqforge {
namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string family_id(const std::string& family, std::initializer_list<std::pair<const char*, Index>> params) {
  std::string id = family;
  if (params.size() == 0) return id;
  id += '(';
  bool first = true;
  for (const auto& [name, value] : params) {
    if (!first) id += ',';
    id += name;
    id += '=';
    id += std::to_string(value);
    first = false;
  }
  id += ')';
  return id;
}

// (F_k, F_{k+1})
std::pair<BigCount, BigCount> fib_pair(Index k) {
  if (k == 0) return {BigCount(0), BigCount(1)};
  auto [a, b] = fib_pair(k / 2);
  BigCount even = a * (2 * b - a);
  BigCount odd = a * a + b * b;
  if (k % 2 == 0) return {std::move(even), std::move(odd)};
  BigCount next = even + odd;
  return {std::move(odd), std::move(next)};
}

}  // namespace

const BigCount& SequenceWindow::at(Index index) const {
  if (index < offset || index > last_index())
    throw std::out_of_range("index " + std::to_string(index) + " outside window " + id);
  return terms[static_cast<std::size_t>(index - offset)];
}

SequenceWindow schreier_zeckendorf_seq(Index alpha, Index beta, Index n_max) {
  require(alpha >= 1 && beta >= 1, "alpha and beta must be >= 1");
  require(n_max >= 0, "n_max must be >= 0");
  SequenceWindow w{family_id("schreier-zeckendorf", {{"alpha", alpha}, {"beta", beta}}), 1, {}};
  w.terms.reserve(static_cast<std::size_t>(n_max));
  const Index head_end = 2 * alpha + beta - 1;
  for (Index n = 1; n <= n_max; ++n) {
    if (n <= alpha - 1) {
      w.terms.emplace_back(1);
    } else if (n <= head_end) {
      w.terms.emplace_back(static_cast<long>(n - alpha + 2));
    } else {
      w.terms.push_back(w.at(n - 1) + w.at(n - (alpha + beta)));
    }
  }
  return w;
}

BigCount schreier_zeckendorf_count(Index alpha, Index beta, Index n) {
  require(n >= 0, "n must be >= 0");
  if (n == 0) {
    require(alpha >= 1 && beta >= 1, "alpha and beta must be >= 1");
    return 1;
  }
  return schreier_zeckendorf_seq(alpha, beta, n).terms.back();
}

SequenceWindow zeckendorf_seq(Index beta, Index n_max) {
  require(beta >= 1, "beta must be >= 1");
  require(n_max >= 0, "n_max must be >= 0");
  SequenceWindow w{family_id("zeckendorf", {{"beta", beta}}), 0, {BigCount(1)}};
  // Subsets with maximum n: {n} alone, or {n} on top of a gap-beta subset of {1..n-beta}.
  for (Index n = 1; n <= n_max; ++n) {
    BigCount with_max = n > beta ? w.at(n - beta) : BigCount(1);
    w.terms.push_back(w.at(n - 1) + with_max);
  }
  return w;
}

BigCount fibonacci(Index n) {
  require(n >= 0, "fibonacci index must be >= 0");
  return fib_pair(n).first;
}

SequenceWindow fibonacci_seq(Index n_max) {
  require(n_max >= 0, "n_max must be >= 0");
  SequenceWindow w{"fib", 0, {}};
  w.terms.reserve(static_cast<std::size_t>(n_max) + 1);
  BigCount a = 0, b = 1;
  for (Index n = 0; n <= n_max; ++n) {
    w.terms.push_back(a);
    BigCount next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return w;
}

SequenceWindow partial_sum(const SequenceWindow& w) {
  SequenceWindow out{w.id.empty() ? std::string{} : "psum(" + w.id + ")", w.offset, {}};
  out.terms.reserve(w.terms.size());
  BigCount running = 0;
  for (const BigCount& t : w.terms) {
    running += t;
    out.terms.push_back(running);
  }
  return out;
}

SequenceWindow h_seq(Index n_max) {
  require(n_max >= 0, "n_max must be >= 0");
  SequenceWindow w{"H", 0, {}};
  w.terms.reserve(static_cast<std::size_t>(n_max) + 1);
  BigCount f = 0, f_next = 1, k = 0, h = 0;
  for (Index n = 0; n <= n_max; ++n) {
    k += f;
    h += k;
    w.terms.push_back(h);
    BigCount next = f + f_next;
    f = std::move(f_next);
    f_next = std::move(next);
  }
  return w;
}

SequenceWindow gen_fib_seq(Index n, Index m_max) {
  require(n >= 2, "generalized Fibonacci order n must be >= 2");
  require(m_max >= 0, "m_max must be >= 0");
  SequenceWindow w{family_id("genfib", {{"n", n}}), 0, {}};
  w.terms.reserve(static_cast<std::size_t>(m_max) + 1);
  for (Index m = 0; m <= m_max; ++m) {
    if (m == 0) {
      w.terms.emplace_back(0);
    } else if (m <= n) {
      w.terms.emplace_back(1);
    } else {
      w.terms.push_back(w.at(m - 1) + w.at(m - n));
    }
  }
  return w;
}

SequenceWindow gen_k_seq(Index n, Index m_max) {
  SequenceWindow w = partial_sum(gen_fib_seq(n, m_max));
  w.id = family_id("genK", {{"n", n}});
  return w;
}

SequenceWindow gen_h_seq(Index n, Index m_max) {
  SequenceWindow w = partial_sum(partial_sum(gen_fib_seq(n, m_max)));
  w.id = family_id("genH", {{"n", n}});
  return w;
}

GapCounts odd_gap_counts(Index n) {
  require(n >= 1, "n must be >= 1");
  return {fibonacci(n + 1), fibonacci(n + 3) - 1};
}

GapCounts even_gap_counts(Index n) {
  require(n >= 1, "n must be >= 1");
  GapCounts out;
  out.contain_n = pow2(static_cast<unsigned long>((n - 1) / 2));
  if (n % 2 == 1) {
    out.total = 3 * pow2(static_cast<unsigned long>((n - 1) / 2)) - 1;
  } else {
    out.total = 2 * pow2(static_cast<unsigned long>(n / 2)) - 1;
  }
  return out;
}

SequenceWindow min_size_odd_gap_seq(Index k, Index n_max) {
  require(k >= 0, "k must be >= 0");
  require(n_max >= 0, "n_max must be >= 0");
  SequenceWindow w{family_id("minsize-oddgap", {{"k", k}}), 1, {}};
  w.terms.reserve(static_cast<std::size_t>(n_max));

  // Size buckets 1..cap; bucket `cap` holds every size >= cap.
  const Index cap = std::max<Index>(k, 1);
  const auto buckets = static_cast<std::size_t>(cap) + 1;
  // by_parity[p][t]: subsets with maximum of parity p and size bucket t, over maxima seen so far.
  std::vector<BigCount> by_parity[2] = {std::vector<BigCount>(buckets, 0), std::vector<BigCount>(buckets, 0)};
  std::vector<BigCount> ending(buckets, 0);
  BigCount total = k == 0 ? 1 : 0;

  for (Index j = 1; j <= n_max; ++j) {
    // An odd gap to j means the previous maximum has the opposite parity.
    const std::vector<BigCount>& prev = by_parity[(j + 1) % 2];
    for (Index t = 1; t <= cap; ++t) {
      const auto ti = static_cast<std::size_t>(t);
      ending[ti] = t == 1 ? BigCount(1) : prev[ti - 1];
      if (t == cap) ending[ti] += prev[ti];
    }
    std::vector<BigCount>& mine = by_parity[j % 2];
    for (std::size_t t = 1; t < buckets; ++t) mine[t] += ending[t];
    total += ending[static_cast<std::size_t>(cap)];
    w.terms.push_back(total);
  }
  return w;
}

BigCount min_size_odd_gap_count(Index n, Index k) {
  require(n >= 0, "n must be >= 0");
  if (n == 0) return k == 0 ? 1 : 0;
  return min_size_odd_gap_seq(k, n).terms.back();
}

namespace {

// Count over {1..n} ignoring forced_max.
std::optional<BigCount> unforced_count(Index n, const Condition& c) {
  const bool gap_clauses = c.alpha || c.beta;
  if (c.gap_parity == GapParity::all_odd) {
    if (gap_clauses) return std::nullopt;
    return min_size_odd_gap_count(n, c.min_size);
  }

  if (c.min_size > 1) return std::nullopt;
  BigCount total;
  if (c.gap_parity == GapParity::all_even) {
    if (gap_clauses) return std::nullopt;
    total = n == 0 ? BigCount(1) : even_gap_counts(n).total;
  } else if (c.alpha) {
    total = schreier_zeckendorf_count(*c.alpha, c.beta.value_or(1), n);
  } else if (c.beta) {
    total = zeckendorf_seq(*c.beta, n).terms.back();
  } else {
    total = pow2(static_cast<unsigned long>(n));
  }
  // Every family above admits the empty set.
  if (c.min_size == 1) total -= 1;
  return total;
}

}  // namespace

std::optional<BigCount> count_by_recurrence(Index n, const Condition& c) {
  require(n >= 0, "n must be >= 0");
  if (!c.forced_max) return unforced_count(n, c);
  const Index m = *c.forced_max;
  require(m >= 1 && m <= n, "forced_max must lie in 1..n");
  // Subsets with maximum exactly m: those of {1..m} minus those of {1..m-1}.
  Condition open = c;
  open.forced_max.reset();
  auto upto = unforced_count(m, open);
  auto below = unforced_count(m - 1, open);
  if (!upto || !below) return std::nullopt;
  return BigCount(*upto - *below);
}

}  // namespace seqforge
