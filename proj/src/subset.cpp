#include "seqforge/subset.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <sstream>
#include <thread>

namespace seqforge {
namespace {

void validate_condition(const Condition& c, Index n) {
  if (n < 0) throw std::invalid_argument("ambient n must be >= 0");
  if (c.alpha && *c.alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  if (c.beta && *c.beta < 1) throw std::invalid_argument("beta must be >= 1");
  if (c.min_size < 0) throw std::invalid_argument("min_size must be >= 0");
  if (c.forced_max && (*c.forced_max < 1 || *c.forced_max > n))
    throw std::invalid_argument("forced_max must lie in 1..n");
}

void check_limit(Index n, int limit) {
  if (limit < 0 || limit > kMaxEnumLimit)
    throw std::invalid_argument("enumeration limit must lie in 0.." + std::to_string(kMaxEnumLimit));
  if (n > limit) throw EnumerationLimitError(n, limit);
}

bool gap_ok(Index gap, const Condition& c) {
  if (c.beta && gap < *c.beta) return false;
  switch (c.gap_parity) {
    case GapParity::all_odd: return gap % 2 == 1;
    case GapParity::all_even: return gap % 2 == 0;
    case GapParity::any: return true;
  }
  return true;
}

// Same clauses as matches(), evaluated directly on the characteristic vector.
bool mask_matches(std::uint64_t mask, const Condition& c) {
  const Index size = std::popcount(mask);
  if (size < c.min_size) return false;
  if (c.forced_max) {
    if (mask == 0 || Index{64 - std::countl_zero(mask)} != *c.forced_max) return false;
  }
  if (mask == 0) return true;
  Index prev = std::countr_zero(mask) + 1;
  if (c.alpha && static_cast<__int128>(prev) < static_cast<__int128>(*c.alpha) * size) return false;
  if (!c.beta && c.gap_parity == GapParity::any) return true;
  for (std::uint64_t rest = mask & (mask - 1); rest != 0; rest &= rest - 1) {
    const Index pos = std::countr_zero(rest) + 1;
    if (!gap_ok(pos - prev, c)) return false;
    prev = pos;
  }
  return true;
}

std::uint64_t count_range(std::uint64_t begin, std::uint64_t end, const Condition& c) {
  std::uint64_t total = 0;
  for (std::uint64_t mask = begin; mask != end; ++mask) total += mask_matches(mask, c) ? 1 : 0;
  return total;
}

}  // namespace

EnumerationLimitError::EnumerationLimitError(Index n, int limit)
    : std::runtime_error("n = " + std::to_string(n) + " exceeds the exhaustive enumeration limit " +
                         std::to_string(limit)),
      n_(n),
      limit_(limit) {}

Subset::Subset(std::vector<Index> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1) throw std::invalid_argument("subset elements must be >= 1");
    if (i > 0 && elements_[i] <= elements_[i - 1])
      throw std::invalid_argument("subset elements must be strictly increasing");
  }
}

Subset Subset::from_mask(std::uint64_t mask) {
  Subset s;
  s.elements_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for (; mask != 0; mask &= mask - 1) s.elements_.push_back(std::countr_zero(mask) + 1);
  return s;
}

bool Subset::contains(Index value) const {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

std::uint64_t Subset::to_mask() const {
  std::uint64_t mask = 0;
  for (Index e : elements_) {
    if (e > 64) throw std::out_of_range("element too large for a 64-bit mask");
    mask |= std::uint64_t{1} << (e - 1);
  }
  return mask;
}

Subset Subset::shifted(Index delta) const {
  std::vector<Index> out(elements_);
  for (Index& e : out) e += delta;
  return Subset(std::move(out));
}

Subset Subset::without_max() const {
  Subset s = *this;
  if (!s.elements_.empty()) s.elements_.pop_back();
  return s;
}

Subset Subset::with_appended(Index value) const {
  std::vector<Index> out(elements_);
  out.push_back(value);
  return Subset(std::move(out));
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
  os << '}';
  return os.str();
}

GapList difference_set(const Subset& s) {
  const auto e = s.elements();
  GapList gaps;
  if (e.size() < 2) return gaps;
  gaps.reserve(e.size() - 1);
  for (std::size_t i = 1; i < e.size(); ++i) gaps.push_back(e[i] - e[i - 1]);
  return gaps;
}

bool is_alpha_schreier(const Subset& s, Index alpha) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  if (s.empty()) return true;
  return static_cast<__int128>(s.min()) >= static_cast<__int128>(alpha) * static_cast<Index>(s.size());
}

bool is_beta_zeckendorf(const Subset& s, Index beta) {
  if (beta < 1) throw std::invalid_argument("beta must be >= 1");
  const GapList gaps = difference_set(s);
  return gaps.empty() || *std::min_element(gaps.begin(), gaps.end()) >= beta;
}

bool matches(const Subset& s, const Condition& c, Index n) {
  validate_condition(c, n);
  if (!s.empty() && s.max() > n) throw std::invalid_argument("subset element exceeds ambient n");

  if (c.alpha && !is_alpha_schreier(s, *c.alpha)) return false;
  if (c.beta && !is_beta_zeckendorf(s, *c.beta)) return false;
  if (c.gap_parity != GapParity::any) {
    const Index want = c.gap_parity == GapParity::all_odd ? 1 : 0;
    for (Index gap : difference_set(s))
      if (gap % 2 != want) return false;
  }
  if (static_cast<Index>(s.size()) < c.min_size) return false;
  if (c.forced_max && (s.empty() || s.max() != *c.forced_max)) return false;
  return true;
}

BigCount count_subsets(Index n, const Condition& c, int limit) {
  validate_condition(c, n);
  check_limit(n, limit);

  const std::uint64_t end = std::uint64_t{1} << n;
  constexpr Index kParallelFrom = 22;
  if (n < kParallelFrom) return BigCount(static_cast<unsigned long>(count_range(0, end, c)));

  // Partition the mask space into equal blocks by the high bits; the sum is order-independent.
  constexpr int kBlockBits = 6;
  const std::uint64_t block = end >> kBlockBits;
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 1u << kBlockBits));
  std::atomic<std::uint64_t> next{0};
  std::vector<std::uint64_t> partial(workers, 0);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = next++; b < (1u << kBlockBits); b = next++)
          partial[w] += count_range(b * block, (b + 1) * block, c);
      });
    }
  }
  std::uint64_t total = 0;
  for (std::uint64_t p : partial) total += p;
  return BigCount(static_cast<unsigned long>(total));
}

void for_each_subset(Index n, const Condition& c, const std::function<void(const Subset&)>& visit,
                     int limit) {
  validate_condition(c, n);
  check_limit(n, limit);
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask != end; ++mask) {
    const Subset s = Subset::from_mask(mask);
    if (matches(s, c, n)) visit(s);
  }
}

std::vector<Subset> enumerate_subsets(Index n, const Condition& c, int limit) {
  std::vector<Subset> out;
  for_each_subset(n, c, [&](const Subset& s) { out.push_back(s); }, limit);
  return out;
}

}  // namespace seqforge
