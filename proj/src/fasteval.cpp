#include "seqforge/fasteval.hpp"

#include "seqforge/recurrences.hpp"

#include <bit>
#include <stdexcept>

namespace seqforge {
namespace {

struct ExactRing {
  using value_type = BigInt;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type lift(const BigInt& v) const { return v; }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  void add_mul(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  BigInt to_big(const value_type& v) const { return v; }
};

struct ModRing {
  using value_type = std::uint64_t;
  std::uint64_t m;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type lift(const BigInt& v) const { return mpz_fdiv_ui(v.get_mpz_t(), m); }
  bool is_zero(value_type v) const { return v == 0; }
  value_type add(value_type a, value_type b) const { return a >= m - b ? a - (m - b) : a + b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % m);
  }
  void add_mul(value_type& acc, value_type a, value_type b) const { acc = add(acc, mul(a, b)); }
  BigInt to_big(value_type v) const { return BigInt(static_cast<unsigned long>(v)); }
};

template <class Ring>
using Vec = std::vector<typename Ring::value_type>;

template <class Ring>
Vec<Ring> lift_all(const Ring& ring, const std::vector<BigInt>& values) {
  Vec<Ring> out;
  out.reserve(values.size());
  for (const BigInt& v : values) out.push_back(ring.lift(v));
  return out;
}

// a(valid_from + steps) by forward iteration over a circular window.
template <class Ring>
typename Ring::value_type iterate(const Ring& ring, const Vec<Ring>& coeffs, Vec<Ring> window,
                                  std::uint64_t steps) {
  const std::size_t k = coeffs.size();
  if (steps < k) return window[steps];
  for (std::uint64_t j = k; j <= steps; ++j) {
    auto next = ring.zero();
    for (std::size_t i = 1; i <= k; ++i) ring.add_mul(next, coeffs[i - 1], window[(j - i) % k]);
    window[j % k] = std::move(next);
  }
  return window[steps % k];
}

// a * b mod P(x), where x^k = sum_i coeffs[i-1] x^(k-i).
template <class Ring>
Vec<Ring> mul_mod(const Ring& ring, const Vec<Ring>& a, const Vec<Ring>& b, const Vec<Ring>& coeffs) {
  const std::size_t k = coeffs.size();
  Vec<Ring> prod(2 * k - 1, ring.zero());
  for (std::size_t i = 0; i < k; ++i) {
    if (ring.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < k; ++j) ring.add_mul(prod[i + j], a[i], b[j]);
  }
  for (std::size_t d = 2 * k - 2; d >= k; --d) {
    if (ring.is_zero(prod[d])) continue;
    const auto top = prod[d];
    for (std::size_t i = 1; i <= k; ++i) ring.add_mul(prod[d - i], top, coeffs[i - 1]);
  }
  prod.resize(k);
  return prod;
}

template <class Ring>
Vec<Ring> times_x_mod(const Ring& ring, Vec<Ring> a, const Vec<Ring>& coeffs) {
  const std::size_t k = coeffs.size();
  auto top = std::move(a[k - 1]);
  for (std::size_t i = k - 1; i > 0; --i) a[i] = std::move(a[i - 1]);
  a[0] = ring.zero();
  for (std::size_t i = 1; i <= k; ++i) ring.add_mul(a[k - i], top, coeffs[i - 1]);
  return a;
}

template <class Ring>
typename Ring::value_type by_characteristic_polynomial(const Ring& ring, const Vec<Ring>& coeffs,
                                                       const Vec<Ring>& initials, std::uint64_t steps) {
  const std::size_t k = coeffs.size();
  if (steps < k) return initials[steps];
  Vec<Ring> power(k, ring.zero());
  power[0] = ring.one();
  for (int bit = std::bit_width(steps) - 1; bit >= 0; --bit) {
    power = mul_mod(ring, power, power, coeffs);
    if ((steps >> bit) & 1) power = times_x_mod(ring, std::move(power), coeffs);
  }
  auto result = ring.zero();
  for (std::size_t i = 0; i < k; ++i) ring.add_mul(result, power[i], initials[i]);
  return result;
}

// Dense k x k matrices, row-major.
template <class Ring>
Vec<Ring> mat_mul(const Ring& ring, const Vec<Ring>& a, const Vec<Ring>& b, std::size_t k) {
  Vec<Ring> out(k * k, ring.zero());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (ring.is_zero(a[i * k + l])) continue;
      for (std::size_t j = 0; j < k; ++j) ring.add_mul(out[i * k + j], a[i * k + l], b[l * k + j]);
    }
  return out;
}

template <class Ring>
typename Ring::value_type by_companion_matrix(const Ring& ring, const Vec<Ring>& coeffs,
                                              const Vec<Ring>& initials, std::uint64_t steps) {
  const std::size_t k = coeffs.size();
  if (steps < k) return initials[steps];
  // State (a(j+k-1), ..., a(j)) advances by one index under the companion matrix.
  Vec<Ring> companion(k * k, ring.zero());
  for (std::size_t j = 0; j < k; ++j) companion[j] = coeffs[j];
  for (std::size_t i = 1; i < k; ++i) companion[i * k + (i - 1)] = ring.one();

  Vec<Ring> power(k * k, ring.zero());
  for (std::size_t i = 0; i < k; ++i) power[i * k + i] = ring.one();
  for (int bit = std::bit_width(steps) - 1; bit >= 0; --bit) {
    power = mat_mul(ring, power, power, k);
    if ((steps >> bit) & 1) power = mat_mul(ring, power, companion, k);
  }
  // Last row picks a(valid_from + steps).
  auto result = ring.zero();
  for (std::size_t j = 0; j < k; ++j) ring.add_mul(result, power[(k - 1) * k + j], initials[k - 1 - j]);
  return result;
}

std::uint64_t steps_to(const LinearRecurrence& r, Index n) {
  r.validate();
  if (n < r.valid_from)
    throw std::invalid_argument("index " + std::to_string(n) + " precedes valid_from " +
                                std::to_string(r.valid_from));
  return static_cast<std::uint64_t>(n - r.valid_from);
}

void check_mode(const EvalMode& mode) {
  if (mode.modulus && *mode.modulus < 2) throw std::invalid_argument("modulus must be >= 2");
}

template <class Fn>
BigInt dispatch(const LinearRecurrence& r, EvalMode mode, Fn&& kernel) {
  check_mode(mode);
  if (mode.modulus) {
    const ModRing ring{*mode.modulus};
    return ring.to_big(kernel(ring, lift_all(ring, r.coeffs), lift_all(ring, r.initials)));
  }
  const ExactRing ring;
  return kernel(ring, r.coeffs, r.initials);
}

}  // namespace

void LinearRecurrence::validate() const {
  if (coeffs.empty()) throw std::invalid_argument("recurrence order must be >= 1");
  if (coeffs.size() != initials.size())
    throw std::invalid_argument("recurrence needs exactly `order` initial terms");
}

BigInt eval_iterative(const LinearRecurrence& r, Index n, EvalMode mode) {
  const std::uint64_t steps = steps_to(r, n);
  return dispatch(r, mode, [steps](const auto& ring, const auto& coeffs, const auto& initials) {
    return iterate(ring, coeffs, initials, steps);
  });
}

BigInt eval_fast(const LinearRecurrence& r, Index n, EvalMode mode, FastPath path) {
  const std::uint64_t steps = steps_to(r, n);
  return dispatch(r, mode, [steps, path](const auto& ring, const auto& coeffs, const auto& initials) {
    return path == FastPath::companion_matrix ? by_companion_matrix(ring, coeffs, initials, steps)
                                              : by_characteristic_polynomial(ring, coeffs, initials, steps);
  });
}

LinearRecurrence partial_sum_recurrence(const LinearRecurrence& r, std::vector<BigInt> sums_head) {
  r.validate();
  const std::size_t k = r.order();
  if (sums_head.size() != k + 1) throw std::invalid_argument("partial sum recurrence needs order + 1 sums");
  // Characteristic polynomial times (x - 1).
  LinearRecurrence out;
  out.coeffs.resize(k + 1);
  out.coeffs[0] = r.coeffs[0] + 1;
  for (std::size_t i = 1; i < k; ++i) out.coeffs[i] = r.coeffs[i] - r.coeffs[i - 1];
  out.coeffs[k] = -r.coeffs[k - 1];
  out.initials = std::move(sums_head);
  out.valid_from = r.valid_from;
  return out;
}

namespace {

std::vector<BigInt> head(const SequenceWindow& w, Index from, std::size_t count) {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(w.at(from + static_cast<Index>(i)));
  return out;
}

LinearRecurrence gen_fib_recurrence(Index n) {
  if (n < 2) throw std::invalid_argument("generalized Fibonacci order n must be >= 2");
  LinearRecurrence r;
  r.coeffs.assign(static_cast<std::size_t>(n), BigInt(0));
  r.coeffs.front() = 1;
  r.coeffs.back() = 1;
  r.initials = head(gen_fib_seq(n, n - 1), 0, static_cast<std::size_t>(n));
  r.valid_from = 0;
  return r;
}

LinearRecurrence once_summed(const LinearRecurrence& base, const SequenceWindow& sums) {
  return partial_sum_recurrence(base, head(sums, base.valid_from, base.order() + 1));
}

}  // namespace

LinearRecurrence tail_recurrence_of(const RecurrenceFamily& family) {
  struct Visitor {
    LinearRecurrence operator()(const SchreierZeckendorfFamily& f) const {
      if (f.alpha < 1 || f.beta < 1) throw std::invalid_argument("alpha and beta must be >= 1");
      const Index order = f.alpha + f.beta;
      LinearRecurrence r;
      r.coeffs.assign(static_cast<std::size_t>(order), BigInt(0));
      r.coeffs.front() = 1;
      r.coeffs.back() = 1;
      r.valid_from = f.alpha;
      const SequenceWindow w = schreier_zeckendorf_seq(f.alpha, f.beta, 2 * f.alpha + f.beta - 1);
      r.initials = head(w, f.alpha, static_cast<std::size_t>(order));
      return r;
    }
    LinearRecurrence operator()(const FibonacciFamily&) const { return gen_fib_recurrence(2); }
    LinearRecurrence operator()(const HFamily&) const {
      const LinearRecurrence fib = gen_fib_recurrence(2);
      const SequenceWindow k = partial_sum(fibonacci_seq(4));
      return once_summed(once_summed(fib, k), partial_sum(k));
    }
    LinearRecurrence operator()(const GenFibFamily& f) const { return gen_fib_recurrence(f.n); }
    LinearRecurrence operator()(const GenKFamily& f) const {
      return once_summed(gen_fib_recurrence(f.n), gen_k_seq(f.n, f.n + 1));
    }
    LinearRecurrence operator()(const GenHFamily& f) const {
      const SequenceWindow k = gen_k_seq(f.n, f.n + 2);
      return once_summed(once_summed(gen_fib_recurrence(f.n), k), partial_sum(k));
    }
  };
  return std::visit(Visitor{}, family);
}

}  // namespace seqforge
