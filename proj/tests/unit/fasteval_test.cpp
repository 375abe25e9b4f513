#include "seqforge/fasteval.hpp"

#include "seqforge/recurrences.hpp"

#include "../support/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

namespace seqforge {
namespace {

constexpr std::uint64_t kPrime = 1'000'000'007;

LinearRecurrence fibonacci_rec() { return {{1, 1}, {0, 1}, 0}; }

LinearRecurrence random_recurrence(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> order_dist(1, 6), coeff_dist(-3, 3), init_dist(-10, 10);
  std::uniform_int_distribution<Index> offset_dist(-5, 5);
  LinearRecurrence r;
  const int k = order_dist(rng);
  for (int i = 0; i < k; ++i) {
    r.coeffs.emplace_back(coeff_dist(rng));
    r.initials.emplace_back(init_dist(rng));
  }
  while (r.coeffs.back() == 0) r.coeffs.back() = coeff_dist(rng);
  r.valid_from = offset_dist(rng);
  return r;
}

TEST(EvalIterativeTest, Examples) {
  EXPECT_EQ(eval_iterative(fibonacci_rec(), 10), 55);
  const LinearRecurrence r{{2, -1, 3}, {4, 5, 6}, 7};
  EXPECT_EQ(eval_iterative(r, 7), 4);
  // Schreier-Zeckendorf alpha=1, beta=2 seeded with a_1..a_3.
  EXPECT_EQ(eval_iterative({{1, 0, 1}, {2, 3, 4}, 1}, 4), 6);
}

TEST(EvalIterativeTest, RejectsIndexBeforeStart) {
  EXPECT_THROW(eval_iterative(fibonacci_rec(), -1), std::invalid_argument);
  EXPECT_THROW(eval_fast(fibonacci_rec(), -1), std::invalid_argument);
}

TEST(EvalIterativeTest, RejectsMalformedRecurrence) {
  EXPECT_THROW(eval_iterative({{1, 1}, {0}, 0}, 3), std::invalid_argument);
  EXPECT_THROW(eval_iterative({{}, {}, 0}, 3), std::invalid_argument);
  EXPECT_THROW(eval_iterative(fibonacci_rec(), 3, EvalMode::mod(1)), std::invalid_argument);
}

TEST(EvalFastTest, Examples) {
  EXPECT_EQ(eval_fast(fibonacci_rec(), 30), 832040);
  EXPECT_EQ(eval_fast({{2}, {1}, 0}, 20), 1048576);
  EXPECT_EQ(eval_fast({{2}, {1}, 0}, 20, {}, FastPath::companion_matrix), 1048576);
}

TEST(EvalFastTest, ModularMillionMatchesIteration) {
  const EvalMode mode = EvalMode::mod(kPrime);
  const BigInt iterated = eval_iterative(fibonacci_rec(), 1'000'000, mode);
  EXPECT_EQ(eval_fast(fibonacci_rec(), 1'000'000, mode), iterated);
  EXPECT_EQ(iterated, BigInt(static_cast<unsigned long>(testing::fib_mod_doubling(1'000'000, kPrime))));
}

TEST(EvalFastTest, ModularBillionMatchesDoubling) {
  const EvalMode mode = EvalMode::mod(kPrime);
  for (std::uint64_t n : {999'999'999ull, 1'000'000'000ull, 123'456'789ull}) {
    const auto expected = BigInt(static_cast<unsigned long>(testing::fib_mod_doubling(n, kPrime)));
    EXPECT_EQ(eval_fast(fibonacci_rec(), static_cast<Index>(n), mode), expected);
    EXPECT_EQ(eval_fast(fibonacci_rec(), static_cast<Index>(n), mode, FastPath::companion_matrix), expected);
  }
}

TEST(EvalFastTest, RandomRecurrencesExact) {
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<Index> step_dist(0, 5000);
  for (int trial = 0; trial < 200; ++trial) {
    const LinearRecurrence r = random_recurrence(rng);
    const Index n = r.valid_from + step_dist(rng);
    const BigInt expected = eval_iterative(r, n);
    ASSERT_EQ(eval_fast(r, n), expected) << "trial " << trial;
    if (trial % 10 == 0) {
      ASSERT_EQ(eval_fast(r, n, {}, FastPath::companion_matrix), expected);
    }
  }
}

TEST(EvalFastTest, RandomRecurrencesModular) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Index> step_dist(0, 200000);
  for (int trial = 0; trial < 50; ++trial) {
    const LinearRecurrence r = random_recurrence(rng);
    const std::uint64_t m = trial % 2 ? kPrime : (rng() | 2);
    const Index n = r.valid_from + step_dist(rng);
    const BigInt expected = eval_iterative(r, n, EvalMode::mod(m));
    ASSERT_EQ(eval_fast(r, n, EvalMode::mod(m)), expected);
    ASSERT_EQ(eval_fast(r, n, EvalMode::mod(m), FastPath::companion_matrix), expected);
    const Index far = r.valid_from + 1'000'000'000;
    ASSERT_EQ(eval_fast(r, far, EvalMode::mod(m)), eval_fast(r, far, EvalMode::mod(m), FastPath::companion_matrix));
  }
}

TEST(EvalFastTest, ExactReducedEqualsModular) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const LinearRecurrence r = random_recurrence(rng);
    const Index n = r.valid_from + static_cast<Index>(rng() % 2000);
    BigInt exact = eval_fast(r, n);
    BigInt reduced;
    mpz_fdiv_r_ui(reduced.get_mpz_t(), exact.get_mpz_t(), kPrime);
    EXPECT_EQ(eval_fast(r, n, EvalMode::mod(kPrime)), reduced);
  }
}

TEST(TailRecurrenceTest, Examples) {
  const LinearRecurrence one_one = tail_recurrence_of(SchreierZeckendorfFamily{1, 1});
  EXPECT_EQ(one_one.order(), 2u);
  EXPECT_EQ(one_one.coeffs, (std::vector<BigInt>{1, 1}));

  const LinearRecurrence two_three = tail_recurrence_of(SchreierZeckendorfFamily{2, 3});
  EXPECT_EQ(two_three.coeffs, (std::vector<BigInt>{1, 0, 0, 0, 1}));
  EXPECT_EQ(two_three.initials, (std::vector<BigInt>{2, 3, 4, 5, 6}));
  EXPECT_EQ(two_three.valid_from, 2);

  const LinearRecurrence gen3 = tail_recurrence_of(GenFibFamily{3});
  EXPECT_EQ(gen3.coeffs, (std::vector<BigInt>{1, 0, 1}));
  EXPECT_EQ(gen3.initials, (std::vector<BigInt>{0, 1, 1}));
  EXPECT_EQ(gen3.valid_from, 0);
}

TEST(TailRecurrenceTest, SchreierZeckendorfMatchesEngine) {
  for (Index alpha = 1; alpha <= 4; ++alpha)
    for (Index beta = 1; beta <= 4; ++beta) {
      const LinearRecurrence r = tail_recurrence_of(SchreierZeckendorfFamily{alpha, beta});
      EXPECT_EQ(r.order(), static_cast<std::size_t>(alpha + beta));
      const SequenceWindow w = schreier_zeckendorf_seq(alpha, beta, 2000);
      for (Index n = r.valid_from; n <= 2000; n += (n < 100 ? 1 : 97)) ASSERT_EQ(eval_fast(r, n), w.at(n));
      ASSERT_EQ(eval_fast(r, 2000), w.at(2000));
    }
}

TEST(TailRecurrenceTest, PartialSumFamilies) {
  const LinearRecurrence h = tail_recurrence_of(HFamily{});
  EXPECT_EQ(h.order(), 4u);
  const SequenceWindow hw = h_seq(300);
  for (Index n = 0; n <= 300; ++n) ASSERT_EQ(eval_fast(h, n), hw.at(n));
  for (Index order = 2; order <= 5; ++order) {
    const SequenceWindow k = gen_k_seq(order, 200);
    const SequenceWindow hh = gen_h_seq(order, 200);
    const LinearRecurrence kr = tail_recurrence_of(GenKFamily{order});
    const LinearRecurrence hr = tail_recurrence_of(GenHFamily{order});
    for (Index m = 0; m <= 200; m += 3) {
      ASSERT_EQ(eval_fast(kr, m), k.at(m));
      ASSERT_EQ(eval_fast(hr, m), hh.at(m));
    }
  }
  EXPECT_EQ(eval_fast(tail_recurrence_of(FibonacciFamily{}), 30), 832040);
}

}  // namespace
}  // namespace seqforge
