#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "semishor/errors.hpp"
#include "semishor/numtheory.hpp"

using namespace semishor;
using namespace semishor::numtheory;

namespace {

std::uint64_t naive_pow(std::uint64_t x, std::uint64_t a, std::uint64_t n) {
  std::uint64_t v = 1 % n;
  for (std::uint64_t i = 0; i < a; ++i) v = v * (x % n) % n;
  return v;
}

}  // namespace

TEST(ModExp, Examples) {
  EXPECT_EQ(mod_exp(5, 0, 33), 1u);
  EXPECT_EQ(mod_exp(5, 10, 33), 1u);
  EXPECT_EQ(mod_exp(2, 8, 51), 1u);
  EXPECT_EQ(mod_exp(5, 5, 33), 23u);
}

TEST(ModExp, NegativeBaseIsReduced) { EXPECT_EQ(mod_exp(-1, 3, 33), 32u); }

TEST(ModExp, RejectsSmallModulus) {
  EXPECT_THROW(mod_exp(2, 3, 1), InvalidArgument);
  EXPECT_THROW(mod_exp(2, 3, 0), InvalidArgument);
}

TEST(ModExp, MatchesNaiveLoop) {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    for (std::uint64_t x = 0; x < n; ++x) {
      for (std::uint64_t a = 0; a < 40; ++a) {
        ASSERT_EQ(mod_exp(static_cast<std::int64_t>(x), a, n), naive_pow(x, a, n)) << x << "^" << a << " mod " << n;
      }
    }
  }
}

TEST(ModExp, LargeModulusDoesNotOverflow) {
  const std::uint64_t n = kMaxModulus - 1;
  EXPECT_EQ(mod_exp(static_cast<std::int64_t>(n - 1), 2, n), 1u);
}

TEST(MultiplicativeOrder, Examples) {
  EXPECT_EQ(multiplicative_order(5, 33), 10u);
  EXPECT_EQ(multiplicative_order(1, 33), 1u);
  EXPECT_EQ(multiplicative_order(2, 51), 8u);
  EXPECT_EQ(multiplicative_order(2, 15), 4u);
  EXPECT_EQ(multiplicative_order(4, 15), 2u);
}

TEST(MultiplicativeOrder, NotCoprimeCarriesGcd) {
  try {
    multiplicative_order(6, 33);
    FAIL() << "expected NotCoprime";
  } catch (const NotCoprime& e) {
    EXPECT_EQ(e.gcd(), 3u);
  }
}

TEST(MultiplicativeOrder, MinimalForAllSmallModuli) {
  for (std::uint64_t n = 2; n <= 100; ++n) {
    for (std::uint64_t x = 1; x < n; ++x) {
      if (std::gcd(x, n) != 1) continue;
      const auto order = multiplicative_order(static_cast<std::int64_t>(x), n);
      ASSERT_EQ(mod_exp(static_cast<std::int64_t>(x), order, n), 1u % n);
      for (std::uint64_t m = 1; m < order; ++m) ASSERT_NE(mod_exp(static_cast<std::int64_t>(x), m, n), 1u);
    }
  }
}

TEST(ContinuedFraction, Examples) {
  const auto c77 = continued_fraction_candidates(BitRegister(77, 8), 33);
  EXPECT_NE(std::find(c77.begin(), c77.end(), Convergent{3, 10}), c77.end());
  EXPECT_EQ(continued_fraction_candidates(BitRegister(0, 8), 33), (std::vector<Convergent>{{0, 1}}));
  const auto c128 = continued_fraction_candidates(BitRegister(128, 8), 33);
  EXPECT_NE(std::find(c128.begin(), c128.end(), Convergent{1, 2}), c128.end());
}

TEST(ContinuedFraction, ConvergentsAreOrderedAndBounded) {
  for (std::uint64_t c = 1; c < 256; ++c) {
    const auto cs = continued_fraction_candidates(BitRegister(c, 8), 33);
    ASSERT_FALSE(cs.empty());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      EXPECT_LT(cs[i].denominator, 33u);
      EXPECT_EQ(std::gcd(cs[i].numerator, cs[i].denominator), 1u);
      if (i > 0) {
        EXPECT_GE(cs[i].denominator, cs[i - 1].denominator);
      }
    }
    // Consecutive convergents satisfy |p_k q_{k-1} - p_{k-1} q_k| = 1.
    for (std::size_t i = 1; i < cs.size(); ++i) {
      const auto lhs = static_cast<std::int64_t>(cs[i].numerator * cs[i - 1].denominator);
      const auto rhs = static_cast<std::int64_t>(cs[i - 1].numerator * cs[i].denominator);
      EXPECT_EQ(std::abs(lhs - rhs), 1);
    }
  }
}

TEST(ContinuedFraction, GoodCHatYieldsTheFraction) {
  // Every good c_hat for q=256, L=10 has d/10 (in lowest terms) among its convergents.
  for (std::uint64_t d = 0; d < 10; ++d) {
    for (std::uint64_t c = 0; c < 256; ++c) {
      const double gap = std::abs(static_cast<double>(c) / 256.0 - static_cast<double>(d) / 10.0);
      if (gap >= 1.0 / 512.0) continue;
      const auto g = std::gcd(d, std::uint64_t{10});
      const Convergent want{d / g, 10 / g};
      const auto cs = continued_fraction_candidates(BitRegister(c, 8), 33);
      EXPECT_NE(std::find(cs.begin(), cs.end(), want), cs.end()) << "c=" << c << " d=" << d;
    }
  }
}

TEST(ExtractFactors, Examples) {
  const auto ok = extract_factors(5, 10, 33);
  ASSERT_TRUE(ok);
  EXPECT_EQ(*ok.factors, std::make_pair(std::uint64_t{11}, std::uint64_t{3}));

  const auto odd = extract_factors(5, 9, 33);
  EXPECT_FALSE(odd);
  EXPECT_EQ(odd.reason, FactorFailure::odd_period);

  const auto trivial = extract_factors(32, 2, 33);
  EXPECT_FALSE(trivial);
  EXPECT_EQ(trivial.reason, FactorFailure::trivial_root);
}

TEST(ExtractFactors, Fifteen) {
  const auto r = extract_factors(4, 2, 15);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r.factors, std::make_pair(std::uint64_t{3}, std::uint64_t{5}));
}

TEST(ExtractFactors, RejectsWrongEvenPeriod) { EXPECT_THROW(extract_factors(5, 4, 33), InvalidArgument); }

TEST(RecoverPeriod, UsesMultiples) {
  // 51/256 gives 1/5; 5^5 != 1 mod 33 but the multiple 10 works.
  const auto r = recover_period(BitRegister(51, 8), 5, 33);
  EXPECT_TRUE(r.accepted);
  EXPECT_EQ(r.candidate_L, 10u);
  ASSERT_TRUE(r.factors);
}

TEST(RecoverPeriod, EveryGoodCHatWithCoprimeDSucceeds) {
  for (const std::uint64_t c : {26u, 77u, 179u, 230u}) {
    const auto r = recover_period(BitRegister(c, 8), 5, 33);
    ASSERT_TRUE(r.factors) << c;
    EXPECT_EQ(std::min(r.factors->first, r.factors->second), 3u);
  }
}

TEST(HCoefficient, Examples) {
  EXPECT_EQ(h_coefficient(BitRegister(9, 4), BitRegister(9, 4)), 16u);
  EXPECT_EQ(h_coefficient(BitRegister(9, 4), BitRegister(6, 4)), 1u);
  EXPECT_EQ(h_coefficient(BitRegister(5, 3), BitRegister(3, 3)), 2u);
}

TEST(HCoefficient, BinomialSum) {
  for (unsigned l = 1; l <= 10; ++l) {
    const std::uint64_t q = std::uint64_t{1} << l;
    for (std::uint64_t c = 0; c < q; c += 3) {
      double sum = 0.0;
      for (std::uint64_t b = 0; b < q; ++b) sum += static_cast<double>(h_coefficient(BitRegister(b, l), BitRegister(c, l)));
      EXPECT_DOUBLE_EQ(sum / static_cast<double>(q), std::pow(1.5, l));
    }
  }
}

TEST(BitReverse, Examples) {
  EXPECT_EQ(bit_reverse(BitRegister(1, 3)).value(), 4u);
  EXPECT_EQ(bit_reverse(BitRegister(0, 8)).value(), 0u);
  EXPECT_EQ(bit_reverse(BitRegister(6, 3)).value(), 3u);
}

TEST(BitReverse, InvolutionExhaustive) {
  for (unsigned l = 1; l <= 12; ++l) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << l); ++a) {
      ASSERT_EQ(bit_reverse(bit_reverse(BitRegister(a, l))).value(), a);
      ASSERT_EQ(bit_reverse_bits(a, l), bit_reverse(BitRegister(a, l)).value());
    }
  }
}

TEST(BitRegister, Validation) {
  EXPECT_THROW(BitRegister(8, 3), InvalidArgument);
  EXPECT_THROW(BitRegister(1, 63), InvalidArgument);
  const BitRegister r(6, 3);
  EXPECT_EQ(r.modulus(), 8u);
  EXPECT_EQ(r.bit(0), 0);
  EXPECT_EQ(r.bit(1), 1);
  EXPECT_EQ(r.bit(2), 1);
}

TEST(Primality, Classification) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(31));
  EXPECT_FALSE(is_prime(33));
  EXPECT_FALSE(is_prime(1));
  EXPECT_EQ(perfect_power(27), std::make_optional(std::make_pair(std::uint64_t{3}, 3u)));
  EXPECT_EQ(perfect_power(49), std::make_optional(std::make_pair(std::uint64_t{7}, 2u)));
  EXPECT_FALSE(perfect_power(33));
  EXPECT_FALSE(perfect_power(51));
}
