#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "semishor/errors.hpp"
#include "semishor/oracles.hpp"
#include "semishor/quantum.hpp"
#include "semishor/semiclassical.hpp"

using namespace semishor;
using namespace semishor::semiclassical;

namespace {

constexpr double kPi = std::numbers::pi;
const SemiclassicalParams kPaper{EvalMode::paper_formula, 0};
const SemiclassicalParams kStrict{EvalMode::strict_integral, 0};

// Values frozen from tests/reference/reference.py (direct numpy sums).
struct NormRef {
  std::uint64_t n, x;
  unsigned l;
  double paper, strict;
};
constexpr NormRef kNorms[] = {
    {15, 2, 4, 0.09525986892242036, 0.022342822038205194},
    {33, 5, 6, 0.028684326961478497, 0.0015988508722056681},
    {33, 5, 8, 0.00927441215780007, 0.0001786358688428235},
    {51, 2, 8, 0.0090744426271167, 0.0004348860664538011},
};

struct SpotRef {
  std::uint64_t c, k;
  double paper, strict;
};
constexpr SpotRef kSpots[] = {
    {0, 0, 4.14415586602441e-05, 2.79285841524677e-06},
    {77, 1, 3.582969777685525e-05, 1.689024172773068e-07},
    {26, 1, 3.3806549557351524e-06, 1.7390944720334085e-08},
    {100, 3, 8.324319080089157e-07, 1.0872758855545965e-10},
};

}  // namespace

TEST(SelectionRule, Definition) {
  EXPECT_TRUE(selection_rule(0, 0, 0, 0, 1));
  EXPECT_FALSE(selection_rule(0, 0, 0, 1, 1));
  // d = b + c - a per bit, never negative and never carrying.
  for (unsigned l = 1; l <= 3; ++l) {
    const std::uint64_t q = std::uint64_t{1} << l;
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t c = 0; c < q; ++c)
        for (std::uint64_t b = 0; b < q; ++b)
          for (std::uint64_t d = 0; d < q; ++d) {
            bool ok = true;
            for (unsigned i = 0; i < l; ++i) {
              const int di = static_cast<int>((b >> i) & 1) + static_cast<int>((c >> i) & 1) -
                             static_cast<int>((a >> i) & 1);
              ok = ok && di == static_cast<int>((d >> i) & 1);
            }
            ASSERT_EQ(selection_rule(a, c, b, d, l), ok);
            if (ok) {
              ASSERT_EQ(d + a, b + c);
            }
          }
  }
}

TEST(IntegralI, Examples) {
  const BitRegister zero(0, 1), one(1, 1);
  EXPECT_NEAR(integral_I(one, one, one, one), kPi / 3.0, 1e-15);
  EXPECT_NEAR(integral_I(zero, zero, zero, zero), kPi / 3.0, 1e-15);
  EXPECT_EQ(integral_I(zero, zero, zero, one), 0.0);
}

TEST(IntegralI, AgreesWithQuadrature) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> pick(0, 3);
  for (int t = 0; t < 200; ++t) {
    const BitRegister a(pick(rng), 2), c(pick(rng), 2), b(pick(rng), 2), d(pick(rng), 2);
    EXPECT_NEAR(integral_I(a, c, b, d), oracles::quadrature_integral_I(a, c, b, d).value, 1e-8);
  }
}

TEST(Semistate, StrictMatchesTripleSum) {
  for (const auto& [n, x, l] : {std::tuple{3u, 2u, 2u}, std::tuple{5u, 2u, 3u}, std::tuple{15u, 2u, 4u}}) {
    const auto fast = semistate(n, x, l, kStrict);
    const auto brute = oracles::brute_semistate(n, x, l);
    ASSERT_EQ(fast.amp.size(), brute.amp.size());
    for (std::size_t i = 0; i < fast.amp.size(); ++i) EXPECT_LT(std::abs(fast.amp[i] - brute.amp[i]), 1e-10);
  }
}

TEST(Semistate, PaperMatchesPerClassFormula) {
  const auto s = semistate(15, 2, 4, kPaper);
  for (std::uint64_t c = 0; c < s.q; ++c)
    for (std::uint64_t k = 0; k < s.period; ++k)
      EXPECT_LT(std::abs(s.at(c, k) - semiclassical_amplitude(c, k, s.q, s.period, EvalMode::paper_formula)), 1e-14);
}

TEST(Semistate, FrozenNorms) {
  for (const auto& r : kNorms) {
    EXPECT_NEAR(semistate(r.n, r.x, r.l, kPaper).norm(), r.paper, 1e-13 * r.paper) << r.n << " " << r.l;
    EXPECT_NEAR(semistate(r.n, r.x, r.l, kStrict).norm(), r.strict, 1e-12 * r.strict) << r.n << " " << r.l;
  }
}

TEST(Semistate, NormBelowOne) {
  for (const auto& r : kNorms) {
    EXPECT_LT(semistate(r.n, r.x, r.l, kPaper).norm(), 1.0);
    // The strict mode meets the all-phases-zero bound 1/q.
    EXPECT_LE(semistate(r.n, r.x, r.l, kStrict).norm(), std::ldexp(1.0, -static_cast<int>(r.l)));
  }
}

TEST(Semistate, Errors) {
  EXPECT_THROW(semistate(33, 3, 8), NotCoprime);
  EXPECT_THROW(semistate(33, 5, 4), InvalidArgument);
}

TEST(SemiclassicalProbability, FrozenSpots) {
  for (const auto& s : kSpots) {
    EXPECT_NEAR(semiclassical_probability(s.c, s.k, 256, 10, kPaper), s.paper, 1e-12 * s.paper);
    EXPECT_NEAR(semiclassical_probability(s.c, s.k, 256, 10, kStrict), s.strict, 1e-10 * s.strict);
  }
}

TEST(SemiclassicalProbability, CoarseGrainSwitch) {
  const SemiclassicalParams coarse{EvalMode::paper_formula, 1};
  EXPECT_DOUBLE_EQ(semiclassical_probability(77, 1, 256, 10, coarse), coarse_grained_probability(77, 1, 256, 10));
}

TEST(LeadingTerm, Definition) {
  for (std::uint64_t c = 0; c < 256; c += 5) {
    EXPECT_NEAR(leading_term(c, 1, 256, 10),
                256.0 * 256.0 * quantum::shor_probability(c, 1, 256, 10) / std::pow(9.0, 8), 1e-18);
  }
}

TEST(CoarseGrained, Factor) {
  for (const auto c : quantum::good_c_values(256, 10)) {
    EXPECT_NEAR(coarse_grained_probability(c, 1, 256, 10), 7.0 * leading_term(c, 1, 256, 10), 1e-18);
    EXPECT_GE(coarse_grained_probability(c, 1, 256, 10), leading_term(c, 1, 256, 10));
  }
}

TEST(Ratios, R1) {
  EXPECT_NEAR(ratio_R1(4), 0.039018442310623366, 1e-15);
  EXPECT_NEAR(ratio_R1(8), 1.5224388403474434e-3, 1e-15);
}

TEST(Ratios, R2Frozen) {
  const auto quantum = quantum::quantum_distribution(33, 5, 8, KMode::fixed, 1);
  EXPECT_NEAR(ratio_R2(quantum), 276566.0506684365, 1e-6 * 276566.0);
  const auto paper = semiclassical_distribution(33, 5, 8, kPaper, KMode::fixed, 1);
  EXPECT_NEAR(ratio_R2(paper), 5760.153771646464, 1e-6 * 5760.0);
  const auto strict = semiclassical_distribution(33, 5, 8, kStrict, KMode::fixed, 1);
  EXPECT_NEAR(ratio_R2(strict), 92562.98350634915, 1e-6 * 92563.0);
}

TEST(Ratios, R2Errors) {
  DistributionTable empty;
  EXPECT_THROW(ratio_R2(empty), UndefinedRatio);
}

TEST(Envelope, Htilde) {
  for (unsigned l = 1; l <= 16; ++l) {
    EXPECT_DOUBLE_EQ(htilde(0.0, l), 1.0);
    EXPECT_NEAR(htilde(kPi, l) * std::pow(9.0, l), 1.0, 1e-12);
    EXPECT_NEAR(htilde(half_width_zeta(l), l), 0.5, 1e-12);
    if (l > 1) {
      EXPECT_LT(half_width_zeta(l), half_width_zeta(l - 1));
    }
  }
  EXPECT_NEAR(htilde(kPi, 1), 1.0 / 9.0, 1e-16);
  EXPECT_NEAR(half_width_zeta(1), std::acos(-0.125), 1e-12);
  EXPECT_NEAR(half_width_zeta(1), 1.696, 1e-3);
}

TEST(Envelope, ScaledShorProbability) {
  for (std::uint64_t c = 0; c < 256; c += 17) {
    EXPECT_DOUBLE_EQ(appendixb_envelope(c, 1, 256, 10, 0.0), quantum::shor_probability(c, 1, 256, 10));
    EXPECT_NEAR(appendixb_envelope(c, 1, 256, 10, kPi), quantum::shor_probability(c, 1, 256, 10) / std::pow(9.0, 8),
                1e-20);
  }
}

TEST(Distribution, PaperTable) {
  const auto t = semiclassical_distribution(33, 5, 8, kPaper, KMode::fixed, 1);
  EXPECT_EQ(t.rows.size(), 256u);
  EXPECT_EQ(t.mode, DistributionMode::semi_paper);
  EXPECT_NEAR(t.state_norm, kNorms[2].paper, 1e-13);
  double sum = 0.0;
  for (const auto& r : t.rows) sum += r.normalized;
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_EQ(std::count_if(t.rows.begin(), t.rows.end(), [](const auto& r) { return r.is_good_c; }), 10);
}

TEST(Distribution, StrictTableMatchesOracle) {
  const auto t = semiclassical_distribution(15, 2, 4, kStrict, KMode::marginal);
  const auto brute = oracles::brute_semistate(15, 2, 4);
  for (std::uint64_t c = 0; c < 16; ++c) {
    double p = 0.0;
    for (std::uint64_t k = 0; k < brute.period; ++k) p += std::norm(brute.at(c, k));
    EXPECT_NEAR(t.rows[c].probability, p, 1e-14);
  }
}

TEST(Distribution, EnvelopeTable) {
  const auto t = envelope_distribution(33, 5, 8, 1.0, KMode::fixed, 1);
  EXPECT_EQ(t.mode, DistributionMode::envelope);
  EXPECT_NEAR(t.rows[77].probability, htilde(1.0, 8) * quantum::shor_probability(77, 1, 256, 10), 1e-18);
}

namespace {

double log_mean(const std::vector<double>& v) {
  double s = 0.0;
  for (const double x : v) s += std::log(x);
  return std::exp(s / static_cast<double>(v.size()));
}

}  // namespace

TEST(LeadingTerm, GeometricMeanWithinFactorTwo) {
  // Per peak the ratio spreads over more than a factor of 2; the geometric
  // mean over the good set does not.
  std::vector<double> ratios;
  for (const auto c : quantum::good_c_values(256, 10)) {
    ratios.push_back(semiclassical_probability(c, 1, 256, 10, kPaper) / leading_term(c, 1, 256, 10));
  }
  const double g = log_mean(ratios);
  EXPECT_GT(g, 0.5);
  EXPECT_LT(g, 2.0);
}

TEST(Envelope, ScanFindsMatchingPhase) {
  const auto good = quantum::good_c_values(256, 10);
  double best = 1e300;
  for (int t = 1; t < 400; ++t) {
    const double z = kPi * t / 400.0;
    std::vector<double> ratios;
    for (const auto c : good) {
      ratios.push_back(appendixb_envelope(c, 1, 256, 10, z) / semiclassical_probability(c, 1, 256, 10, kPaper));
    }
    const double g = log_mean(ratios);
    best = std::min(best, std::max(g, 1.0 / g));
  }
  EXPECT_LT(best, 3.0);
}
