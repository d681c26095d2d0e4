#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "semishor/errors.hpp"
#include "semishor/oracles.hpp"
#include "semishor/quantum.hpp"
#include "semishor/semiclassical.hpp"
#include "semishor/symbol.hpp"

using namespace semishor;
using namespace semishor::semiclassical;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::MatrixXcd random_matrix(std::mt19937_64& rng, Eigen::Index q) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(q, q);
  for (Eigen::Index i = 0; i < q * q; ++i) m.data()[i] = {g(rng), g(rng)};
  return m;
}

std::vector<Complex> random_lambdas(std::mt19937_64& rng, unsigned l) {
  std::uniform_real_distribution<double> radius(0.0, 2.0), angle(0.0, 2.0 * kPi);
  std::vector<Complex> out(l);
  for (auto& z : out) z = std::polar(radius(rng), angle(rng));
  return out;
}

// <lambda|M|lambda> with explicit normalized product coherent vectors.
Complex direct_symbol(const Eigen::MatrixXcd& m, const std::vector<Complex>& lambdas) {
  const auto q = m.rows();
  Eigen::VectorXcd v(q);
  for (Eigen::Index n = 0; n < q; ++n) {
    Complex amp = 1.0;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const double norm = std::sqrt(1.0 + std::norm(lambdas[i]));
      amp *= (((n >> i) & 1) ? lambdas[i] : Complex(1.0)) / norm;
    }
    v(n) = amp;
  }
  return v.dot(m * v);
}

}  // namespace

TEST(GateSymbols, RExamples) {
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(r_symbol(0.0) - s), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r_symbol(1.0) - s), 0.0, 1e-15);
  // 1 + i - i - |i|^2 = 0.
  EXPECT_NEAR(std::abs(r_symbol({0.0, 1.0})), 0.0, 1e-15);
}

TEST(GateSymbols, SExamples) {
  EXPECT_NEAR(std::abs(s_symbol(0.0, 0.0, 1.3) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s_symbol(1.0, 1.0, kPi) - 0.5), 0.0, 1e-15);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const auto z = random_lambdas(rng, 2);
    EXPECT_NEAR(std::abs(s_symbol(z[0], z[1], 0.0) - 1.0), 0.0, 1e-14);
  }
}

TEST(GateSymbols, MatchSingleGateMatrices) {
  // R and S symbols are the diagonal coherent-state elements of the gates.
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd r(2, 2);
  r << s, s, s, -s;
  Eigen::MatrixXcd cs = Eigen::MatrixXcd::Identity(4, 4);
  cs(3, 3) = std::polar(1.0, 0.7);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto z = random_lambdas(rng, 2);
    EXPECT_LT(std::abs(r_symbol(z[0]) - direct_symbol(r, {z[0]})), 1e-14);
    EXPECT_LT(std::abs(s_symbol(z[0], z[1], 0.7) - direct_symbol(cs, z)), 1e-14);
  }
}

TEST(PhiSymbol, Examples) {
  const std::vector<Complex> one{0.0};
  EXPECT_NEAR(std::abs(phi_symbol(one) - r_symbol(0.0)), 0.0, 1e-15);
  const std::vector<Complex> two{0.0, 0.0};
  EXPECT_NEAR(std::abs(phi_symbol(two) - 0.5), 0.0, 1e-15);
  EXPECT_THROW(phi_symbol(std::vector<Complex>(kMaxPhiSymbolWidth + 1, 0.0)), ResourceLimit);
}

TEST(PhiSymbol, MatchesGenericSymbol) {
  std::mt19937_64 rng(3);
  for (unsigned l = 1; l <= 4; ++l) {
    const auto u = quantum::apply_gate_string(l);
    const auto s = symbol_of(u, l);
    for (int t = 0; t < 100; ++t) {
      const auto z = random_lambdas(rng, l);
      EXPECT_LT(std::abs(phi_symbol(z) - s.evaluate(z)), 1e-10);
      EXPECT_LT(std::abs(s.evaluate(z) - direct_symbol(u, z)), 1e-12);
    }
  }
}

TEST(ClassicalProduct, Examples) {
  for (unsigned l = 1; l <= 6; ++l) {
    const std::vector<Complex> zeros(l, 0.0);
    EXPECT_NEAR(std::abs(classical_phi_product(zeros) - std::pow(1.0 / std::sqrt(2.0), l)), 0.0, 1e-15);
  }
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto z = random_lambdas(rng, 1);
    EXPECT_NEAR(std::abs(classical_phi_product(z) - phi_symbol(z)), 0.0, 1e-15);
  }
  // r(1)^2 s(1, 1, pi/2) = (1/2)(3 + i)/4.
  const std::vector<Complex> ones{1.0, 1.0};
  EXPECT_NEAR(std::abs(classical_phi_product(ones) - Complex(3.0, 1.0) / 8.0), 0.0, 1e-15);
}

TEST(SymbolOf, Identity) {
  const auto s = symbol_of(Eigen::MatrixXcd::Identity(8, 8), 3);
  EXPECT_EQ(s.coefficients(), Eigen::MatrixXcd::Identity(8, 8));
  EXPECT_EQ(symbol_trace_integral(symbol_of(Eigen::MatrixXcd::Identity(4, 4), 2)), Complex(4.0, 0.0));
}

TEST(SymbolOf, TwoQubitGateProduct) {
  const Complex i{0.0, 1.0};
  Eigen::MatrixXcd printed(4, 4);
  printed << 1, 1, 1, 1, 1, -1, 1, -1, 1, i, -1, -i, 1, -i, -1, i;
  const auto s = symbol_of(quantum::apply_gate_string(2), 2);
  EXPECT_LT((s.coefficients() - printed / 2.0).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(std::abs(symbol_trace_integral(s) - Complex(-0.5, 0.5)), 1e-12);
}

TEST(SymbolOf, LosslessAndTracePreserving) {
  std::mt19937_64 rng(5);
  for (unsigned l = 1; l <= 3; ++l) {
    for (int t = 0; t < 100; ++t) {
      const auto m = random_matrix(rng, static_cast<Eigen::Index>(1) << l);
      const auto s = symbol_of(m, l);
      ASSERT_EQ(reconstruct(s), m);
      ASSERT_LT(std::abs(symbol_trace_integral(s) - m.trace()), 1e-12);
    }
  }
}

TEST(SymbolOf, TraceAgreesWithQuadrature) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 3; ++t) {
    const auto m = random_matrix(rng, 4);
    EXPECT_LT(std::abs(oracles::quadrature_trace(m, 2).value - symbol_trace_integral(symbol_of(m, 2))), 1e-6);
  }
}

TEST(SymbolOf, Validation) {
  EXPECT_THROW(symbol_of(Eigen::MatrixXcd::Identity(3, 3), 2), InvalidArgument);
  EXPECT_THROW(symbol_of(Eigen::MatrixXcd::Identity(4, 2), 2), InvalidArgument);
  const auto s = symbol_of(Eigen::MatrixXcd::Identity(4, 4), 2);
  EXPECT_THROW(s.evaluate(std::vector<Complex>(3, 0.0)), InvalidArgument);
}
