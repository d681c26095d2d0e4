#pragma once

#include <complex>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

namespace semishor {

using Complex = std::complex<double>;

namespace semiclassical {

/// The diagonal coherent-state symbol <lambda|M|lambda> of a 2^l x 2^l
/// matrix, kept as its coefficient tensor:
///
///   M^lambda = Lambda sum_{n,m} M_nm prod_i conj(lambda_i)^{n_i} lambda_i^{m_i},
///   Lambda = prod_i (1 + |lambda_i|^2)^{-1}.
///
/// Row bits n carry the conj(lambda) powers, column bits m the lambda powers.
/// Lambda is a convention of evaluate(), never folded into the coefficients.
class CoherentSymbol {
 public:
  CoherentSymbol(unsigned width, Eigen::MatrixXcd coefficients);

  unsigned width() const noexcept { return width_; }
  const Eigen::MatrixXcd& coefficients() const noexcept { return coeffs_; }
  Complex coefficient(std::uint64_t n, std::uint64_t m) const { return coeffs_(n, m); }

  /// The symbol at lambda_0..lambda_{l-1}.
  Complex evaluate(std::span<const Complex> lambdas) const;

 private:
  unsigned width_;
  Eigen::MatrixXcd coeffs_;
};

inline constexpr unsigned kMaxSymbolWidth = 10;

/// Throws InvalidArgument unless m is 2^l x 2^l.
CoherentSymbol symbol_of(const Eigen::MatrixXcd& m, unsigned l);

/// Exact inverse of symbol_of.
Eigen::MatrixXcd reconstruct(const CoherentSymbol& s);

/// integral d mu(lambda) M^lambda = sum_n M_nn: each diagonal monomial
/// |lambda_i|^{2 n_i} (1 + |lambda_i|^2)^{-1} integrates to one per mode and
/// every off-diagonal monomial has a vanishing angular integral.
Complex symbol_trace_integral(const CoherentSymbol& s);

}  // namespace semiclassical
}  // namespace semishor
