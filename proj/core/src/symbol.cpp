#include "semishor/symbol.hpp"

#include <string>
#include <vector>

#include "semishor/errors.hpp"

namespace semishor::semiclassical {
namespace {

// prod_i z_i^{m_i} for every m < 2^l, built one bit at a time.
std::vector<Complex> monomials(std::span<const Complex> z) {
  std::vector<Complex> out(std::size_t{1} << z.size());
  out[0] = 1.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t m = 0; m < half; ++m) out[m | half] = out[m] * z[i];
  }
  return out;
}

}  // namespace

CoherentSymbol::CoherentSymbol(unsigned width, Eigen::MatrixXcd coefficients)
    : width_(width), coeffs_(std::move(coefficients)) {
  if (width > kMaxSymbolWidth) {
    throw ResourceLimit("symbol width limited to l <= " + std::to_string(kMaxSymbolWidth));
  }
  const auto q = static_cast<Eigen::Index>(1) << width;
  if (coeffs_.rows() != q || coeffs_.cols() != q) {
    throw InvalidArgument("symbol coefficients must be 2^l x 2^l");
  }
}

Complex CoherentSymbol::evaluate(std::span<const Complex> lambdas) const {
  if (lambdas.size() != width_) throw InvalidArgument("need one lambda per bit");
  std::vector<Complex> bars(lambdas.begin(), lambdas.end());
  double prefactor = 1.0;
  for (auto& z : bars) {
    prefactor /= 1.0 + std::norm(z);
    z = std::conj(z);
  }
  const auto row = monomials(bars);
  const auto col = monomials(lambdas);

  Complex sum{};
  for (Eigen::Index n = 0; n < coeffs_.rows(); ++n) {
    Complex inner{};
    for (Eigen::Index m = 0; m < coeffs_.cols(); ++m) inner += coeffs_(n, m) * col[m];
    sum += row[n] * inner;
  }
  return prefactor * sum;
}

CoherentSymbol symbol_of(const Eigen::MatrixXcd& m, unsigned l) { return CoherentSymbol(l, m); }

Eigen::MatrixXcd reconstruct(const CoherentSymbol& s) { return s.coefficients(); }

Complex symbol_trace_integral(const CoherentSymbol& s) {
  Complex sum{};
  for (Eigen::Index n = 0; n < s.coefficients().rows(); ++n) sum += s.coefficient(n, n);
  return sum;
}

}  // namespace semishor::semiclassical
