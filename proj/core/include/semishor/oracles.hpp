#pragma once

// Brute-force references. Nothing here calls into the closed forms of the
// quantum or semiclassical modules.

#include <complex>
#include <cstdint>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "semishor/numtheory.hpp"
#include "semishor/quantum.hpp"

namespace semishor::oracles {

/// Points per mode: angular trapezoid nodes and radial Gauss-Legendre nodes.
/// The radial count is rounded up to whole 32-point panels.
struct QuadratureGrid {
  unsigned angular = 2048;
  unsigned radial = 2048;
};

/// error_estimate is |value(grid) - value(grid with half the radial panels)|
/// plus any imaginary residue for real integrals. certified is false (and
/// warning set) when that estimate exceeds the requested tolerance.
struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool certified = true;
  std::string warning;
};

struct ComplexQuadratureResult {
  Complex value{};
  double error_estimate = 0.0;
  bool certified = true;
  std::string warning;
};

/// integral over [lo, hi] of f using `panels` equal panels of the 32-point
/// Gauss-Legendre rule.
double composite_gauss_legendre(const std::function<double(double)>& f, double lo, double hi,
                                unsigned panels);

/// integral_0^inf r^s r dr / (1 + r^2)^4, evaluated on r(u) = sqrt(u / (1 - u)).
QuadratureResult radial_moment(unsigned s, const QuadratureGrid& grid = {}, double tol = 1e-9);

/// prod_i [integral r^{(c_i+a_i)+(b_i+d_i)} r dr / (1 + r^2)^4]
///        [integral_0^{2 pi} e^{i((c_i - a_i) + (b_i - d_i)) phi} dphi]
/// by quadrature in every mode. Throws ResourceLimit above l = 2.
QuadratureResult quadrature_integral_I(const BitRegister& a, const BitRegister& c,
                                       const BitRegister& b, const BitRegister& d,
                                       const QuadratureGrid& grid = {}, double tol = 1e-9);

/// integral d mu(lambda) <lambda|M|lambda> on a tensor grid, with the
/// normalized coherent vector built explicitly at every node. l <= 2.
ComplexQuadratureResult quadrature_trace(const Eigen::MatrixXcd& m, unsigned l,
                                         const QuadratureGrid& grid = {16, 64},
                                         double tol = 1e-6);

inline constexpr std::uint64_t kMaxBruteQ = std::uint64_t{1} << 16;

/// |(1/q) sum_{a = k mod L, a < q} e^{2 pi i a c / q}|^2 term by term.
double brute_shor_probability(std::uint64_t c_hat, std::uint64_t k, std::uint64_t q,
                              std::uint64_t period);

enum class IntegralSource { closed_form, quadrature };

/// (1/pi^l) sum_{a = k mod L} sum_{b,d} e^{2 pi i b d / q} I(a, c, b, d) with
/// every term evaluated. The quadrature source is limited to l <= 2, the
/// closed form to l <= 4.
SemistateCoefficients brute_semistate(std::uint64_t n, std::uint64_t x, unsigned l,
                                      IntegralSource source = IntegralSource::closed_form);

/// prod_i (1 + delta_{b_i c_i}) as a literal product.
std::uint64_t literal_h_coefficient(std::uint64_t b, std::uint64_t c, unsigned l);

/// q^{-1/2} e^{2 pi i a c / q} at (row c, column a).
Eigen::MatrixXcd dense_qft(unsigned l);

}  // namespace semishor::oracles
