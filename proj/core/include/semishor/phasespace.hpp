#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace semishor {

using Complex = std::complex<double>;

namespace phasespace {

/// A point of the spin-1/2 coherent-state phase space, in the stereographic
/// chart lambda = r e^{i phi}. The polar pair is stored alongside lambda so
/// that functions of |lambda| stay exactly constant under phase rotation.
class CoherentPoint {
 public:
  /// Points with |lambda| above this are outside the chart.
  static constexpr double kMaxModulus = 1e8;

  CoherentPoint() = default;
  static CoherentPoint from_lambda(Complex lambda);
  /// phi is reduced to [0, 2 pi).
  static CoherentPoint from_polar(double r, double phi);

  Complex lambda() const noexcept { return lambda_; }
  double r() const noexcept { return r_; }
  double phi() const noexcept { return phi_; }
  /// |lambda|^2 computed from the stored radius.
  double r2() const noexcept { return r_ * r_; }

 private:
  CoherentPoint(Complex lambda, double r, double phi) : lambda_(lambda), r_(r), phi_(phi) {}

  Complex lambda_{};
  double r_ = 0.0;
  double phi_ = 0.0;
};

struct SpinTriple {
  double j0 = 0.0;
  Complex jplus{};
  Complex jminus{};

  /// J+ J- + J0^2, which is j^2 = 1/4 for spin 1/2.
  double casimir() const { return (jplus * jminus).real() + j0 * j0; }
};

/// J0 = -(1/2)(1 - |l|^2)/(1 + |l|^2), J+ = conj(l)/(1 + |l|^2), J- = l/(1 + |l|^2).
SpinTriple j_functions(const CoherentPoint& p);

/// (1 + |lambda|^2)^{-2}
double symplectic_density(const CoherentPoint& p);

/// -(1/2)(1 - l conj(l))/(1 + l conj(l)); identical to j_functions(p).j0.
double hamiltonian(const CoherentPoint& p);

/// A complex-valued function of (lambda, conj(lambda)), given lambda.
using ScalarField = std::function<Complex(Complex)>;

namespace fields {
Complex j0(Complex lambda);
Complex jplus(Complex lambda);
Complex jminus(Complex lambda);
Complex hamiltonian(Complex lambda);
}  // namespace fields

struct Wirtinger {
  Complex d_lambda;     // (d_x - i d_y) / 2
  Complex d_lambdabar;  // (d_x + i d_y) / 2
};

/// Central differences of f along the real and imaginary directions.
Wirtinger wirtinger(const ScalarField& f, Complex lambda, double step);

inline constexpr double kMinBracketStep = 1e-7;
inline constexpr double kMaxBracketStep = 1e-3;

/// {f, g} = (1 + |l|^2)^2 (d_l f d_lbar g - d_lbar f d_l g).
///
/// The sign convention is the one under which {J+, J-} = 2 J0 and
/// {J0, J+-} = +-J+-. Exactly antisymmetric. Throws InvalidArgument for a
/// step outside [1e-7, 1e-3] or a non-finite field value.
Complex poisson_bracket(const ScalarField& f, const ScalarField& g, const CoherentPoint& p,
                        double step = 1e-5);

/// Components of a one-form a dl + b dlbar.
struct OneForm {
  Complex d_lambda;
  Complex d_lambdabar;
};

/// i_v omega for v = C lambda d_l + C conj(lambda) d_lbar, using
/// omega_{l lbar} = -omega_{lbar l} = (1 + |l|^2)^{-2}.
OneForm interior_product(const CoherentPoint& p, Complex c);

/// -dH by finite differences of the Hamiltonian field.
OneForm minus_dh(const CoherentPoint& p, double step = 1e-5);

struct TrajectoryPoint {
  unsigned step = 0;
  double phi = 0.0;  // accumulated flow parameter
  CoherentPoint point;
  SpinTriple spin;
};

/// Precession lambda(phi) = lambda_0 e^{i phi} sampled at phi_i = phi_total i / steps,
/// i = 0..steps. The radius is carried unchanged, so J0 and |lambda| are
/// exactly conserved. Throws InvalidArgument when steps < 1.
std::vector<TrajectoryPoint> evolve(const CoherentPoint& p0, double phi_total, unsigned steps);

}  // namespace phasespace
}  // namespace semishor
