#include "semishor/phasespace.hpp"

#include <cmath>
#include <numbers>

#include "semishor/errors.hpp"

namespace semishor::phasespace {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double phi) {
  double out = std::fmod(phi, kTwoPi);
  if (out < 0.0) out += kTwoPi;
  if (out >= kTwoPi) out = 0.0;
  return out;
}

Complex finite(Complex value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw InvalidArgument("field evaluated to a non-finite value");
  }
  return value;
}

}  // namespace

CoherentPoint CoherentPoint::from_lambda(Complex lambda) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
    throw InvalidArgument("lambda must be finite");
  }
  const double r = std::abs(lambda);
  if (r > kMaxModulus) throw InvalidArgument("|lambda| exceeds the stereographic chart limit 1e8");
  return CoherentPoint(lambda, r, reduce_angle(std::arg(lambda)));
}

CoherentPoint CoherentPoint::from_polar(double r, double phi) {
  if (!std::isfinite(r) || !std::isfinite(phi) || r < 0.0) {
    throw InvalidArgument("polar coordinates must be finite with r >= 0");
  }
  if (r > kMaxModulus) throw InvalidArgument("|lambda| exceeds the stereographic chart limit 1e8");
  const double angle = reduce_angle(phi);
  return CoherentPoint(std::polar(r, angle), r, angle);
}

SpinTriple j_functions(const CoherentPoint& p) {
  const double u = p.r2();
  const double inv = 1.0 / (1.0 + u);
  return {-0.5 * (1.0 - u) * inv, std::conj(p.lambda()) * inv, p.lambda() * inv};
}

double symplectic_density(const CoherentPoint& p) {
  const double w = 1.0 + p.r2();
  return 1.0 / (w * w);
}

double hamiltonian(const CoherentPoint& p) {
  const double u = p.r2();
  return -0.5 * (1.0 - u) * (1.0 / (1.0 + u));
}

namespace fields {

Complex j0(Complex lambda) {
  const double u = std::norm(lambda);
  return -0.5 * (1.0 - u) / (1.0 + u);
}

Complex jplus(Complex lambda) { return std::conj(lambda) / (1.0 + std::norm(lambda)); }

Complex jminus(Complex lambda) { return lambda / (1.0 + std::norm(lambda)); }

Complex hamiltonian(Complex lambda) { return j0(lambda); }

}  // namespace fields

Wirtinger wirtinger(const ScalarField& f, Complex lambda, double step) {
  const Complex dx = (finite(f(lambda + step)) - finite(f(lambda - step))) / (2.0 * step);
  const Complex iy{0.0, step};
  const Complex dy = (finite(f(lambda + iy)) - finite(f(lambda - iy))) / (2.0 * step);
  const Complex i{0.0, 1.0};
  return {0.5 * (dx - i * dy), 0.5 * (dx + i * dy)};
}

Complex poisson_bracket(const ScalarField& f, const ScalarField& g, const CoherentPoint& p,
                        double step) {
  if (!(step >= kMinBracketStep && step <= kMaxBracketStep)) {
    throw InvalidArgument("bracket step must lie in [1e-7, 1e-3]");
  }
  const Wirtinger df = wirtinger(f, p.lambda(), step);
  const Wirtinger dg = wirtinger(g, p.lambda(), step);
  const double w = 1.0 + p.r2();
  return w * w * (df.d_lambda * dg.d_lambdabar - df.d_lambdabar * dg.d_lambda);
}

OneForm interior_product(const CoherentPoint& p, Complex c) {
  const double rho = symplectic_density(p);
  const Complex v = c * p.lambda();
  const Complex vbar = c * std::conj(p.lambda());
  // i_v (rho dl ^ dlbar) = v^l rho dlbar - v^lbar rho dl, written with
  // omega_{lbar l} = -rho on the dl component.
  return {vbar * (-rho), -v * rho};
}

OneForm minus_dh(const CoherentPoint& p, double step) {
  const Wirtinger dh = wirtinger(fields::hamiltonian, p.lambda(), step);
  return {-dh.d_lambda, -dh.d_lambdabar};
}

std::vector<TrajectoryPoint> evolve(const CoherentPoint& p0, double phi_total, unsigned steps) {
  if (steps < 1) throw InvalidArgument("evolve needs at least one step");
  if (!std::isfinite(phi_total)) throw InvalidArgument("phi_total must be finite");

  std::vector<TrajectoryPoint> out;
  out.reserve(steps + 1);
  for (unsigned i = 0; i <= steps; ++i) {
    const double phi = phi_total * static_cast<double>(i) / static_cast<double>(steps);
    const CoherentPoint p = i == 0 ? p0 : CoherentPoint::from_polar(p0.r(), p0.phi() + phi);
    out.push_back({i, phi, p, j_functions(p)});
  }
  return out;
}

}  // namespace semishor::phasespace
