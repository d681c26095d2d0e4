#include "semishor/oracles.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <numbers>
#include <string>
#include <tuple>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "semishor/errors.hpp"

namespace semishor::oracles {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr unsigned kPanelPoints = 32;

unsigned panels_for(unsigned radial) { return std::max(1u, (radial + kPanelPoints - 1) / kPanelPoints); }

// integral_0^{2 pi} e^{i m phi} dphi by the trapezoid rule on n nodes.
Complex angular_trapezoid(int m, unsigned n) {
  Complex sum{};
  for (unsigned j = 0; j < n; ++j) {
    sum += std::polar(1.0, m * 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n));
  }
  return sum * (2.0 * kPi / static_cast<double>(n));
}

double radial_value(unsigned s, unsigned panels) {
  // r dr = du / (2 (1 - u)^2) with u = r^2 / (1 + r^2); the r-integrand is
  // evaluated as written at r(u).
  return composite_gauss_legendre(
      [s](double u) {
        const double r = std::sqrt(u / (1.0 - u));
        const double w = 1.0 + r * r;
        return std::pow(r, s) / (w * w * w * w) / (2.0 * (1.0 - u) * (1.0 - u));
      },
      0.0, 1.0, panels);
}

// Exact per-mode integrals, from the Beta function.
double exact_radial(unsigned s) {
  const double half = 0.5 * s;
  return 0.5 * std::tgamma(half + 1.0) * std::tgamma(3.0 - half) / std::tgamma(4.0);
}

int bit(std::uint64_t v, unsigned i) { return static_cast<int>((v >> i) & 1u); }

void mark(QuadratureResult& r, double tol) {
  if (r.error_estimate > tol) {
    r.certified = false;
    r.warning = "quadrature error estimate " + std::to_string(r.error_estimate) +
                " exceeds tolerance " + std::to_string(tol) + "; refine the grid";
  }
}

}  // namespace

double composite_gauss_legendre(const std::function<double(double)>& f, double lo, double hi,
                                unsigned panels) {
  if (panels < 1) throw InvalidArgument("need at least one panel");
  using rule = boost::math::quadrature::gauss<double, kPanelPoints>;
  const double width = (hi - lo) / panels;
  double total = 0.0;
  for (unsigned p = 0; p < panels; ++p) {
    const double a = lo + p * width;
    total += rule::integrate(f, a, a + width);
  }
  return total;
}

QuadratureResult radial_moment(unsigned s, const QuadratureGrid& grid, double tol) {
  if (s > 4) throw InvalidArgument("radial moments are defined here for s <= 4");
  const unsigned panels = panels_for(grid.radial);
  QuadratureResult r;
  r.value = radial_value(s, panels);
  r.error_estimate = panels > 1 ? std::abs(r.value - radial_value(s, panels / 2)) : 0.0;
  mark(r, tol);
  return r;
}

QuadratureResult quadrature_integral_I(const BitRegister& a, const BitRegister& c,
                                       const BitRegister& b, const BitRegister& d,
                                       const QuadratureGrid& grid, double tol) {
  const unsigned l = a.width();
  if (c.width() != l || b.width() != l || d.width() != l) {
    throw InvalidArgument("quadrature_integral_I: register widths differ");
  }
  if (l > 2) throw ResourceLimit("quadrature_integral_I is limited to l <= 2");
  const unsigned panels = panels_for(grid.radial);

  Complex fine = 1.0;
  Complex coarse = 1.0;
  for (unsigned i = 0; i < l; ++i) {
    const auto s = static_cast<unsigned>(bit(c.value(), i) + bit(a.value(), i) +
                                         bit(b.value(), i) + bit(d.value(), i));
    const int m = (bit(c.value(), i) - bit(a.value(), i)) + (bit(b.value(), i) - bit(d.value(), i));
    const Complex angular = angular_trapezoid(m, grid.angular);
    fine *= angular * radial_value(s, panels);
    coarse *= angular * radial_value(s, panels > 1 ? panels / 2 : panels);
  }
  QuadratureResult r;
  r.value = fine.real();
  r.error_estimate = std::abs(fine - coarse) + std::abs(fine.imag());
  mark(r, tol);
  return r;
}

ComplexQuadratureResult quadrature_trace(const Eigen::MatrixXcd& m, unsigned l,
                                         const QuadratureGrid& grid, double tol) {
  if (l < 1 || l > 2) throw ResourceLimit("quadrature_trace is limited to 1 <= l <= 2");
  const auto q = static_cast<Eigen::Index>(1) << l;
  if (m.rows() != q || m.cols() != q) throw InvalidArgument("matrix must be 2^l x 2^l");

  auto integrate = [&](unsigned panels) {
    using rule = boost::math::quadrature::gauss<double, kPanelPoints>;
    // One-mode nodes: (lambda, weight) with the measure
    // (2/pi) dphi r dr / (1 + r^2)^2 folded into the weight.
    std::vector<std::pair<Complex, double>> nodes;
    const double width = 1.0 / panels;
    const auto& abscissa = rule::abscissa();
    const auto& weights = rule::weights();
    for (unsigned p = 0; p < panels; ++p) {
      const double mid = (p + 0.5) * width;
      for (std::size_t j = 0; j < abscissa.size(); ++j) {
        for (int sign : {1, -1}) {
          if (j == 0 && sign == -1 && abscissa[0] == 0.0) continue;
          const double u = mid + sign * abscissa[j] * width / 2;
          const double wu = weights[j] * width / 2;
          const double r = std::sqrt(u / (1.0 - u));
          const double w = 1.0 + r * r;
          const double radial = wu * r / (w * w) / (2.0 * r * (1.0 - u) * (1.0 - u));
          for (unsigned t = 0; t < grid.angular; ++t) {
            const double phi = 2.0 * kPi * t / grid.angular;
            nodes.push_back({std::polar(r, phi), (2.0 / kPi) * radial * (2.0 * kPi / grid.angular)});
          }
        }
      }
    }

    Complex total{};
    Eigen::VectorXcd v(q);
    std::vector<std::size_t> idx(l, 0);
    const std::size_t count = nodes.size();
    std::size_t combos = 1;
    for (unsigned i = 0; i < l; ++i) combos *= count;
    for (std::size_t flat = 0; flat < combos; ++flat) {
      std::size_t rest = flat;
      double weight = 1.0;
      for (unsigned i = 0; i < l; ++i) {
        idx[i] = rest % count;
        rest /= count;
        weight *= nodes[idx[i]].second;
      }
      for (Eigen::Index s = 0; s < q; ++s) {
        Complex amp = 1.0;
        for (unsigned i = 0; i < l; ++i) {
          const Complex z = nodes[idx[i]].first;
          amp *= ((s >> i) & 1 ? z : Complex{1.0}) / std::sqrt(1.0 + std::norm(z));
        }
        v(s) = amp;
      }
      total += weight * v.dot(m * v);  // dot conjugates its left operand
    }
    return total;
  };

  const unsigned panels = panels_for(grid.radial);
  ComplexQuadratureResult r;
  r.value = integrate(panels);
  r.error_estimate = panels > 1 ? std::abs(r.value - integrate(panels / 2)) : 0.0;
  if (r.error_estimate > tol) {
    r.certified = false;
    r.warning = "quadrature error estimate exceeds tolerance; refine the grid";
  }
  return r;
}

double brute_shor_probability(std::uint64_t c_hat, std::uint64_t k, std::uint64_t q,
                              std::uint64_t period) {
  if (q > kMaxBruteQ) throw ResourceLimit("brute_shor_probability is limited to q <= 2^16");
  if (period == 0 || c_hat >= q || k >= period) throw InvalidArgument("need c_hat < q, k < L");
  Complex sum{};
  for (std::uint64_t a = k; a < q; a += period) {
    sum += std::polar(1.0, 2.0 * kPi * static_cast<double>((a * c_hat) % q) / static_cast<double>(q));
  }
  return std::norm(sum / static_cast<double>(q));
}

SemistateCoefficients brute_semistate(std::uint64_t n, std::uint64_t x, unsigned l,
                                      IntegralSource source) {
  if (l < 1 || l > 4) throw ResourceLimit("brute_semistate is limited to 1 <= l <= 4");
  if (source == IntegralSource::quadrature && l > 2) {
    throw ResourceLimit("quadrature-backed brute_semistate is limited to l <= 2");
  }
  const std::uint64_t q = std::uint64_t{1} << l;
  if (q < n) throw InvalidArgument("register too small: 2^l < N");

  std::uint64_t period = 1;
  for (std::uint64_t v = numtheory::mod_exp(static_cast<std::int64_t>(x), 1, n); v != 1;
       v = v * (x % n) % n) {
    ++period;
    if (period > n) throw NotCoprime(x % n, n, std::gcd(x % n, n));
  }
  std::vector<std::uint64_t> residues(period);
  for (std::uint64_t k = 0; k < period; ++k) residues[k] = numtheory::mod_exp(static_cast<std::int64_t>(x), k, n);
  SemistateCoefficients state(q, period, std::move(residues));

  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>, double> cache;
  auto integral = [&](std::uint64_t a, std::uint64_t c, std::uint64_t b, std::uint64_t d) {
    if (source == IntegralSource::quadrature) {
      auto key = std::make_tuple(a, c, b, d);
      if (auto it = cache.find(key); it != cache.end()) return it->second;
      const double v = quadrature_integral_I(BitRegister(a, l), BitRegister(c, l),
                                             BitRegister(b, l), BitRegister(d, l))
                           .value;
      cache.emplace(key, v);
      return v;
    }
    double prod = 1.0;
    for (unsigned i = 0; i < l; ++i) {
      const int m = (bit(c, i) - bit(a, i)) + (bit(b, i) - bit(d, i));
      if (m != 0) return 0.0;
      prod *= 2.0 * kPi * exact_radial(static_cast<unsigned>(bit(c, i) + bit(a, i) + bit(b, i) + bit(d, i)));
    }
    return prod;
  };

  const double scale = 1.0 / std::pow(kPi, l);
  for (std::uint64_t c = 0; c < q; ++c) {
    for (std::uint64_t a = 0; a < q; ++a) {
      Complex sum{};
      for (std::uint64_t b = 0; b < q; ++b) {
        for (std::uint64_t d = 0; d < q; ++d) {
          const double v = integral(a, c, b, d);
          if (v != 0.0) sum += std::polar(v, 2.0 * kPi * static_cast<double>((b * d) % q) / q);
        }
      }
      state.at(c, a % period) += scale * sum;
    }
  }
  return state;
}

std::uint64_t literal_h_coefficient(std::uint64_t b, std::uint64_t c, unsigned l) {
  std::uint64_t h = 1;
  for (unsigned i = 0; i < l; ++i) h *= 1 + (bit(b, i) == bit(c, i) ? 1 : 0);
  return h;
}

Eigen::MatrixXcd dense_qft(unsigned l) {
  if (l > 12) throw ResourceLimit("dense_qft is limited to l <= 12");
  const std::uint64_t q = std::uint64_t{1} << l;
  Eigen::MatrixXcd out(q, q);
  const double norm = 1.0 / std::sqrt(static_cast<double>(q));
  for (std::uint64_t c = 0; c < q; ++c) {
    for (std::uint64_t a = 0; a < q; ++a) {
      out(c, a) = std::polar(norm, 2.0 * kPi * static_cast<double>((a * c) % q) / static_cast<double>(q));
    }
  }
  return out;
}

}  // namespace semishor::oracles
