#include "semishor/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "semishor/errors.hpp"
#include "semishor/numtheory.hpp"
#include "semishor/oracles.hpp"
#include "semishor/phasespace.hpp"
#include "semishor/quantum.hpp"
#include "semishor/semiclassical.hpp"
#include "semishor/symbol.hpp"

namespace semishor::verification {
namespace {

constexpr double kPi = std::numbers::pi;

class Runner {
 public:
  Runner(std::string suite, std::optional<double> tol) : tol_(tol) { report_.suite = std::move(suite); }

  void check(std::string name, double measured, double tolerance) {
    const double t = tol_.value_or(tolerance);
    report_.checks.push_back({std::move(name), measured, t, measured <= t});
  }

  SuiteReport take() { return std::move(report_); }

 private:
  std::optional<double> tol_;
  SuiteReport report_;
};

Complex random_lambda(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.0, 2.0), angle(0.0, 2.0 * kPi);
  return std::polar(radius(rng), angle(rng));
}

Eigen::MatrixXcd random_matrix(std::mt19937_64& rng, Eigen::Index q) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(q, q);
  for (Eigen::Index i = 0; i < q; ++i) {
    for (Eigen::Index j = 0; j < q; ++j) m(i, j) = {g(rng), g(rng)};
  }
  return m;
}

Eigen::MatrixXcd two_qubit_gate_matrix() {
  const Complex b{0.0, 1.0};
  Eigen::MatrixXcd m(4, 4);
  m << 1, 1, 1, 1,
       1, -1, 1, -1,
       1, b, -1, -b,
       1, -b, -1, b;
  return m / 2.0;
}

void gates(Runner& r) {
  for (unsigned l = 1; l <= 8; ++l) {
    const auto u = quantum::apply_gate_string(l);
    const auto qft = oracles::dense_qft(l);
    const auto q = static_cast<Eigen::Index>(1) << l;
    double err = 0.0;
    for (Eigen::Index c = 0; c < q; ++c) {
      const auto row = static_cast<Eigen::Index>(numtheory::bit_reverse_bits(c, l));
      err = std::max(err, (u.row(row) - qft.row(c)).cwiseAbs().maxCoeff());
    }
    r.check("gate string vs QFT, l=" + std::to_string(l), err, 1e-12);
    const double unitarity =
        (u.adjoint() * u - Eigen::MatrixXcd::Identity(q, q)).cwiseAbs().maxCoeff();
    r.check("unitarity, l=" + std::to_string(l), unitarity, 1e-12);
    const auto count = quantum::build_gate_string(l).size();
    r.check("gate count l(l+1)/2, l=" + std::to_string(l),
            std::abs(static_cast<double>(count) - l * (l + 1) / 2.0), 0.0);
  }
}

void integrals(Runner& r) {
  const double expected[] = {1.0 / 6.0, 1.0 / 12.0, 1.0 / 6.0};
  for (unsigned m = 0; m < 3; ++m) {
    const auto v = oracles::radial_moment(2 * m);
    r.check("radial moment r^" + std::to_string(2 * m), std::abs(v.value - expected[m]), 1e-9);
  }

  double err1 = 0.0;
  double rule = 0.0;
  for (std::uint64_t t = 0; t < 16; ++t) {
    const BitRegister a(t & 1, 1), c((t >> 1) & 1, 1), b((t >> 2) & 1, 1), d((t >> 3) & 1, 1);
    const double closed = semiclassical::integral_I(a, c, b, d);
    err1 = std::max(err1, std::abs(closed - oracles::quadrature_integral_I(a, c, b, d).value));
    if (closed != 0.0 && d.value() + a.value() != b.value() + c.value()) rule += 1.0;
  }
  r.check("closed form vs quadrature, all tuples at l=1", err1, 1e-8);

  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::uint64_t> pick(0, 3);
  double err2 = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const BitRegister a(pick(rng), 2), c(pick(rng), 2), b(pick(rng), 2), d(pick(rng), 2);
    const double closed = semiclassical::integral_I(a, c, b, d);
    err2 = std::max(err2, std::abs(closed - oracles::quadrature_integral_I(a, c, b, d).value));
    if (closed != 0.0 && d.value() + a.value() != b.value() + c.value()) rule += 1.0;
  }
  r.check("closed form vs quadrature, 10^4 random tuples at l=2", err2, 1e-8);
  r.check("selection rule implies d = b + c - a (violations)", rule, 0.0);
}

void phase_space(Runner& r) {
  using namespace phasespace;
  std::mt19937_64 rng(7);
  double algebra = 0.0, antisym = 0.0, ham = 0.0, interior = 0.0, half = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto p = CoherentPoint::from_lambda(random_lambda(rng));
    const auto j = j_functions(p);
    algebra = std::max(algebra, std::abs(poisson_bracket(fields::jplus, fields::jminus, p) - 2.0 * j.j0));
    algebra = std::max(algebra, std::abs(poisson_bracket(fields::j0, fields::jplus, p) - j.jplus));
    algebra = std::max(algebra, std::abs(poisson_bracket(fields::j0, fields::jminus, p) + j.jminus));
    antisym = std::max(antisym, std::abs(poisson_bracket(fields::j0, fields::jplus, p) +
                                         poisson_bracket(fields::jplus, fields::j0, p)));
    ham = std::max(ham, std::abs(hamiltonian(p) - j.j0));

    const auto mdh = minus_dh(p);
    const auto full = interior_product(p, 1.0);
    interior = std::max({interior, std::abs(full.d_lambda - mdh.d_lambda),
                         std::abs(full.d_lambdabar - mdh.d_lambdabar)});
    const auto halved = interior_product(p, 0.5);
    half = std::max({half, std::abs(halved.d_lambda - 0.5 * mdh.d_lambda),
                     std::abs(halved.d_lambdabar - 0.5 * mdh.d_lambdabar)});
  }
  r.check("bracket algebra at 100 random points", algebra, 1e-6);
  r.check("antisymmetry", antisym, 0.0);
  r.check("H = J0", ham, 0.0);
  r.check("i_v omega = -dH with v = lambda d_lambda + c.c.", interior, 1e-6);
  r.check("i_v omega = -dH/2 with v = (lambda/2) d_lambda + c.c.", half, 1e-6);

  double j0_drift = 0.0, casimir = 0.0, rate = 0.0;
  for (int t = 0; t < 10; ++t) {
    const auto traj = evolve(CoherentPoint::from_lambda(random_lambda(rng)), 2.0 * kPi, 400);
    const double dphi = traj[1].phi - traj[0].phi;
    for (std::size_t i = 0; i < traj.size(); ++i) {
      j0_drift = std::max(j0_drift, std::abs(traj[i].spin.j0 - traj[0].spin.j0));
      casimir = std::max(casimir, std::abs(traj[i].spin.casimir() - 0.25));
      if (i > 0 && i + 1 < traj.size()) {
        const Complex d = (traj[i + 1].spin.jplus - traj[i - 1].spin.jplus) / (2.0 * dphi);
        rate = std::max(rate, std::abs(d + Complex{0.0, 1.0} * traj[i].spin.jplus));
      }
    }
  }
  r.check("J0 conserved along trajectories", j0_drift, 0.0);
  r.check("Casimir = 1/4 along trajectories", casimir, 1e-15);
  r.check("dJ+/dphi = -i J+ (dphi = pi/200)", rate, 1e-4);
}

void symbol_checks(Runner& r) {
  std::mt19937_64 rng(11);
  double round_trip = 0.0, trace = 0.0;
  for (unsigned l = 1; l <= 3; ++l) {
    for (int t = 0; t < 100; ++t) {
      const auto m = random_matrix(rng, static_cast<Eigen::Index>(1) << l);
      const auto s = semiclassical::symbol_of(m, l);
      round_trip = std::max(round_trip, (semiclassical::reconstruct(s) - m).cwiseAbs().maxCoeff());
      trace = std::max(trace, std::abs(semiclassical::symbol_trace_integral(s) - m.trace()));
    }
  }
  r.check("reconstruct(symbol_of(M)) = M, 300 random matrices", round_trip, 0.0);
  r.check("symbol trace integral = Tr M", trace, 1e-12);

  const auto phi = semiclassical::symbol_of(quantum::apply_gate_string(2), 2);
  r.check("Phi(l=2) symbol coefficients vs printed matrix",
          (phi.coefficients() - two_qubit_gate_matrix()).cwiseAbs().maxCoeff(), 1e-12);
  const Complex expected{-0.5, 0.5};
  r.check("Tr Phi = (i - 1)/2, analytic", std::abs(semiclassical::symbol_trace_integral(phi) - expected), 1e-12);
  r.check("Tr Phi = (i - 1)/2, quadrature",
          std::abs(oracles::quadrature_trace(quantum::apply_gate_string(2), 2).value - expected), 1e-6);

  double consistency = 0.0;
  for (unsigned l = 1; l <= 4; ++l) {
    const auto s = semiclassical::symbol_of(quantum::apply_gate_string(l), l);
    for (int t = 0; t < 100; ++t) {
      std::vector<Complex> lambdas(l);
      for (auto& z : lambdas) z = random_lambda(rng);
      consistency = std::max(consistency, std::abs(semiclassical::phi_symbol(lambdas) - s.evaluate(lambdas)));
    }
  }
  r.check("phi_symbol vs generic symbol of the gate product, l<=4", consistency, 1e-10);
}

void envelope_checks(Runner& r) {
  double ends = 0.0, sym = 0.0, half = 0.0, violations = 0.0;
  for (unsigned l = 1; l <= 16; ++l) {
    ends = std::max(ends, std::abs(semiclassical::htilde(0.0, l) - 1.0));
    ends = std::max(ends, std::abs(semiclassical::htilde(kPi, l) - std::pow(9.0, -static_cast<double>(l))) *
                              std::pow(9.0, l));
    for (int t = 0; t <= 32; ++t) {
      const double z = kPi * t / 16.0;
      const double h = semiclassical::htilde(z, l);
      sym = std::max({sym, std::abs(h - semiclassical::htilde(-z, l)),
                      std::abs(h - semiclassical::htilde(z + 2.0 * kPi, l))});
      if (h < std::pow(9.0, -static_cast<double>(l)) * (1 - 1e-12) || h > 1.0 + 1e-12) violations += 1.0;
    }
    const double zeta = semiclassical::half_width_zeta(l);
    half = std::max(half, std::abs(semiclassical::htilde(zeta, l) - 0.5));
    if (l > 1 && !(zeta < semiclassical::half_width_zeta(l - 1))) violations += 1.0;
  }
  r.check("htilde(0,l) = 1 and htilde(pi,l) = 9^-l (relative), l=1..16", ends, 1e-12);
  r.check("htilde symmetric and 2pi-periodic", sym, 1e-12);
  r.check("htilde within [9^-l, 1] and zeta strictly decreasing (violations)", violations, 0.0);
  r.check("htilde(zeta(l), l) = 1/2", half, 1e-12);
  r.check("zeta(1) = arccos(-1/8)", std::abs(semiclassical::half_width_zeta(1) - std::acos(-0.125)), 1e-12);
}

void oracle_shor(Runner& r) {
  std::mt19937_64 rng(99);
  double err = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const unsigned l = std::uniform_int_distribution<unsigned>(2, 12)(rng);
    const std::uint64_t q = std::uint64_t{1} << l;
    const std::uint64_t period = std::uniform_int_distribution<std::uint64_t>(1, q - 1)(rng);
    const std::uint64_t c = std::uniform_int_distribution<std::uint64_t>(0, q - 1)(rng);
    const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(0, period - 1)(rng);
    err = std::max(err, std::abs(quantum::shor_probability(c, k, q, period) -
                                 oracles::brute_shor_probability(c, k, q, period)));
  }
  r.check("closed-form P vs direct sum, 1000 random inputs", err, 1e-12);
}

void oracle_trace(Runner& r) {
  const Complex expected{-0.5, 0.5};
  r.check("quadrature trace of Phi(l=2)",
          std::abs(oracles::quadrature_trace(quantum::apply_gate_string(2), 2).value - expected), 1e-6);
  r.check("quadrature trace of identity(l=1)",
          std::abs(oracles::quadrature_trace(Eigen::MatrixXcd::Identity(2, 2), 1).value - 2.0), 1e-8);
  std::mt19937_64 rng(5);
  double err = 0.0;
  for (int t = 0; t < 10; ++t) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    m(0, 0) = std::polar(1.0, angle(rng));
    m(1, 1) = std::polar(1.0, angle(rng));
    err = std::max(err, std::abs(oracles::quadrature_trace(m, 1).value - m.trace()));
  }
  r.check("quadrature trace of random diagonal phases (l=1)", err, 1e-8);
  std::mt19937_64 rng2(6);
  double err2 = 0.0;
  for (int t = 0; t < 5; ++t) {
    const auto m = random_matrix(rng2, 4);
    err2 = std::max(err2, std::abs(oracles::quadrature_trace(m, 2).value - m.trace()));
  }
  r.check("quadrature trace of random 4x4 matrices", err2, 1e-6);
}

void oracle_semistate(Runner& r) {
  const semiclassical::SemiclassicalParams strict{semiclassical::EvalMode::strict_integral, 0};
  struct Instance { std::uint64_t n, x; unsigned l; };
  for (const auto& in : {Instance{3, 2, 2}, Instance{5, 2, 3}, Instance{15, 2, 4}, Instance{15, 7, 4}}) {
    const auto fast = semiclassical::semistate(in.n, in.x, in.l, strict);
    const auto brute = oracles::brute_semistate(in.n, in.x, in.l);
    double err = 0.0;
    for (std::size_t i = 0; i < fast.amp.size(); ++i) err = std::max(err, std::abs(fast.amp[i] - brute.amp[i]));
    r.check("strict semistate vs triple sum, N=" + std::to_string(in.n) + " x=" + std::to_string(in.x) +
                " l=" + std::to_string(in.l),
            err, 1e-10);
  }
  const auto fast = semiclassical::semistate(3, 2, 2, strict);
  const auto quad = oracles::brute_semistate(3, 2, 2, oracles::IntegralSource::quadrature);
  double err = 0.0;
  for (std::size_t i = 0; i < fast.amp.size(); ++i) err = std::max(err, std::abs(fast.amp[i] - quad.amp[i]));
  r.check("strict semistate vs quadrature-backed triple sum, N=3 x=2 l=2", err, 1e-8);

  // Paper-formula mode: FFT path vs the per-class closed form.
  const auto paper = semiclassical::semistate(33, 5, 8);
  double perr = 0.0;
  for (std::uint64_t c = 0; c < paper.q; c += 7) {
    for (std::uint64_t k = 0; k < paper.period; ++k) {
      perr = std::max(perr, std::abs(paper.at(c, k) - semiclassical::semiclassical_amplitude(
                                                          c, k, paper.q, paper.period,
                                                          semiclassical::EvalMode::paper_formula)));
    }
  }
  r.check("paper-formula semistate vs per-class closed form, N=33 x=5 l=8", perr, 1e-12);
}

using SuiteFn = std::function<void(Runner&)>;

SuiteReport run(std::string_view suite, std::optional<double> tol,
                const std::vector<std::pair<std::string, SuiteFn>>& table) {
  Runner runner(std::string(suite), tol);
  bool found = false;
  for (const auto& [name, fn] : table) {
    if (suite == "all" || suite == name) {
      fn(runner);
      found = true;
    }
  }
  if (!found) throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
  return runner.take();
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"gates", "integrals", "phasespace", "appendixa", "appendixb", "all"};
  return names;
}

const std::vector<std::string>& oracle_suites() {
  static const std::vector<std::string> names{"shor", "integrals", "trace", "semistate", "all"};
  return names;
}

SuiteReport run_verify(std::string_view suite, std::optional<double> tol) {
  return run(suite, tol,
             {{"gates", gates},
              {"integrals", integrals},
              {"phasespace", phase_space},
              {"appendixa", symbol_checks},
              {"appendixb", envelope_checks}});
}

SuiteReport run_oracle(std::string_view suite, std::optional<double> tol) {
  return run(suite, tol,
             {{"shor", oracle_shor},
              {"integrals", integrals},
              {"trace", oracle_trace},
              {"semistate", oracle_semistate}});
}

}  // namespace semishor::verification
