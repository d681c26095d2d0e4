#include "semishor/quantum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "detail.hpp"
#include "semishor/errors.hpp"

namespace semishor {

SemistateCoefficients::SemistateCoefficients(std::uint64_t q_, std::uint64_t period_,
                                             std::vector<std::uint64_t> residues_)
    : q(q_), period(period_), residues(std::move(residues_)), amp(q_ * period_) {}

double SemistateCoefficients::norm() const {
  double total = 0.0;
  for (const auto& a : amp) total += std::norm(a);
  return total;
}

namespace quantum {
namespace {

constexpr unsigned kMaxStateWidth = 16;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<detail::u128>(a) * b % q);
}

}  // namespace

Complex qft_amplitude(const BitRegister& a, const BitRegister& c) {
  if (a.width() != c.width()) throw InvalidArgument("qft_amplitude: register widths differ");
  const std::uint64_t q = a.modulus();
  const std::uint64_t phase = mulmod(a.value(), c.value(), q);
  return std::polar(1.0 / std::sqrt(static_cast<double>(q)),
                    2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(q));
}

std::vector<GateDescriptor> build_gate_string(unsigned l) {
  if (l < 1 || l > kMaxGateStringWidth) {
    throw InvalidArgument("gate string width must be in [1, " +
                          std::to_string(kMaxGateStringWidth) + "], got " + std::to_string(l));
  }
  std::vector<GateDescriptor> gates;
  gates.reserve(l * (l + 1) / 2);
  for (unsigned i = 0; i < l; ++i) {
    gates.push_back({GateKind::R, i, 0, 0.0});
    for (unsigned j = i + 1; j < l; ++j) {
      gates.push_back({GateKind::S, i, j, std::ldexp(std::numbers::pi, -static_cast<int>(j - i))});
    }
  }
  return gates;
}

void apply_gate(const GateDescriptor& gate, std::span<Complex> state) {
  const std::size_t dim = state.size();
  const std::size_t target = std::size_t{1} << gate.target;
  if (target >= dim) throw InvalidArgument("gate target outside the register");

  if (gate.kind == GateKind::R) {
    const double s = std::numbers::sqrt2 / 2.0;
    for (std::size_t idx = 0; idx < dim; ++idx) {
      if (idx & target) continue;
      const Complex v0 = state[idx];
      const Complex v1 = state[idx | target];
      state[idx] = s * (v0 + v1);
      state[idx | target] = s * (v0 - v1);
    }
    return;
  }

  const std::size_t control = std::size_t{1} << gate.control;
  if (control >= dim) throw InvalidArgument("gate control outside the register");
  const Complex phase = std::polar(1.0, gate.theta);
  const std::size_t both = target | control;
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if ((idx & both) == both) state[idx] *= phase;
  }
}

Eigen::MatrixXcd apply_gate_string(unsigned l) {
  if (l > kMaxDenseWidth) {
    throw ResourceLimit("dense gate product limited to l <= " + std::to_string(kMaxDenseWidth));
  }
  const auto gates = build_gate_string(l);
  const std::size_t q = std::size_t{1} << l;

  Eigen::MatrixXcd u(q, q);
  std::vector<Complex> column(q);
  for (std::size_t a = 0; a < q; ++a) {
    std::fill(column.begin(), column.end(), Complex{});
    column[a] = 1.0;
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) apply_gate(*it, column);
    for (std::size_t row = 0; row < q; ++row) u(row, a) = column[row];
  }
  return u;
}

SemistateCoefficients shor_state(std::uint64_t n, std::uint64_t x, unsigned l) {
  if (l < 1 || l > kMaxStateWidth) {
    throw ResourceLimit("shor_state limited to 1 <= l <= " + std::to_string(kMaxStateWidth));
  }
  const std::uint64_t q = std::uint64_t{1} << l;
  if (q < n) throw InvalidArgument("register too small: 2^l < N");

  const std::uint64_t period = numtheory::multiplicative_order(static_cast<std::int64_t>(x), n);
  std::vector<std::uint64_t> residues(period);
  for (std::uint64_t k = 0; k < period; ++k) {
    residues[k] = numtheory::mod_exp(static_cast<std::int64_t>(x), k, n);
  }

  SemistateCoefficients state(q, period, std::move(residues));
  const detail::RootsOfUnity roots(q);
  const double scale = 1.0 / static_cast<double>(q);

  detail::parallel_for(q, [&](std::size_t c) {
    const std::uint64_t step = mulmod(period, c, q);
    for (std::uint64_t k = 0; k < period; ++k) {
      Complex sum{};
      std::uint64_t phase = mulmod(k, c, q);
      for (std::uint64_t a = k; a < q; a += period) {
        sum += roots[phase];
        phase = (phase + step) & (q - 1);
      }
      state.at(c, k) = scale * sum;
    }
  });
  return state;
}

std::int64_t residue_bracket(std::uint64_t period, std::uint64_t c_hat, std::uint64_t q) {
  if (q == 0) throw InvalidArgument("residue_bracket: q must be positive");
  const std::uint64_t r = mulmod(period, c_hat, q);
  if (2 * r > q) return static_cast<std::int64_t>(r) - static_cast<std::int64_t>(q);
  return static_cast<std::int64_t>(r);
}

std::uint64_t residue_class_size(std::uint64_t k, std::uint64_t q, std::uint64_t period) {
  if (k >= q) return 0;
  return (q - k - 1) / period + 1;
}

double shor_probability(std::uint64_t c_hat, std::uint64_t k, std::uint64_t q,
                        std::uint64_t period) {
  if (period == 0 || c_hat >= q || k >= period) {
    throw InvalidArgument("shor_probability requires c_hat < q and k < L");
  }
  const double terms = static_cast<double>(residue_class_size(k, q, period));
  const double qd = static_cast<double>(q);
  const std::int64_t r = residue_bracket(period, c_hat, q);
  if (r == 0) return (terms / qd) * (terms / qd);

  // |sum_{f<n} e^{i f theta}| = |sin(n theta / 2) / sin(theta / 2)|
  const double half_theta = std::numbers::pi * static_cast<double>(r) / qd;
  const double ratio = std::sin(terms * half_theta) / std::sin(half_theta);
  return ratio * ratio / (qd * qd);
}

std::vector<std::uint64_t> good_c_values(std::uint64_t q, std::uint64_t period) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 0; c < q; ++c) {
    const std::int64_t r = residue_bracket(period, c, q);
    if (2 * std::abs(r) < static_cast<std::int64_t>(period)) out.push_back(c);
  }
  return out;
}

double probability_lower_bound(std::uint64_t period) {
  const double l = static_cast<double>(period);
  return 4.0 / (std::numbers::pi * std::numbers::pi * l * l);
}

DistributionTable quantum_distribution(std::uint64_t n, std::uint64_t x, unsigned l, KMode k_mode,
                                       std::uint64_t k) {
  if (l < 1 || l > BitRegister::kMaxWidth) throw InvalidArgument("invalid register width");
  const std::uint64_t q = std::uint64_t{1} << l;
  if (q < n) throw InvalidArgument("register too small: 2^l < N");
  const std::uint64_t period = numtheory::multiplicative_order(static_cast<std::int64_t>(x), n);
  if (k_mode == KMode::fixed && k >= period) {
    throw InvalidArgument("k = " + std::to_string(k) + " is not below the period " +
                          std::to_string(period));
  }

  DistributionTable table;
  table.q = q;
  table.n = n;
  table.x = x;
  table.period = period;
  table.k_mode = k_mode;
  table.k = k_mode == KMode::fixed ? k : 0;
  table.mode = DistributionMode::quantum;
  table.state_norm = 1.0;

  std::vector<double> probs(q);
  detail::parallel_for(q, [&](std::size_t c) {
    if (k_mode == KMode::fixed) {
      probs[c] = shor_probability(c, k, q, period);
    } else {
      double sum = 0.0;
      for (std::uint64_t kk = 0; kk < period; ++kk) sum += shor_probability(c, kk, q, period);
      probs[c] = sum;
    }
  });
  fill_rows(table, probs);
  return table;
}

}  // namespace quantum
}  // namespace semishor
