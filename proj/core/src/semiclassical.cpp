#include "semishor/semiclassical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "detail.hpp"
#include "semishor/errors.hpp"

namespace semishor::semiclassical {
namespace {

constexpr double kPi = std::numbers::pi;

unsigned width_of(std::uint64_t q) {
  if (q < 2 || !std::has_single_bit(q)) throw InvalidArgument("q must be a power of two >= 2");
  const auto l = static_cast<unsigned>(std::countr_zero(q));
  if (l > kMaxSemiclassicalWidth) {
    throw ResourceLimit("semiclassical evaluation limited to l <= " +
                        std::to_string(kMaxSemiclassicalWidth));
  }
  return l;
}

void check_class(std::uint64_t c_hat, std::uint64_t k, std::uint64_t q, std::uint64_t period) {
  if (period == 0 || c_hat >= q || k >= period) {
    throw InvalidArgument("need c_hat < q and k < L");
  }
}

// h(b, c) / (3^l q) indexed by HammingDistance(b, c).
std::vector<double> h_weights(unsigned l) {
  std::vector<double> w(l + 1);
  const double scale = 1.0 / (std::pow(3.0, l) * std::ldexp(1.0, static_cast<int>(l)));
  for (unsigned j = 0; j <= l; ++j) w[j] = std::ldexp(scale, static_cast<int>(l - j));
  return w;
}

// Everything a paper-mode column for one residue class needs; G[b] is the
// closed geometric sum over f of e^{-2 pi i b f L / q}.
class PaperColumn {
 public:
  PaperColumn(std::uint64_t q, std::uint64_t period, std::uint64_t k)
      : q_(q), k_(k), l_(width_of(q)), roots_(q), weights_(h_weights(l_)), g_(q) {
    const std::uint64_t mask = q - 1;
    const std::uint64_t terms = quantum::residue_class_size(k, q, period);
    for (std::uint64_t b = 0; b < q; ++b) {
      const std::uint64_t step = (b * period) & mask;
      if (step == 0) {
        g_[b] = static_cast<double>(terms);
        continue;
      }
      // (1 - w^n) / (1 - w), w = e^{-2 pi i step / q}
      const Complex w = roots_[q - step];
      const Complex wn = roots_[(q - ((step * terms) & mask)) & mask];
      g_[b] = (1.0 - wn) / (1.0 - w);
    }
  }

  Complex amplitude(std::uint64_t c) const {
    const std::uint64_t mask = q_ - 1;
    Complex sum{};
    for (std::uint64_t b = 0; b < q_; ++b) {
      const std::uint64_t phase = (b * (b + c + q_ - k_)) & mask;
      sum += weights_[std::popcount(b ^ c)] * (roots_[phase] * g_[b]);
    }
    return sum;
  }

 private:
  std::uint64_t q_, k_;
  unsigned l_;
  detail::RootsOfUnity roots_;
  std::vector<double> weights_;
  std::vector<Complex> g_;
};

// Walks every (b, a) allowed by the selection rule for output c: bits where
// b and c agree force a_i = b_i, the others leave a_i free. 3^l pairs.
template <typename Fn>
void for_each_valid_pair(std::uint64_t c, std::uint64_t q, Fn&& fn) {
  const std::uint64_t mask = q - 1;
  for (std::uint64_t b = 0; b < q; ++b) {
    const std::uint64_t free = (b ^ c) & mask;
    const std::uint64_t base = b & ~free;
    std::uint64_t s = 0;
    do {
      fn(b, base | s, free);
      s = (s - free) & free;
    } while (s != 0);
  }
}

Complex strict_amplitude(std::uint64_t c, std::uint64_t k, std::uint64_t q, std::uint64_t period,
                         const detail::RootsOfUnity& roots, const std::vector<double>& weights) {
  const std::uint64_t mask = q - 1;
  Complex sum{};
  for_each_valid_pair(c, q, [&](std::uint64_t b, std::uint64_t a, std::uint64_t free) {
    if (a % period != k) return;
    sum += weights[std::popcount(free)] * roots[(b * (b + c + q - a)) & mask];
  });
  return sum;
}

void check_instance(std::uint64_t n, unsigned l) {
  if (l < 1 || l > kMaxSemiclassicalWidth) {
    throw ResourceLimit("semiclassical evaluation limited to 1 <= l <= " +
                        std::to_string(kMaxSemiclassicalWidth));
  }
  if ((std::uint64_t{1} << l) < n) throw InvalidArgument("register too small: 2^l < N");
}

}  // namespace

std::string_view to_string(EvalMode mode) {
  return mode == EvalMode::paper_formula ? "paper-formula" : "strict-integral";
}

Complex r_symbol(Complex lambda) {
  const double u = std::norm(lambda);
  return (1.0 + lambda + std::conj(lambda) - u) / ((1.0 + u) * std::numbers::sqrt2);
}

Complex s_symbol(Complex lambda_i, Complex lambda_j, double theta) {
  const double ui = std::norm(lambda_i);
  const double uj = std::norm(lambda_j);
  return (1.0 + ui + uj + std::polar(1.0, theta) * ui * uj) / ((1.0 + ui) * (1.0 + uj));
}

Complex phi_symbol(std::span<const Complex> lambdas) {
  const auto l = static_cast<unsigned>(lambdas.size());
  if (l < 1) throw InvalidArgument("phi_symbol needs at least one lambda");
  if (l > kMaxPhiSymbolWidth) {
    throw ResourceLimit("phi_symbol limited to l <= " + std::to_string(kMaxPhiSymbolWidth));
  }
  const std::uint64_t q = std::uint64_t{1} << l;
  const detail::RootsOfUnity roots(q);

  double prefactor = 1.0 / std::sqrt(static_cast<double>(q));
  for (const auto& z : lambdas) prefactor /= 1.0 + std::norm(z);

  Complex sum{};
  for (std::uint64_t b = 0; b < q; ++b) {
    for (std::uint64_t d = 0; d < q; ++d) {
      Complex term = roots[(b * d) & (q - 1)];
      for (unsigned i = 0; i < l; ++i) {
        if ((b >> i) & 1u) term *= lambdas[i];
        if ((d >> (l - 1 - i)) & 1u) term *= std::conj(lambdas[i]);
      }
      sum += term;
    }
  }
  return prefactor * sum;
}

Complex classical_phi_product(std::span<const Complex> lambdas) {
  const auto l = static_cast<unsigned>(lambdas.size());
  if (l < 1) throw InvalidArgument("classical_phi_product needs at least one lambda");
  for (const auto& z : lambdas) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidArgument("lambda must be finite");
    }
  }
  Complex product = 1.0;
  for (const auto& gate : quantum::build_gate_string(l)) {
    if (gate.kind == quantum::GateKind::R) {
      product *= r_symbol(lambdas[gate.target]);
    } else {
      product *= s_symbol(lambdas[gate.target], lambdas[gate.control], gate.theta);
    }
  }
  return product;
}

bool selection_rule(std::uint64_t a, std::uint64_t c, std::uint64_t b, std::uint64_t d,
                    unsigned l) noexcept {
  const std::uint64_t mask = l >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << l) - 1;
  // Where b_i == c_i the sum b_i + c_i is 0 or 2, so a_i must equal b_i.
  if ((~(b ^ c) & (a ^ b) & mask) != 0) return false;
  return ((a ^ b ^ c) & mask) == (d & mask);
}

double integral_I(const BitRegister& a, const BitRegister& c, const BitRegister& b,
                  const BitRegister& d) {
  const unsigned l = a.width();
  if (c.width() != l || b.width() != l || d.width() != l) {
    throw InvalidArgument("integral_I: register widths differ");
  }
  if (!selection_rule(a.value(), c.value(), b.value(), d.value(), l)) return 0.0;
  const double h = static_cast<double>(numtheory::h_coefficient(b, c));
  return std::pow(kPi / 3.0, l) * h / std::ldexp(1.0, static_cast<int>(l));
}

Complex semiclassical_amplitude(std::uint64_t c_hat, std::uint64_t k, std::uint64_t q,
                                std::uint64_t period, EvalMode mode) {
  check_class(c_hat, k, q, period);
  if (mode == EvalMode::paper_formula) return PaperColumn(q, period, k).amplitude(c_hat);
  const unsigned l = width_of(q);
  return strict_amplitude(c_hat, k, q, period, detail::RootsOfUnity(q), h_weights(l));
}

SemistateCoefficients semistate(std::uint64_t n, std::uint64_t x, unsigned l,
                                const SemiclassicalParams& params) {
  check_instance(n, l);
  const std::uint64_t q = std::uint64_t{1} << l;
  const std::uint64_t mask = q - 1;
  const std::uint64_t period = numtheory::multiplicative_order(static_cast<std::int64_t>(x), n);
  std::vector<std::uint64_t> residues(period);
  for (std::uint64_t k = 0; k < period; ++k) {
    residues[k] = numtheory::mod_exp(static_cast<std::int64_t>(x), k, n);
  }
  SemistateCoefficients state(q, period, std::move(residues));

  const detail::RootsOfUnity roots(q);
  const auto weights = h_weights(l);
  std::vector<std::uint64_t> cls(q);
  for (std::uint64_t a = 0; a < q; ++a) cls[a] = a % period;

  if (params.mode == EvalMode::strict_integral) {
    detail::parallel_for(q, [&](std::size_t c) {
      std::vector<Complex> row(period);
      for_each_valid_pair(c, q, [&](std::uint64_t b, std::uint64_t a, std::uint64_t free) {
        row[cls[a]] += weights[std::popcount(free)] * roots[(b * (b + c + q - a)) & mask];
      });
      for (std::uint64_t k = 0; k < period; ++k) state.at(c, k) = row[k];
    });
    return state;
  }

  // Per output c, the amplitude at every a is the forward DFT over b of
  // h(b, c) e^{2 pi i b (b + c) / q}; classes then sum a = k mod L.
  detail::parallel_for(q, [&](std::size_t c) {
    Eigen::FFT<double> fft;
    std::vector<Complex> w(q), spectrum;
    for (std::uint64_t b = 0; b < q; ++b) {
      w[b] = weights[std::popcount(b ^ c)] * roots[(b * (b + c)) & mask];
    }
    fft.fwd(spectrum, w);
    std::vector<Complex> row(period);
    for (std::uint64_t a = 0; a < q; ++a) row[cls[a]] += spectrum[a];
    for (std::uint64_t k = 0; k < period; ++k) state.at(c, k) = row[k];
  });
  return state;
}

double semiclassical_probability(std::uint64_t c_hat, std::uint64_t k, std::uint64_t q,
                                 std::uint64_t period, const SemiclassicalParams& params) {
  check_class(c_hat, k, q, period);
  if (params.coarse_grain > 1) throw InvalidArgument("coarse_grain must be 0 or 1");
  if (params.coarse_grain == 1) return coarse_grained_probability(c_hat, k, q, period);
  return std::norm(semiclassical_amplitude(c_hat, k, q, period, params.mode));
}

double leading_term(std::uint64_t c_hat, std::uint64_t k, std::uint64_t q, std::uint64_t period) {
  const unsigned l = width_of(q);
  const double qd = static_cast<double>(q);
  return quantum::shor_probability(c_hat, k, q, period) * qd * qd / std::pow(9.0, l);
}

double coarse_grained_probability(std::uint64_t c_hat, std::uint64_t k, std::uint64_t q,
                                  std::uint64_t period) {
  const double l = width_of(q);
  return (1.0 + l / 4.0 + l / 2.0) * leading_term(c_hat, k, q, period);
}

double ratio_R1(unsigned l) { return std::pow(2.0 / 3.0, 2.0 * l); }

double ratio_R2(const DistributionTable& dist, double floor_rel) {
  const double peak = dist.max_probability();
  if (!(peak > 0.0)) throw UndefinedRatio("R2 of an all-zero distribution");
  double best_good = -1.0;
  double worst = peak;
  for (const auto& row : dist.rows) {
    if (row.is_good_c) best_good = std::max(best_good, row.probability);
    if (row.probability > floor_rel * peak) worst = std::min(worst, row.probability);
  }
  if (best_good <= 0.0) throw UndefinedRatio("R2 needs a nonzero good c_hat row");
  return best_good / worst;
}

double htilde(double z_hat, unsigned l) {
  if (l < 1) throw InvalidArgument("htilde needs l >= 1");
  return std::pow((5.0 + 4.0 * std::cos(z_hat)) / 9.0, l);
}

double half_width_zeta(unsigned l) {
  if (l < 1) throw InvalidArgument("half_width_zeta needs l >= 1");
  return std::acos(0.25 * (9.0 / std::exp2(1.0 / l) - 5.0));
}

double appendixb_envelope(std::uint64_t c_hat, std::uint64_t k, std::uint64_t q,
                          std::uint64_t period, double z_hat) {
  return htilde(z_hat, width_of(q)) * quantum::shor_probability(c_hat, k, q, period);
}

namespace {

DistributionTable make_table(std::uint64_t n, std::uint64_t x, unsigned l, KMode k_mode,
                             std::uint64_t k, DistributionMode mode) {
  check_instance(n, l);
  DistributionTable table;
  table.q = std::uint64_t{1} << l;
  table.n = n;
  table.x = x;
  table.period = numtheory::multiplicative_order(static_cast<std::int64_t>(x), n);
  table.k_mode = k_mode;
  table.k = k_mode == KMode::fixed ? k : 0;
  table.mode = mode;
  if (k_mode == KMode::fixed && k >= table.period) {
    throw InvalidArgument("k = " + std::to_string(k) + " is not below the period " +
                          std::to_string(table.period));
  }
  return table;
}

}  // namespace

DistributionTable semiclassical_distribution(std::uint64_t n, std::uint64_t x, unsigned l,
                                             const SemiclassicalParams& params, KMode k_mode,
                                             std::uint64_t k) {
  if (params.coarse_grain > 1) throw InvalidArgument("coarse_grain must be 0 or 1");
  auto table = make_table(n, x, l, k_mode, k,
                          params.mode == EvalMode::paper_formula ? DistributionMode::semi_paper
                                                                 : DistributionMode::semi_strict);
  const std::uint64_t q = table.q;
  const std::uint64_t period = table.period;

  const auto state = semistate(n, x, l, params);
  table.state_norm = state.norm();

  std::vector<double> probs(q);
  if (params.coarse_grain == 1) {
    detail::parallel_for(q, [&](std::size_t c) {
      if (k_mode == KMode::fixed) {
        probs[c] = coarse_grained_probability(c, k, q, period);
      } else {
        for (std::uint64_t kk = 0; kk < period; ++kk) {
          probs[c] += coarse_grained_probability(c, kk, q, period);
        }
      }
    });
  } else if (k_mode == KMode::marginal) {
    for (std::uint64_t c = 0; c < q; ++c) {
      for (std::uint64_t kk = 0; kk < period; ++kk) probs[c] += state.probability(c, kk);
    }
  } else if (params.mode == EvalMode::paper_formula) {
    const PaperColumn column(q, period, k);
    detail::parallel_for(q, [&](std::size_t c) { probs[c] = std::norm(column.amplitude(c)); });
  } else {
    for (std::uint64_t c = 0; c < q; ++c) probs[c] = state.probability(c, k);
  }
  fill_rows(table, probs);
  return table;
}

DistributionTable envelope_distribution(std::uint64_t n, std::uint64_t x, unsigned l,
                                        double z_hat, KMode k_mode, std::uint64_t k) {
  auto table = make_table(n, x, l, k_mode, k, DistributionMode::envelope);
  const std::uint64_t q = table.q;
  const std::uint64_t period = table.period;
  const double envelope = htilde(z_hat, l);
  std::vector<double> probs(q);
  for (std::uint64_t c = 0; c < q; ++c) {
    if (k_mode == KMode::fixed) {
      probs[c] = envelope * quantum::shor_probability(c, k, q, period);
    } else {
      for (std::uint64_t kk = 0; kk < period; ++kk) {
        probs[c] += envelope * quantum::shor_probability(c, kk, q, period);
      }
    }
  }
  table.state_norm = envelope;
  fill_rows(table, probs);
  return table;
}

}  // namespace semishor::semiclassical
