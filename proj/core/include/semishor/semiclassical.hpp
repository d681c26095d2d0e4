#pragma once

#include <complex>
#include <cstdint>
#include <span>

#include "semishor/distribution.hpp"
#include "semishor/numtheory.hpp"
#include "semishor/quantum.hpp"

namespace semishor::semiclassical {

/// paper_formula sums over every b with the integer phase b (b + c - a);
/// strict_integral keeps only the b allowed by the per-bit selection rule
/// of the coherent-state integrals.
enum class EvalMode { paper_formula, strict_integral };

std::string_view to_string(EvalMode mode);

struct SemiclassicalParams {
  EvalMode mode = EvalMode::paper_formula;
  /// 0: full sum. 1: the printed +-1 coarse-grained approximation.
  unsigned coarse_grain = 0;
};

/// Symbol of the Hadamard: (1 + l + conj(l) - |l|^2) / ((1 + |l|^2) sqrt 2).
Complex r_symbol(Complex lambda);

/// Symbol of the controlled phase:
/// (1 + |li|^2 + |lj|^2 + e^{i theta} |li|^2 |lj|^2) / ((1 + |li|^2)(1 + |lj|^2)).
Complex s_symbol(Complex lambda_i, Complex lambda_j, double theta);

inline constexpr unsigned kMaxPhiSymbolWidth = 8;

/// q^{-1/2} Lambda sum_{b,d} e^{2 pi i b d / q} prod_i lambda_i^{b_i} conj(lambda_i)^{d_{l-1-i}},
/// summed term by term. Throws ResourceLimit above l = 8.
Complex phi_symbol(std::span<const Complex> lambdas);

/// Product of the R and S symbols in gate-string order. Not the symbol of
/// the gate product.
Complex classical_phi_product(std::span<const Complex> lambdas);

/// True when d_i = b_i + c_i - a_i lies in {0, 1} for every bit i.
bool selection_rule(std::uint64_t a, std::uint64_t c, std::uint64_t b, std::uint64_t d,
                    unsigned l) noexcept;

/// Closed form of the coherent-state integral over all modes:
/// pi^l h(b, c) / (q 3^l) when the selection rule holds, else 0.
double integral_I(const BitRegister& a, const BitRegister& c, const BitRegister& b,
                  const BitRegister& d);

inline constexpr unsigned kMaxSemiclassicalWidth = 20;

/// Amplitude <c, x^k|S'> for residue class k.
///   paper:  (1/(3^l q)) sum_b h(b,c) e^{2 pi i b (b + c - k)/q} sum_f e^{-2 pi i b f L/q}
///   strict: (1/(3^l q)) sum_{a = k mod L} sum_{b valid} h(b,c) e^{2 pi i b (b + c - a)/q}
Complex semiclassical_amplitude(std::uint64_t c_hat, std::uint64_t k, std::uint64_t q,
                                std::uint64_t period, EvalMode mode);

/// The modified state |S'> for every (c, k). Throws NotCoprime and
/// InvalidArgument when 2^l < N.
SemistateCoefficients semistate(std::uint64_t n, std::uint64_t x, unsigned l,
                                const SemiclassicalParams& params = {});

/// |semiclassical_amplitude|^2, or the coarse-grained approximation when
/// params.coarse_grain == 1.
double semiclassical_probability(std::uint64_t c_hat, std::uint64_t k, std::uint64_t q,
                                 std::uint64_t period, const SemiclassicalParams& params = {});

/// 9^{-l} |sum_f e^{2 pi i f {L c}_q / q}|^2, i.e. (q^2 / 9^l) P.
double leading_term(std::uint64_t c_hat, std::uint64_t k, std::uint64_t q, std::uint64_t period);

/// (1 + l/4 + l/2) leading_term.
double coarse_grained_probability(std::uint64_t c_hat, std::uint64_t k, std::uint64_t q,
                                  std::uint64_t period);

/// (2/3)^{2l}
double ratio_R1(unsigned l);

/// Largest probability over the good c_hat divided by the smallest row that
/// is nonzero, where nonzero means above floor_rel times the column maximum.
/// Throws UndefinedRatio for an all-zero column or an empty good set.
double ratio_R2(const DistributionTable& dist, double floor_rel = 1e-12);

/// 9^{-l} (5 + 4 cos z)^l
double htilde(double z_hat, unsigned l);

/// zeta(l) = arccos((9 / 2^{1/l} - 5) / 4), the z_hat where htilde falls to 1/2.
double half_width_zeta(unsigned l);

/// htilde(z_hat, log2 q) P(c_hat, k).
double appendixb_envelope(std::uint64_t c_hat, std::uint64_t k, std::uint64_t q,
                          std::uint64_t period, double z_hat);

/// Distribution table of the semiclassical probability. state_norm is the
/// computed <S'|S'>; normalized rows are that probability over the column.
DistributionTable semiclassical_distribution(std::uint64_t n, std::uint64_t x, unsigned l,
                                             const SemiclassicalParams& params, KMode k_mode,
                                             std::uint64_t k = 0);

/// Distribution table of the htilde envelope at a fixed z_hat.
DistributionTable envelope_distribution(std::uint64_t n, std::uint64_t x, unsigned l,
                                        double z_hat, KMode k_mode, std::uint64_t k = 0);

}  // namespace semishor::semiclassical
