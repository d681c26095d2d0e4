#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "semishor/distribution.hpp"
#include "semishor/numtheory.hpp"

namespace semishor {

using Complex = std::complex<double>;

/// Amplitudes of a post-QFT state, indexed by output register value c and
/// residue class k of the exponent register (a = k mod L). The second register
/// value for class k is residues[k] = x^k mod N.
struct SemistateCoefficients {
  std::uint64_t q = 0;
  std::uint64_t period = 0;
  std::vector<std::uint64_t> residues;
  std::vector<Complex> amp;  // row-major: amp[c * period + k]

  SemistateCoefficients() = default;
  SemistateCoefficients(std::uint64_t q, std::uint64_t period, std::vector<std::uint64_t> residues);

  Complex& at(std::uint64_t c, std::uint64_t k) { return amp[c * period + k]; }
  const Complex& at(std::uint64_t c, std::uint64_t k) const { return amp[c * period + k]; }

  /// sum over (c, k) of |amp|^2.
  double norm() const;
  /// |amp(c, k)|^2
  double probability(std::uint64_t c, std::uint64_t k) const { return std::norm(at(c, k)); }
};

namespace quantum {

enum class GateKind { R, S };

/// R_i is the Hadamard on bit i; S_{i,j} (j > i) multiplies |1_j 1_i> by
/// e^{i theta}, theta = pi / 2^{j-i}.
struct GateDescriptor {
  GateKind kind = GateKind::R;
  unsigned target = 0;   // i
  unsigned control = 0;  // j, S only
  double theta = 0.0;    // S only

  friend bool operator==(const GateDescriptor&, const GateDescriptor&) = default;
};

inline constexpr unsigned kMaxGateStringWidth = 12;
inline constexpr unsigned kMaxDenseWidth = 10;

/// q^{-1/2} exp(2 pi i a c / q); both registers must share a width.
Complex qft_amplitude(const BitRegister& a, const BitRegister& c);

/// R_0 S_{0,1} ... S_{0,l-1} R_1 S_{1,2} ... R_{l-1}, in written order.
std::vector<GateDescriptor> build_gate_string(unsigned l);

/// Applies one gate in place to a 2^l state vector.
void apply_gate(const GateDescriptor& gate, std::span<Complex> state);

/// Dense matrix of the operator product of the gate string (the rightmost
/// gate acts first). Row index is the output register before bit reversal:
/// U(bit_reverse(c), a) = qft_amplitude(a, c).
Eigen::MatrixXcd apply_gate_string(unsigned l);

/// The exact state |s'> after the second QFT, by residue class.
/// Throws NotCoprime, InvalidArgument when 2^l < N.
SemistateCoefficients shor_state(std::uint64_t n, std::uint64_t x, unsigned l);

/// {L c_hat}_q: L c_hat - d q with minimal magnitude, in (-q/2, q/2].
std::int64_t residue_bracket(std::uint64_t period, std::uint64_t c_hat, std::uint64_t q);

/// Number of terms a = k + f L below q, i.e. floor((q - k - 1) / L) + 1.
std::uint64_t residue_class_size(std::uint64_t k, std::uint64_t q, std::uint64_t period);

/// |(1/q) sum_f exp(2 pi i f {L c_hat}_q / q)|^2 via the closed geometric sum.
double shor_probability(std::uint64_t c_hat, std::uint64_t k, std::uint64_t q, std::uint64_t period);

/// All c_hat with |{L c_hat}_q| < L/2, ascending.
std::vector<std::uint64_t> good_c_values(std::uint64_t q, std::uint64_t period);

/// 4 / (pi^2 L^2)
double probability_lower_bound(std::uint64_t period);

/// Table of P(c_hat, x^k mod N) over all c_hat, either for one fixed k or
/// summed over every residue class (the physical measurement).
DistributionTable quantum_distribution(std::uint64_t n, std::uint64_t x, unsigned l, KMode k_mode,
                                       std::uint64_t k = 0);

}  // namespace quantum
}  // namespace semishor
