#pragma once

#include <array>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "hexapauli/gaussian.hpp"
#include "hexapauli/group.hpp"
#include "hexapauli/pauli.hpp"

namespace hexapauli {

/// 8x8 exact integer antisymmetric matrix.
using IntMatrix8 = std::array<std::array<mpz_class, 8>, 8>;

/// The 56 black-hole charges, boldface letters a..g (0..6) with index 0..7.
struct ChargeConfiguration {
    std::array<std::array<mpz_class, 8>, 7> charges{};

    mpz_class& at(int letter, int index) { return charges[letter][index]; }
    const mpz_class& at(int letter, int index) const { return charges[letter][index]; }
    bool operator==(const ChargeConfiguration&) const = default;
};

/// Gamma^{IJ} |-> signed Pauli operator, 0 <= I < J <= 7. The images are
/// exactly the 28 antisymmetric operators (the Coxeter set): Gamma^{0k} is
/// -g_k and Gamma^{jk} is -(1/2)[g_j,g_k].
struct GammaDictionary {
    std::array<std::array<SignedPauliOp, 8>, 8> gamma;  // gamma[I][J], I<J stored; [J][I] negated

    const SignedPauliOp& at(int I, int J) const { return gamma[I][J]; }
};
GammaDictionary build_gamma_dictionary();

/// Where each boldface charge sits in the x/y matrices, with its sign.
struct ChargeSlot {
    int bold_letter;  // 0..6 = a..g
    int x_index;      // 0..7, electric digit
    int y_index;      // 0..7, magnetic digit
    int sign;         // printed sign of the slot
};
/// Slot dictionary for 0 <= I < J <= 7, derived from the Gamma dictionary
/// by the lexicographic letter/number conversion rule.
std::array<std::array<ChargeSlot, 8>, 8> charge_slots();

struct ChargeMatrices {
    IntMatrix8 x;  // electric
    IntMatrix8 y;  // magnetic
};
ChargeMatrices charges_to_matrices(const ChargeConfiguration& c);
ChargeConfiguration matrices_to_charges(const ChargeMatrices& m);  // throws if not antisymmetric

/// Central charge as an exact matrix times a power of sqrt(2):
/// Z = numerator * 2^(sqrt2_exponent/2).
struct CentralCharge {
    GaussianMatrix8 numerator;
    int sqrt2_exponent = -3;
};
CentralCharge central_charge(const ChargeConfiguration& c);

mpq_class j4_cartan(const ChargeConfiguration& c);
mpq_class j4_cartan_matrices(const ChargeMatrices& m);
GaussianRational j4_cremmer(const CentralCharge& z);

struct EntropyResult {
    mpq_class j4;
    int bps_sign;   // +1 BPS, -1 non-BPS, 0 zero
    double entropy; // pi * sqrt(|j4|)
};
EntropyResult entropy(const ChargeConfiguration& c);

/// Cayley's hyperdeterminant of a 2x2x2 amplitude array (decimal labels).
mpz_class cayley_hyperdeterminant(const std::array<mpz_class, 8>& a);

/// Transports charges along the conjugation action of g on the Gamma basis
/// (a signed permutation of the 28 slots, applied to x and y alike).
ChargeConfiguration psl27_action_on_charges(const GateMatrix& g, const ChargeConfiguration& c);

/// For configurations supported on the boldface a-letter only: the
/// three-qubit amplitude vector (a_0..a_7) plus the z-value numerators
/// (sqrt(8) z_i) of the canonical form for real charges.
struct CanonicalTruncation {
    std::array<mpz_class, 8> amplitudes;
    std::array<mpz_class, 4> z_numerators;  // sqrt(8) * z_i
};
CanonicalTruncation canonical_truncation(const ChargeConfiguration& c);  // throws if support leaks

/// Amplitude relabelling under a permutation of the three qubit slots.
std::array<mpz_class, 8> permute_qubits(const std::array<mpz_class, 8>& a,
                                        const std::array<int, 3>& perm);

}  // namespace hexapauli
