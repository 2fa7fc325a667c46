#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hexapauli/dense.hpp"

namespace hexapauli {

/// One of the four real single-qubit operators I, X, Y, Z.
enum class SingleQubitOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// 2x2 integer realization; Y = [[0,1],[-1,0]] is the real (antisymmetric) one.
DenseIntMatrix single_qubit_matrix(SingleQubitOp op);

char single_qubit_char(SingleQubitOp op);
std::optional<SingleQubitOp> single_qubit_from_char(char c);

/// A real three-qubit Pauli operator: sign in {+1,-1} together with GF(2)
/// X-part and Z-part vectors. Index 0 is the first (leftmost) qubit.
/// Per qubit: I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).
struct SignedPauliOp {
    int sign = +1;
    std::array<std::uint8_t, 3> x{0, 0, 0};
    std::array<std::uint8_t, 3> z{0, 0, 0};

    bool operator==(const SignedPauliOp& o) const = default;

    SingleQubitOp factor(int qubit) const;
    bool is_identity_label() const { return x == std::array<std::uint8_t, 3>{0, 0, 0} && z == std::array<std::uint8_t, 3>{0, 0, 0}; }

    /// Same (x,z) label, canonical +1 sign.
    SignedPauliOp unsigned_rep() const { return SignedPauliOp{+1, x, z}; }
    SignedPauliOp negated() const { return SignedPauliOp{-sign, x, z}; }

    /// Lexicographic key on the (x,z) bits, first qubit most significant.
    int label_key() const {
        return (x[0] << 5) | (x[1] << 4) | (x[2] << 3) | (z[0] << 2) | (z[1] << 1) | z[2];
    }
};

SignedPauliOp make_op(SingleQubitOp a, SingleQubitOp b, SingleQubitOp c, int sign = +1);

/// Parses mnemonics like "ZYX" or "-IIY".
SignedPauliOp parse_op(const std::string& text);
std::string to_string(const SignedPauliOp& p);

/// Exact signed product; (x,z) parts add over GF(2), the sign is lifted
/// multiplicatively from the single-qubit product table.
SignedPauliOp multiply(const SignedPauliOp& p, const SignedPauliOp& q);

/// Symplectic commutation test: x_p.z_q + x_q.z_p = 0 over GF(2).
bool commutes(const SignedPauliOp& p, const SignedPauliOp& q);

/// True iff the dense realization is a symmetric matrix (even number of Y).
bool is_symmetric(const SignedPauliOp& p);

/// 8x8 Kronecker-product realization with the sign applied.
DenseIntMatrix to_dense(const SignedPauliOp& p);

/// Decodes a signed Pauli tensor; nullopt if the matrix is not one.
std::optional<SignedPauliOp> from_dense(const DenseIntMatrix& m);

/// The 63 nontrivial operators, canonical sign +1, in label_key order.
std::vector<SignedPauliOp> enumerate_universe();

}  // namespace hexapauli
