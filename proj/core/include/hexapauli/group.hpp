#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hexapauli/dense.hpp"
#include "hexapauli/pauli.hpp"

namespace hexapauli {

/// An 8x8 orthogonal gate with entries in {-1,0,1}.
struct GateMatrix {
    DenseIntMatrix m;

    bool is_orthogonal() const { return m * m.transpose() == DenseIntMatrix::identity(8); }
    GateMatrix operator*(const GateMatrix& o) const { return {m * o.m}; }
    bool operator==(const GateMatrix& o) const = default;
};

struct CnotSet {
    GateMatrix c12, c21, c23, c31;
};

/// The four CNOT block matrices (first index: control, second: target).
CnotSet build_cnots();

struct Generators {
    GateMatrix alpha;  // order 7
    GateMatrix beta;   // order 3, C12*C21
    GateMatrix gamma;  // order 2, C21*(I (x) I (x) Z)
};

/// The three PSL(2,7) generator matrices. alpha both as its block form and
/// (checked by callers/tests) as the CNOT word (C12 C21)(C12 C31) C23 (C12 C31).
Generators build_generators();

/// The CNOT word for alpha, multiplied in reading order.
GateMatrix alpha_cnot_word(const CnotSet& c);

/// g^-1 p g decoded back to a signed Pauli operator. Throws if the result is
/// not a signed Pauli tensor (g does not normalize the real Pauli group).
SignedPauliOp conjugate(const GateMatrix& g, const SignedPauliOp& p);

/// Orbits of the conjugation action of g on the 63 unsigned operators, each
/// orbit listed in cyclic order of repeated application.
struct OrbitDecomposition {
    std::vector<std::vector<SignedPauliOp>> orbits;
};
OrbitDecomposition orbits_under(const GateMatrix& g);

/// Certification of the Clifford-algebra structure of the special set L':
/// with G_k = -i L'_k, checks G_j G_k + G_k G_j = 2 delta_jk and that the 21
/// half-commutators reproduce, up to sign, the other antisymmetric orbits.
struct CliffordReport {
    bool anticommutation_ok = false;
    bool pairwise_anticommuting = false;
    bool squares_ok = false;
    bool commutators_are_antisymmetric_orbits = false;
    bool so8_closure_ok = false;
    bool ok() const {
        return anticommutation_ok && pairwise_anticommuting && squares_ok &&
               commutators_are_antisymmetric_orbits && so8_closure_ok;
    }
};
CliffordReport verify_clifford(const std::array<SignedPauliOp, 8>& special);

/// The conjugation action of a gate on the 63 unsigned operators, as a
/// permutation of universe indices plus a sign vector.
struct SignedAction {
    std::array<std::uint8_t, 63> perm;
    std::array<std::int8_t, 63> sign;
};
SignedAction signed_action(const GateMatrix& g);

/// Closure of a generator set under multiplication.
struct GeneratedGroup {
    std::vector<GateMatrix> elements;
    std::size_t order() const { return elements.size(); }
};
GeneratedGroup generate_group(const std::vector<GateMatrix>& gens,
                              std::size_t element_budget = 1000000);

/// Defining relations alpha^7 = beta^3 = gamma^2 =
/// alpha^-2 beta alpha beta^-1 = (gamma beta)^2 = (gamma alpha)^3 = 1.
bool psl27_relations_hold(const Generators& g);

GateMatrix gate_power(const GateMatrix& g, int n);
GateMatrix gate_inverse(const GateMatrix& g);  // transpose, for orthogonal gates

}  // namespace hexapauli
