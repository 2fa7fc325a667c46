#include "hexapauli/invariants.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "hexapauli/hexagon.hpp"

namespace hexapauli {

namespace {

const HexagonModel& model() {
    static const HexagonModel m = HexagonModel::build();
    return m;
}

// Letter index of 'g' in the hexagon labelling.
constexpr int kLetterG = 6;

/// -Gamma^{IJ} for I<J: the special-set element g_J in the first row, the
/// half-commutator (equivalently, the plain product of the anticommuting
/// pair) inside the 7x7 block.
SignedPauliOp neg_gamma(int I, int J) {
    const auto& g = model().point_ops()[kLetterG];
    if (I == 0) return g[J];
    return multiply(g[I], g[J]);
}

/// Conversion between the antisymmetric-letter families and the pairs of
/// electric/magnetic digit slots: g<->70, e<->16, c<->43, f<->25.
void slot_digits(int hex_letter, int& x_digit, int& y_digit) {
    switch (hex_letter) {
        case 6: x_digit = 7; y_digit = 0; return;  // g
        case 4: x_digit = 1; y_digit = 6; return;  // e
        case 2: x_digit = 4; y_digit = 3; return;  // c
        case 5: x_digit = 2; y_digit = 5; return;  // f
        default: throw std::logic_error("slot_digits: not an antisymmetric letter family");
    }
}

GaussianMatrix8 to_gaussian(const IntMatrix8& m) {
    GaussianMatrix8 g;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) g.a[i][j].re = m[i][j];
    return g;
}

mpq_class pow2q(int e) {
    mpq_class r = 1;
    mpz_class p = 1;
    p <<= (e < 0 ? -e : e);
    if (e >= 0)
        r = p;
    else
        r = mpq_class(1) / p;
    return r;
}

}  // namespace

GammaDictionary build_gamma_dictionary() {
    GammaDictionary d;
    for (int I = 0; I < 8; ++I)
        for (int J = I + 1; J < 8; ++J) {
            d.gamma[I][J] = neg_gamma(I, J).negated();
            d.gamma[J][I] = neg_gamma(I, J);
        }
    return d;
}

std::array<std::array<ChargeSlot, 8>, 8> charge_slots() {
    std::array<std::array<ChargeSlot, 8>, 8> slots{};
    const auto& m = model();
    for (int I = 0; I < 8; ++I)
        for (int J = I + 1; J < 8; ++J) {
            const SignedPauliOp op = neg_gamma(I, J);
            const HexLabel lab = m.label_of(op);
            int s = op.sign * m.op(lab).sign;
            // The dual labelling flips the sign of the whole first row.
            if (I == 0) s = -s;
            ChargeSlot slot;
            slot.bold_letter = lab.index - 1;
            slot_digits(lab.letter, slot.x_index, slot.y_index);
            slot.sign = s;
            slots[I][J] = slot;
            slots[J][I] = {slot.bold_letter, slot.x_index, slot.y_index, -slot.sign};
        }
    return slots;
}

ChargeMatrices charges_to_matrices(const ChargeConfiguration& c) {
    const auto slots = charge_slots();
    ChargeMatrices m;
    for (int I = 0; I < 8; ++I)
        for (int J = 0; J < 8; ++J) {
            if (I == J) continue;
            const ChargeSlot& s = slots[I][J];
            m.x[I][J] = s.sign * c.at(s.bold_letter, s.x_index);
            m.y[I][J] = s.sign * c.at(s.bold_letter, s.y_index);
        }
    return m;
}

ChargeConfiguration matrices_to_charges(const ChargeMatrices& m) {
    for (int I = 0; I < 8; ++I) {
        if (m.x[I][I] != 0 || m.y[I][I] != 0)
            throw std::invalid_argument("matrices_to_charges: nonzero diagonal");
        for (int J = 0; J < 8; ++J)
            if (m.x[I][J] != -m.x[J][I] || m.y[I][J] != -m.y[J][I])
                throw std::invalid_argument("matrices_to_charges: not antisymmetric");
    }
    const auto slots = charge_slots();
    ChargeConfiguration c;
    for (int I = 0; I < 8; ++I)
        for (int J = I + 1; J < 8; ++J) {
            const ChargeSlot& s = slots[I][J];
            c.at(s.bold_letter, s.x_index) = s.sign * m.x[I][J];
            c.at(s.bold_letter, s.y_index) = s.sign * m.y[I][J];
        }
    return c;
}

CentralCharge central_charge(const ChargeConfiguration& c) {
    const ChargeMatrices cm = charges_to_matrices(c);
    CentralCharge z;
    z.sqrt2_exponent = -3;
    for (int I = 0; I < 8; ++I)
        for (int J = I + 1; J < 8; ++J) {
            if (cm.x[I][J] == 0 && cm.y[I][J] == 0) continue;
            const DenseIntMatrix basis = to_dense(neg_gamma(I, J));
            const GaussianRational coeff{mpq_class(cm.x[I][J]), mpq_class(cm.y[I][J])};
            for (int A = 0; A < 8; ++A)
                for (int B = 0; B < 8; ++B) {
                    const std::int64_t e = basis(A, B);
                    if (e == 0) continue;
                    GaussianRational term = coeff;
                    if (e < 0) term = -term;
                    z.numerator.a[A][B] = z.numerator.a[A][B] + term;
                }
        }
    if (!z.numerator.is_antisymmetric())
        throw std::logic_error("central_charge: numerator not antisymmetric");
    return z;
}

mpq_class j4_cartan_matrices(const ChargeMatrices& m) {
    IntMatrix8 xy{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            mpz_class s = 0;
            for (int k = 0; k < 8; ++k) s += m.x[i][k] * m.y[k][j];
            xy[i][j] = s;
        }
    mpz_class tr_xy = 0, tr_xyxy = 0;
    for (int i = 0; i < 8; ++i) {
        tr_xy += xy[i][i];
        for (int k = 0; k < 8; ++k) tr_xyxy += xy[i][k] * xy[k][i];
    }
    const GaussianRational pfx = pfaffian(to_gaussian(m.x));
    const GaussianRational pfy = pfaffian(to_gaussian(m.y));
    mpq_class j4 = -mpq_class(tr_xyxy) + mpq_class(tr_xy * tr_xy) / 4 -
                   4 * (pfx.re + pfy.re);
    return j4;
}

mpq_class j4_cartan(const ChargeConfiguration& c) {
    return j4_cartan_matrices(charges_to_matrices(c));
}

GaussianRational j4_cremmer(const CentralCharge& z) {
    const GaussianMatrix8& m = z.numerator;
    const GaussianMatrix8 mbar = m.conj();
    const GaussianMatrix8 p = m * mbar;
    const GaussianRational tr = p.trace();
    const GaussianRational tr2 = (p * p).trace();
    const GaussianRational pf = pfaffian(m);
    const GaussianRational pfbar = pfaffian(mbar);
    const GaussianRational quarter{mpq_class(1, 4), 0};
    const GaussianRational four{mpq_class(4), 0};
    GaussianRational j4 = tr2 - quarter * (tr * tr) + four * (pf + pfbar);
    const GaussianRational scale{pow2q(2 * z.sqrt2_exponent), 0};
    return scale * j4;
}

EntropyResult entropy(const ChargeConfiguration& c) {
    EntropyResult r;
    r.j4 = j4_cartan(c);
    r.bps_sign = sgn(r.j4);
    mpq_class abs_j4 = r.j4 >= 0 ? r.j4 : mpq_class(-r.j4);
    r.entropy = std::numbers::pi * std::sqrt(abs_j4.get_d());
    return r;
}

mpz_class cayley_hyperdeterminant(const std::array<mpz_class, 8>& a) {
    const mpz_class p07 = a[0] * a[7], p16 = a[1] * a[6], p25 = a[2] * a[5],
                    p34 = a[3] * a[4];
    return p07 * p07 + p16 * p16 + p25 * p25 + p34 * p34 -
           2 * (p07 * p16 + p07 * p25 + p07 * p34 + p16 * p25 + p25 * p34 + p34 * p16) +
           4 * a[0] * a[3] * a[5] * a[6] + 4 * a[1] * a[2] * a[4] * a[7];
}

ChargeConfiguration psl27_action_on_charges(const GateMatrix& g, const ChargeConfiguration& c) {
    const GammaDictionary dict = build_gamma_dictionary();
    std::map<int, std::pair<int, int>> key_to_slot;
    for (int I = 0; I < 8; ++I)
        for (int J = I + 1; J < 8; ++J)
            key_to_slot[dict.at(I, J).label_key()] = {I, J};

    const ChargeMatrices m = charges_to_matrices(c);
    ChargeMatrices out{};
    for (int I = 0; I < 8; ++I)
        for (int J = I + 1; J < 8; ++J) {
            const SignedPauliOp image = conjugate(g, dict.at(I, J));
            const auto it = key_to_slot.find(image.label_key());
            if (it == key_to_slot.end())
                throw std::logic_error("psl27_action_on_charges: image leaves the basis");
            const auto [Ip, Jp] = it->second;
            const int s = image.sign * dict.at(Ip, Jp).sign;
            out.x[Ip][Jp] += s * m.x[I][J];
            out.x[Jp][Ip] -= s * m.x[I][J];
            out.y[Ip][Jp] += s * m.y[I][J];
            out.y[Jp][Ip] -= s * m.y[I][J];
        }
    return matrices_to_charges(out);
}

CanonicalTruncation canonical_truncation(const ChargeConfiguration& c) {
    for (int letter = 1; letter < 7; ++letter)
        for (int i = 0; i < 8; ++i)
            if (c.at(letter, i) != 0)
                throw std::invalid_argument(
                    "canonical_truncation: configuration has support outside the first letter");
    CanonicalTruncation t;
    for (int i = 0; i < 8; ++i) t.amplitudes[i] = c.at(0, i);
    const mpz_class& a1 = t.amplitudes[1];
    const mpz_class& a2 = t.amplitudes[2];
    const mpz_class& a4 = t.amplitudes[4];
    const mpz_class& a7 = t.amplitudes[7];
    t.z_numerators[0] = -a7 + a2 + a1 + a4;
    t.z_numerators[1] = -a7 + a2 - a1 - a4;
    t.z_numerators[2] = -a7 - a2 + a1 - a4;
    t.z_numerators[3] = -a7 - a2 - a1 + a4;
    return t;
}

std::array<mpz_class, 8> permute_qubits(const std::array<mpz_class, 8>& a,
                                        const std::array<int, 3>& perm) {
    std::array<mpz_class, 8> out;
    for (int i = 0; i < 8; ++i) {
        int j = 0;
        for (int p = 0; p < 3; ++p) {
            const int bit = (i >> (2 - p)) & 1;
            j |= bit << (2 - perm[p]);
        }
        out[i] = a[j];
    }
    return out;
}

}  // namespace hexapauli
