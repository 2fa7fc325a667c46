#include "hexapauli/pauli.hpp"

#include <stdexcept>

namespace hexapauli {

namespace {

// Signs of the single-qubit products, row * column, indexed by SingleQubitOp.
// X.Z = -Y, Z.X = +Y, X.Y = -Z, Y.X = +Z, Y.Z = -X, Z.Y = +X, Y.Y = -I.
constexpr int kProductSign[4][4] = {
    //           I   X   Y   Z
    /* I */    {+1, +1, +1, +1},
    /* X */    {+1, +1, -1, -1},
    /* Y */    {+1, +1, -1, -1},
    /* Z */    {+1, +1, +1, +1},
};

constexpr std::uint8_t kXBit[4] = {0, 1, 1, 0};
constexpr std::uint8_t kZBit[4] = {0, 0, 1, 1};

SingleQubitOp op_from_bits(std::uint8_t x, std::uint8_t z) {
    if (x == 0 && z == 0) return SingleQubitOp::I;
    if (x == 1 && z == 0) return SingleQubitOp::X;
    if (x == 1 && z == 1) return SingleQubitOp::Y;
    return SingleQubitOp::Z;
}

}  // namespace

DenseIntMatrix single_qubit_matrix(SingleQubitOp op) {
    DenseIntMatrix m(2);
    switch (op) {
        case SingleQubitOp::I: m(0, 0) = 1; m(1, 1) = 1; break;
        case SingleQubitOp::X: m(0, 1) = 1; m(1, 0) = 1; break;
        case SingleQubitOp::Y: m(0, 1) = 1; m(1, 0) = -1; break;
        case SingleQubitOp::Z: m(0, 0) = 1; m(1, 1) = -1; break;
    }
    return m;
}

char single_qubit_char(SingleQubitOp op) {
    return "IXYZ"[static_cast<int>(op)];
}

std::optional<SingleQubitOp> single_qubit_from_char(char c) {
    switch (c) {
        case 'I': return SingleQubitOp::I;
        case 'X': return SingleQubitOp::X;
        case 'Y': return SingleQubitOp::Y;
        case 'Z': return SingleQubitOp::Z;
        default: return std::nullopt;
    }
}

SingleQubitOp SignedPauliOp::factor(int qubit) const {
    return op_from_bits(x[qubit], z[qubit]);
}

SignedPauliOp make_op(SingleQubitOp a, SingleQubitOp b, SingleQubitOp c, int sign) {
    SignedPauliOp p;
    p.sign = sign;
    const SingleQubitOp ops[3] = {a, b, c};
    for (int i = 0; i < 3; ++i) {
        p.x[i] = kXBit[static_cast<int>(ops[i])];
        p.z[i] = kZBit[static_cast<int>(ops[i])];
    }
    return p;
}

SignedPauliOp parse_op(const std::string& text) {
    std::string s = text;
    int sign = +1;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        if (s[0] == '-') sign = -1;
        s = s.substr(1);
    }
    if (s.size() != 3) throw std::invalid_argument("bad Pauli mnemonic: " + text);
    SingleQubitOp ops[3];
    for (int i = 0; i < 3; ++i) {
        auto o = single_qubit_from_char(s[i]);
        if (!o) throw std::invalid_argument("bad Pauli mnemonic: " + text);
        ops[i] = *o;
    }
    return make_op(ops[0], ops[1], ops[2], sign);
}

std::string to_string(const SignedPauliOp& p) {
    std::string s;
    if (p.sign < 0) s += '-';
    for (int i = 0; i < 3; ++i) s += single_qubit_char(p.factor(i));
    return s;
}

SignedPauliOp multiply(const SignedPauliOp& p, const SignedPauliOp& q) {
    SignedPauliOp r;
    r.sign = p.sign * q.sign;
    for (int i = 0; i < 3; ++i) {
        r.sign *= kProductSign[static_cast<int>(p.factor(i))][static_cast<int>(q.factor(i))];
        r.x[i] = p.x[i] ^ q.x[i];
        r.z[i] = p.z[i] ^ q.z[i];
    }
    return r;
}

bool commutes(const SignedPauliOp& p, const SignedPauliOp& q) {
    int s = 0;
    for (int i = 0; i < 3; ++i) s += p.x[i] * q.z[i] + q.x[i] * p.z[i];
    return s % 2 == 0;
}

bool is_symmetric(const SignedPauliOp& p) {
    int s = 0;
    for (int i = 0; i < 3; ++i) s += p.x[i] * p.z[i];
    return s % 2 == 0;
}

DenseIntMatrix to_dense(const SignedPauliOp& p) {
    DenseIntMatrix m = single_qubit_matrix(p.factor(0))
                           .kron(single_qubit_matrix(p.factor(1)))
                           .kron(single_qubit_matrix(p.factor(2)));
    if (p.sign < 0) m = -m;
    return m;
}

std::optional<SignedPauliOp> from_dense(const DenseIntMatrix& m) {
    if (m.dim() != 8) return std::nullopt;
    // The column support of row r of a Pauli tensor is r ^ xmask, and the
    // entry there is sign * (-1)^(z . r).
    int xmask = -1;
    for (int c = 0; c < 8; ++c) {
        if (m(0, c) != 0) {
            if (xmask >= 0) return std::nullopt;
            xmask = c;
        }
    }
    if (xmask < 0) return std::nullopt;
    const std::int64_t s = m(0, xmask);
    if (s != 1 && s != -1) return std::nullopt;

    SignedPauliOp p;
    p.sign = static_cast<int>(s);
    p.x = {static_cast<std::uint8_t>((xmask >> 2) & 1),
           static_cast<std::uint8_t>((xmask >> 1) & 1),
           static_cast<std::uint8_t>(xmask & 1)};
    for (int q = 0; q < 3; ++q) {
        const int r = 1 << (2 - q);
        p.z[q] = (m(r, r ^ xmask) * s < 0) ? 1 : 0;
    }
    if (to_dense(p) == m) return p;
    return std::nullopt;
}

std::vector<SignedPauliOp> enumerate_universe() {
    std::vector<SignedPauliOp> out;
    out.reserve(63);
    for (int key = 1; key < 64; ++key) {
        SignedPauliOp p;
        p.x = {static_cast<std::uint8_t>((key >> 5) & 1),
               static_cast<std::uint8_t>((key >> 4) & 1),
               static_cast<std::uint8_t>((key >> 3) & 1)};
        p.z = {static_cast<std::uint8_t>((key >> 2) & 1),
               static_cast<std::uint8_t>((key >> 1) & 1),
               static_cast<std::uint8_t>(key & 1)};
        out.push_back(p);
    }
    return out;
}

}  // namespace hexapauli
