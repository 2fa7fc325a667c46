#include "hexapauli/group.hpp"

#include <map>
#include <stdexcept>
#include <unordered_set>

namespace hexapauli {

namespace {

DenseIntMatrix block2(const DenseIntMatrix& b00, const DenseIntMatrix& b01,
                      const DenseIntMatrix& b02, const DenseIntMatrix& b03,
                      const DenseIntMatrix& b10, const DenseIntMatrix& b11,
                      const DenseIntMatrix& b12, const DenseIntMatrix& b13,
                      const DenseIntMatrix& b20, const DenseIntMatrix& b21,
                      const DenseIntMatrix& b22, const DenseIntMatrix& b23,
                      const DenseIntMatrix& b30, const DenseIntMatrix& b31,
                      const DenseIntMatrix& b32, const DenseIntMatrix& b33) {
    const DenseIntMatrix* blocks[4][4] = {{&b00, &b01, &b02, &b03},
                                          {&b10, &b11, &b12, &b13},
                                          {&b20, &b21, &b22, &b23},
                                          {&b30, &b31, &b32, &b33}};
    DenseIntMatrix m(8);
    for (int bi = 0; bi < 4; ++bi)
        for (int bj = 0; bj < 4; ++bj)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    m(2 * bi + i, 2 * bj + j) = (*blocks[bi][bj])(i, j);
    return m;
}

DenseIntMatrix zero2() { return DenseIntMatrix(2); }

DenseIntMatrix proj_p() {  // |0><0|
    DenseIntMatrix m(2);
    m(0, 0) = 1;
    return m;
}

DenseIntMatrix proj_q() {  // |1><1|
    DenseIntMatrix m(2);
    m(1, 1) = 1;
    return m;
}

}  // namespace

CnotSet build_cnots() {
    const DenseIntMatrix I = DenseIntMatrix::identity(2);
    const DenseIntMatrix X = single_qubit_matrix(SingleQubitOp::X);
    const DenseIntMatrix O = zero2();
    const DenseIntMatrix P = proj_p();
    const DenseIntMatrix Q = proj_q();
    CnotSet c;
    c.c12 = {block2(I, O, O, O, O, I, O, O, O, O, O, I, O, O, I, O)};
    c.c21 = {block2(I, O, O, O, O, O, O, I, O, O, I, O, O, I, O, O)};
    c.c23 = {block2(I, O, O, O, O, X, O, O, O, O, I, O, O, O, O, X)};
    c.c31 = {block2(P, O, Q, O, O, P, O, Q, Q, O, P, O, O, Q, O, P)};
    return c;
}

GateMatrix alpha_cnot_word(const CnotSet& c) {
    return c.c12 * c.c21 * c.c12 * c.c31 * c.c23 * c.c12 * c.c31;
}

Generators build_generators() {
    const DenseIntMatrix O = zero2();
    const DenseIntMatrix P = proj_p();
    const DenseIntMatrix Q = proj_q();
    const DenseIntMatrix X = single_qubit_matrix(SingleQubitOp::X);
    const DenseIntMatrix PX = P * X;
    const DenseIntMatrix QX = Q * X;

    Generators g;
    g.alpha = {block2(P, Q, O, O, O, O, Q, P, O, O, QX, PX, PX, QX, O, O)};
    const CnotSet c = build_cnots();
    g.beta = c.c12 * c.c21;
    const DenseIntMatrix IIZ = to_dense(parse_op("IIZ"));
    g.gamma = {c.c21.m * IIZ};
    return g;
}

SignedPauliOp conjugate(const GateMatrix& g, const SignedPauliOp& p) {
    const DenseIntMatrix res = g.m.transpose() * to_dense(p) * g.m;
    auto decoded = from_dense(res);
    if (!decoded) throw std::runtime_error("conjugation left the real Pauli group");
    return *decoded;
}

OrbitDecomposition orbits_under(const GateMatrix& g) {
    OrbitDecomposition d;
    const auto universe = enumerate_universe();
    std::array<bool, 64> seen{};
    for (const auto& start : universe) {
        if (seen[start.label_key()]) continue;
        std::vector<SignedPauliOp> orbit;
        SignedPauliOp cur = start;
        for (;;) {
            seen[cur.label_key()] = true;
            orbit.push_back(cur.unsigned_rep());
            cur = conjugate(g, cur).unsigned_rep();
            if (cur == start) break;
            if (orbit.size() > 63) throw std::logic_error("orbit does not close");
        }
        d.orbits.push_back(std::move(orbit));
    }
    return d;
}

namespace {

// Gaussian-integer 8x8 matrix layer, local to the Clifford certification.
struct GaussIntMatrix {
    std::array<std::int64_t, 64> re{}, im{};

    static GaussIntMatrix from_real(const DenseIntMatrix& m) {
        GaussIntMatrix g;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) g.re[i * 8 + j] = m(i, j);
        return g;
    }
    // -i * real matrix
    static GaussIntMatrix minus_i_times(const DenseIntMatrix& m) {
        GaussIntMatrix g;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) g.im[i * 8 + j] = -m(i, j);
        return g;
    }
    GaussIntMatrix operator*(const GaussIntMatrix& o) const {
        GaussIntMatrix r;
        for (int i = 0; i < 8; ++i)
            for (int k = 0; k < 8; ++k) {
                const std::int64_t a = re[i * 8 + k], b = im[i * 8 + k];
                if (a == 0 && b == 0) continue;
                for (int j = 0; j < 8; ++j) {
                    const std::int64_t c = o.re[k * 8 + j], d = o.im[k * 8 + j];
                    r.re[i * 8 + j] += a * c - b * d;
                    r.im[i * 8 + j] += a * d + b * c;
                }
            }
        return r;
    }
    GaussIntMatrix operator+(const GaussIntMatrix& o) const {
        GaussIntMatrix r;
        for (int i = 0; i < 64; ++i) {
            r.re[i] = re[i] + o.re[i];
            r.im[i] = im[i] + o.im[i];
        }
        return r;
    }
    GaussIntMatrix operator-(const GaussIntMatrix& o) const {
        GaussIntMatrix r;
        for (int i = 0; i < 64; ++i) {
            r.re[i] = re[i] - o.re[i];
            r.im[i] = im[i] - o.im[i];
        }
        return r;
    }
    bool operator==(const GaussIntMatrix& o) const = default;

    static GaussIntMatrix scaled_identity(std::int64_t s) {
        GaussIntMatrix g;
        for (int i = 0; i < 8; ++i) g.re[i * 8 + i] = s;
        return g;
    }
};

}  // namespace

CliffordReport verify_clifford(const std::array<SignedPauliOp, 8>& special) {
    CliffordReport rep;

    std::array<GaussIntMatrix, 8> gamma;
    for (int k = 1; k <= 7; ++k) gamma[k] = GaussIntMatrix::minus_i_times(to_dense(special[k]));

    rep.pairwise_anticommuting = true;
    rep.anticommutation_ok = true;
    rep.squares_ok = true;
    for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k) {
            const GaussIntMatrix anti = gamma[j] * gamma[k] + gamma[k] * gamma[j];
            const GaussIntMatrix expect = GaussIntMatrix::scaled_identity(j == k ? 2 : 0);
            if (!(anti == expect)) rep.anticommutation_ok = false;
            if (j == k && !(gamma[j] * gamma[j] == GaussIntMatrix::scaled_identity(1)))
                rep.squares_ok = false;
            if (j != k && commutes(special[j], special[k])) rep.pairwise_anticommuting = false;
        }

    // The 21 half-commutators (1/2)[G_j,G_k] must be, up to sign, exactly the
    // antisymmetric operators outside L'.
    std::array<bool, 64> hit{};
    rep.commutators_are_antisymmetric_orbits = true;
    for (int j = 1; j <= 7; ++j)
        for (int k = j + 1; k <= 7; ++k) {
            // For anticommuting pairs (1/2)[G_j,G_k] = G_j G_k = -g_j g_k.
            const SignedPauliOp prod = multiply(special[j], special[k]).negated();
            if (is_symmetric(prod)) {
                rep.commutators_are_antisymmetric_orbits = false;
                continue;
            }
            hit[prod.label_key()] = true;
        }
    int count = 0;
    for (const auto& p : enumerate_universe()) {
        if (is_symmetric(p)) continue;
        bool in_special = false;
        for (int k = 1; k <= 7; ++k)
            if (special[k].unsigned_rep() == p) in_special = true;
        if (in_special) continue;
        ++count;
        if (!hit[p.label_key()]) rep.commutators_are_antisymmetric_orbits = false;
    }
    if (count != 21) rep.commutators_are_antisymmetric_orbits = false;

    // so(8) closure: the 28 antisymmetric operators (as halves) close under
    // commutation onto +/- themselves; symbolically [P/2,Q/2] = +/- R/2 or 0.
    rep.so8_closure_ok = true;
    std::vector<SignedPauliOp> antis;
    for (const auto& p : enumerate_universe())
        if (!is_symmetric(p)) antis.push_back(p);
    for (const auto& p : antis)
        for (const auto& q : antis) {
            if (commutes(p, q)) continue;  // commutator vanishes
            const SignedPauliOp pq = multiply(p, q);
            if (is_symmetric(pq)) rep.so8_closure_ok = false;
            // Exact dense check: [p/2, q/2] == (1/2) pq, i.e. pq - qp == 2 pq.
            const DenseIntMatrix lhs = to_dense(p) * to_dense(q) - to_dense(q) * to_dense(p);
            const DenseIntMatrix rhs = to_dense(pq) + to_dense(pq);
            if (!(lhs == rhs)) rep.so8_closure_ok = false;
        }
    return rep;
}

SignedAction signed_action(const GateMatrix& g) {
    SignedAction a;
    const auto universe = enumerate_universe();
    std::map<int, int> key_to_index;
    for (int i = 0; i < 63; ++i) key_to_index[universe[i].label_key()] = i;
    for (int i = 0; i < 63; ++i) {
        const SignedPauliOp img = conjugate(g, universe[i]);
        a.perm[i] = static_cast<std::uint8_t>(key_to_index.at(img.label_key()));
        a.sign[i] = static_cast<std::int8_t>(img.sign);
    }
    return a;
}

GeneratedGroup generate_group(const std::vector<GateMatrix>& gens, std::size_t element_budget) {
    for (const auto& g : gens)
        if (!g.is_orthogonal()) throw std::invalid_argument("generator is not orthogonal");

    auto key_of = [](const GateMatrix& g) {
        std::string key;
        key.reserve(64);
        for (auto v : g.m.data()) key.push_back(static_cast<char>(v + 2));
        return key;
    };

    GeneratedGroup grp;
    std::unordered_set<std::string> seen;
    std::vector<GateMatrix> frontier;
    const GateMatrix id{DenseIntMatrix::identity(8)};
    grp.elements.push_back(id);
    seen.insert(key_of(id));
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<GateMatrix> next;
        for (const auto& e : frontier)
            for (const auto& g : gens) {
                GateMatrix prod = e * g;
                auto key = key_of(prod);
                if (seen.insert(std::move(key)).second) {
                    if (grp.elements.size() >= element_budget)
                        throw std::runtime_error("group closure exceeded element budget");
                    grp.elements.push_back(prod);
                    next.push_back(std::move(prod));
                }
            }
        frontier = std::move(next);
    }
    return grp;
}

GateMatrix gate_power(const GateMatrix& g, int n) {
    GateMatrix r{DenseIntMatrix::identity(8)};
    for (int i = 0; i < n; ++i) r = r * g;
    return r;
}

GateMatrix gate_inverse(const GateMatrix& g) { return {g.m.transpose()}; }

bool psl27_relations_hold(const Generators& g) {
    const GateMatrix id{DenseIntMatrix::identity(8)};
    if (!(gate_power(g.alpha, 7) == id)) return false;
    if (!(gate_power(g.beta, 3) == id)) return false;
    if (!(gate_power(g.gamma, 2) == id)) return false;
    const GateMatrix a_inv2 = gate_power(gate_inverse(g.alpha), 2);
    const GateMatrix rel = a_inv2 * g.beta * g.alpha * gate_inverse(g.beta);
    if (!(rel == id)) return false;
    if (!(gate_power(g.gamma * g.beta, 2) == id)) return false;
    if (!(gate_power(g.gamma * g.alpha, 3) == id)) return false;
    return true;
}

}  // namespace hexapauli
