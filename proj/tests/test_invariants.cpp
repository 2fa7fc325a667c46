#include <doctest.h>

#include <array>
#include <random>
#include <string>

#include "hexapauli/group.hpp"
#include "hexapauli/hexagon.hpp"
#include "hexapauli/invariants.hpp"
#include "hexapauli/pauli.hpp"

using namespace hexapauli;

namespace {

// The printed -Gamma^{IJ} dictionary, upper triangle, as hexagon labels with
// signs ("e6" / "-f3" style).
const char* kNegGamma[8][8] = {
    {nullptr, "g1", "g2", "g3", "g4", "g5", "g6", "g7"},
    {nullptr, nullptr, "e6", "c4", "-f3", "f7", "-c2", "-e5"},
    {nullptr, nullptr, nullptr, "e7", "c5", "-f4", "f1", "-c3"},
    {nullptr, nullptr, nullptr, nullptr, "e1", "c6", "-f5", "f2"},
    {nullptr, nullptr, nullptr, nullptr, nullptr, "e2", "c7", "-f6"},
    {nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, "e3", "c1"},
    {nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, "e4"},
};

// The printed electric charge matrix, upper triangle, boldface letter and
// index with signs.
const char* kXSlots[8][8] = {
    {nullptr, "-a7", "-b7", "-c7", "-d7", "-e7", "-f7", "-g7"},
    {nullptr, nullptr, "f1", "d4", "-c2", "g2", "-b4", "-e1"},
    {nullptr, nullptr, nullptr, "g1", "e4", "-d2", "a2", "-c4"},
    {nullptr, nullptr, nullptr, nullptr, "a1", "f4", "-e2", "b2"},
    {nullptr, nullptr, nullptr, nullptr, nullptr, "b1", "g4", "-f2"},
    {nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, "c1", "a4"},
    {nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, "d1"},
};
// The magnetic matrix carries the same letters and signs with the paired
// index: 7<->0, 1<->6, 4<->3, 2<->5.
int magnetic_index(int x_index) {
    switch (x_index) {
        case 7: return 0;
        case 1: return 6;
        case 4: return 3;
        case 2: return 5;
        default: return -1;
    }
}

ChargeConfiguration random_charges(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-9, 9);
    ChargeConfiguration c;
    for (int l = 0; l < 7; ++l)
        for (int i = 0; i < 8; ++i) c.at(l, i) = d(rng);
    return c;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("gamma dictionary matches the printed table") {
    const HexagonModel m = HexagonModel::build();
    const GammaDictionary dict = build_gamma_dictionary();
    for (int I = 0; I < 8; ++I)
        for (int J = I + 1; J < 8; ++J) {
            const SignedPauliOp neg = dict.at(I, J).negated();  // -Gamma^{IJ}
            std::string expect = kNegGamma[I][J];
            int sign = +1;
            if (expect[0] == '-') {
                sign = -1;
                expect = expect.substr(1);
            }
            const HexLabel lab = m.label_of(neg);
            CHECK(lab.str() == expect);
            CHECK(neg.sign * m.op(lab).sign == sign);
        }
}

TEST_CASE("worked dictionary entry: -Gamma^{25} = -f4 = -YII") {
    const GammaDictionary dict = build_gamma_dictionary();
    CHECK(dict.at(2, 5).negated() == parse_op("-YII"));
}

TEST_CASE("charge slots match the printed electric and magnetic matrices") {
    const auto slots = charge_slots();
    for (int I = 0; I < 8; ++I)
        for (int J = I + 1; J < 8; ++J) {
            std::string expect = kXSlots[I][J];
            int sign = +1;
            if (expect[0] == '-') {
                sign = -1;
                expect = expect.substr(1);
            }
            const ChargeSlot& s = slots[I][J];
            CHECK(s.bold_letter == expect[0] - 'a');
            CHECK(s.x_index == expect[1] - '0');
            CHECK(s.sign == sign);
            CHECK(s.y_index == magnetic_index(s.x_index));
            // Antisymmetric counterpart.
            CHECK(slots[J][I].sign == -sign);
        }
}

TEST_CASE("charge matrices round-trip") {
    std::mt19937_64 rng(20080911);
    const ChargeConfiguration c = random_charges(rng);
    const ChargeMatrices m = charges_to_matrices(c);
    for (int I = 0; I < 8; ++I)
        for (int J = 0; J < 8; ++J) {
            CHECK(m.x[I][J] == -m.x[J][I]);
            CHECK(m.y[I][J] == -m.y[J][I]);
        }
    CHECK(matrices_to_charges(m) == c);
    ChargeMatrices bad = m;
    bad.x[0][0] = 1;
    CHECK_THROWS(matrices_to_charges(bad));
}

TEST_CASE("central charge of the canonical support is the block-diagonal form") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    ChargeConfiguration c;
    for (int i = 0; i < 8; ++i) c.at(0, i) = d(rng);
    // Magnetic parts off: keep only the electric canonical amplitudes.
    c.at(0, 0) = 0;
    c.at(0, 3) = 0;
    c.at(0, 5) = 0;
    c.at(0, 6) = 0;
    const CentralCharge z = central_charge(c);
    CHECK(z.sqrt2_exponent == -3);
    const CanonicalTruncation t = canonical_truncation(c);
    // numerator = diag(n1,n2,n3,n4) (x) [[0,1],[-1,0]] with n = z numerators.
    for (int A = 0; A < 8; ++A)
        for (int B = 0; B < 8; ++B) {
            const GaussianRational& v = z.numerator.a[A][B];
            CHECK(v.im == 0);
            if (A / 2 == B / 2 && A != B) {
                const mpq_class expect(t.z_numerators[A / 2] * (A < B ? 1 : -1));
                CHECK(v.re == expect);
            } else {
                CHECK(v.re == 0);
            }
        }
}

TEST_CASE("worked entropy values") {
    ChargeConfiguration ghz;
    ghz.at(0, 0) = 1;
    ghz.at(0, 7) = 1;
    CHECK(j4_cartan(ghz) == -1);
    CHECK(entropy(ghz).bps_sign == -1);

    ChargeConfiguration four;
    four.at(0, 1) = 1;
    four.at(0, 2) = 1;
    four.at(0, 4) = 1;
    four.at(0, 7) = -1;
    CHECK(j4_cartan(four) == 4);
    const EntropyResult e = entropy(four);
    CHECK(e.bps_sign == +1);
    CHECK(e.entropy == doctest::Approx(2 * 3.14159265358979323846).epsilon(1e-13));

    CHECK(entropy(ChargeConfiguration{}).j4 == 0);
    CHECK(entropy(ChargeConfiguration{}).entropy == 0.0);
}

TEST_CASE("Cremmer-Julia and Cartan forms agree on random charges") {
    std::mt19937_64 rng(20080911);
    for (int t = 0; t < 100; ++t) {
        const ChargeConfiguration c = random_charges(rng);
        const GaussianRational j4 = j4_cremmer(central_charge(c));
        CHECK(j4.im == 0);
        CHECK(j4.re == j4_cartan(c));
    }
}

TEST_CASE("transported group action permutes letters and preserves J4") {
    const Generators gen = build_generators();
    std::mt19937_64 rng(20080911);
    std::uniform_int_distribution<int> d(-9, 9);
    ChargeConfiguration a_only;
    for (int i = 0; i < 8; ++i) a_only.at(0, i) = d(rng);

    // The order-7 generator cycles the boldface letters a -> b -> ... -> g.
    const ChargeConfiguration image = psl27_action_on_charges(gen.alpha, a_only);
    for (int i = 0; i < 8; ++i) CHECK(image.at(0, i) == 0);
    bool b_support = true;
    for (int l = 2; l < 7; ++l)
        for (int i = 0; i < 8; ++i) b_support = b_support && image.at(l, i) == 0;
    CHECK(b_support);
    CHECK(j4_cartan(image) == j4_cartan(a_only));

    for (int t = 0; t < 5; ++t) {
        const ChargeConfiguration c = random_charges(rng);
        const mpq_class j4 = j4_cartan(c);
        CHECK(j4_cartan(psl27_action_on_charges(gen.alpha, c)) == j4);
        CHECK(j4_cartan(psl27_action_on_charges(gen.beta, c)) == j4);
        CHECK(j4_cartan(psl27_action_on_charges(gen.gamma, c)) == j4);
    }
}

TEST_CASE("truncation: J4 = -D(a) and the z numerators") {
    std::mt19937_64 rng(20080911);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 100; ++t) {
        ChargeConfiguration c;
        std::array<mpz_class, 8> a;
        for (int i = 0; i < 8; ++i) {
            a[i] = d(rng);
            c.at(0, i) = a[i];
        }
        CHECK(j4_cartan(c) == -mpq_class(cayley_hyperdeterminant(a)));
    }
    ChargeConfiguration four;
    four.at(0, 1) = 2;
    four.at(0, 2) = 3;
    four.at(0, 4) = 5;
    four.at(0, 7) = -7;
    // Four-charge truncation: J4 = -(-4 a1 a2 a4 a7) = 4*2*3*5*(-7)... sign:
    // D(a) = 4 a1 a2 a4 a7 here, so J4 = -4*2*3*5*(-7) = 840.
    CHECK(j4_cartan(four) == 840);
    const CanonicalTruncation tr = canonical_truncation(four);
    CHECK(tr.z_numerators[0] == 7 + 3 + 2 + 5);
    CHECK(tr.z_numerators[1] == 7 + 3 - 2 - 5);
    CHECK(tr.z_numerators[2] == 7 - 3 + 2 - 5);
    CHECK(tr.z_numerators[3] == 7 - 3 - 2 + 5);

    ChargeConfiguration leak = four;
    leak.at(3, 3) = 1;
    CHECK_THROWS(canonical_truncation(leak));
}

TEST_CASE("hyperdeterminant: S3 invariance and product states") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 50; ++t) {
        std::array<mpz_class, 8> a;
        for (int i = 0; i < 8; ++i) a[i] = d(rng);
        const mpz_class det = cayley_hyperdeterminant(a);
        for (const std::array<int, 3>& p :
             {std::array<int, 3>{1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}})
            CHECK(cayley_hyperdeterminant(permute_qubits(a, p)) == det);
    }
    // Separable amplitudes have vanishing hyperdeterminant.
    for (int t = 0; t < 20; ++t) {
        std::array<mpz_class, 2> u{d(rng), d(rng)}, v{d(rng), d(rng)}, w{d(rng), d(rng)};
        std::array<mpz_class, 8> a;
        for (int i = 0; i < 8; ++i) a[i] = u[(i >> 2) & 1] * v[(i >> 1) & 1] * w[i & 1];
        CHECK(cayley_hyperdeterminant(a) == 0);
    }
}

}  // TEST_SUITE
