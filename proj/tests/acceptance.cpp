// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hexapauli/fano.hpp"
#include "hexapauli/gaussian.hpp"
#include "hexapauli/graph.hpp"
#include "hexapauli/group.hpp"
#include "hexapauli/hexagon.hpp"
#include "hexapauli/invariants.hpp"
#include "hexapauli/mub.hpp"
#include "hexapauli/pauli.hpp"

using namespace hexapauli;

namespace {

constexpr unsigned long kSeed = 20080911;
constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

void report(int id, bool pass, const std::string& what) {
    std::printf("[%2d] %s  %s\n", id, pass ? "PASS" : "FAIL", what.c_str());
    if (!pass) ++g_failures;
}

// Golden data for criteria 2-4: printed product grid, underline mask, and
// conjugation cycles.
const char* kGolden[8][8] = {
    {},
    {nullptr, "ZZX", "ZIX", "ZZY", "IZX", "IZY", "ZIY", "IIY"},
    {nullptr, "ZYX", "ZXX", "ZYY", "IYX", "IYY", "ZXY", "IXY"},
    {nullptr, "YZX", "YIX", "YZY", "XZX", "XZY", "YIY", "XIY"},
    {nullptr, "YZI", "YII", "YZZ", "XZI", "XZZ", "YIZ", "XIZ"},
    {nullptr, "YYX", "YXX", "YYY", "XYX", "XYY", "YXY", "XXY"},
    {nullptr, "ZYI", "ZXI", "ZYZ", "IYI", "IYZ", "ZXZ", "IXZ"},
    {nullptr, "YYI", "YXI", "YYZ", "XYI", "XYZ", "YXZ", "XXZ"},
};
const int kUnderlined[8][8] = {
    {},
    {0, 0, 0, 1, 0, 1, 1, 1},
    {0, 1, 0, 0, 1, 0, 1, 1},
    {0, 1, 1, 0, 0, 1, 0, 1},
    {0, 1, 1, 1, 0, 0, 1, 0},
    {0, 0, 1, 1, 1, 0, 0, 1},
    {0, 1, 0, 1, 1, 1, 0, 0},
    {0, 0, 1, 0, 1, 1, 1, 0},
};
const std::array<std::array<const char*, 7>, 9> kCycles = {{
    {"IIX", "IXX", "XIX", "XII", "XXX", "IXI", "XXI"},
    {"ZZI", "ZII", "ZZZ", "IZI", "IZZ", "ZIZ", "IIZ"},
    {"ZZX", "ZXX", "YZY", "XZI", "XYY", "ZXZ", "XXZ"},
    {"ZIX", "ZYY", "XZX", "XZZ", "YXY", "IXZ", "YYI"},
    {"IZX", "IYY", "YIY", "XIZ", "YYX", "ZXI", "YYZ"},
    {"ZZY", "IYX", "XZY", "YIZ", "XXY", "ZYI", "YXI"},
    {"IZY", "ZXY", "XIY", "YZI", "YXX", "ZYZ", "XYI"},
    {"ZIY", "IXY", "YZX", "YII", "YYY", "IYI", "XYZ"},
    {"IIY", "ZYX", "YIX", "YZZ", "XYX", "IYZ", "YXZ"},
}};

ChargeConfiguration random_charges(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-9, 9);
    ChargeConfiguration c;
    for (int l = 0; l < 7; ++l)
        for (int i = 0; i < 8; ++i) c.at(l, i) = d(rng);
    return c;
}

std::array<int, 63> orbit_ids(const GateMatrix& g) {
    const SignedAction act = signed_action(g);
    std::array<int, 63> id{};
    id.fill(-1);
    int next = 0;
    for (int v = 0; v < 63; ++v) {
        if (id[v] != -1) continue;
        int w = v;
        while (id[w] == -1) {
            id[w] = next;
            w = act.perm[w];
        }
        ++next;
    }
    return id;
}

}  // namespace

int main() {
    // 1. Operator census.
    {
        const auto universe = enumerate_universe();
        int sym = 0;
        for (const auto& p : universe)
            if (is_symmetric(p)) ++sym;
        report(1, universe.size() == 63 && sym == 35,
               "operator census: 63 operators, 35 symmetric / 28 antisymmetric");
    }

    const OperatorLabelling lab = OperatorLabelling::standard();
    const FlagTable table = build_table1(lab);

    // 2. Product-table golden test.
    {
        bool ok = true;
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 7; ++j)
                ok = ok && to_string(table.entry(i, j).unsigned_rep()) == kGolden[i][j] &&
                     table.flag_mask[i][j] == (kUnderlined[i][j] == 0);
        report(2, ok, "product table: all 49 cells and the antisymmetry mask match");
    }

    // 3. Row/column structure and cyclic shift patterns.
    {
        const FanoPlane plane = FanoPlane::standard();
        bool ok = true;
        for (int k = 1; k <= 7; ++k) {
            std::set<int> row_sym, col_sym;
            for (int j = 1; j <= 7; ++j) {
                if (table.flag_mask[k][j]) row_sym.insert(j);
                if (table.flag_mask[j][k]) col_sym.insert(j);
            }
            const auto lp = plane.line_points(k);
            const auto dp = plane.dual().line_points(k);
            ok = ok && row_sym == std::set<int>(lp.begin(), lp.end()) &&
                 col_sym == std::set<int>(dp.begin(), dp.end());
        }
        // Commutation pattern: same symmetry class commutes within a row or
        // column, opposite classes anti-commute.
        for (int k = 1; k <= 7 && ok; ++k)
            for (int a = 1; a <= 7; ++a)
                for (int b = a + 1; b <= 7; ++b)
                    ok = ok &&
                         commutes(table.entry(k, a), table.entry(k, b)) ==
                             (table.flag_mask[k][a] == table.flag_mask[k][b]) &&
                         commutes(table.entry(a, k), table.entry(b, k)) ==
                             (table.flag_mask[a][k] == table.flag_mask[b][k]);
        report(3, ok, "row/column structure: 3+4 split, cyclic shifts, commutation pattern");
    }

    const Generators gen = build_generators();
    const GateMatrix id8{DenseIntMatrix::identity(8)};

    // 4. The order-7 generator and its orbits.
    {
        bool ok = gen.alpha == alpha_cnot_word(build_cnots());
        ok = ok && gate_power(gen.alpha, 7) == id8;
        for (int n = 1; n < 7; ++n) ok = ok && !(gate_power(gen.alpha, n) == id8);
        const OrbitDecomposition dec = orbits_under(gen.alpha);
        ok = ok && dec.orbits.size() == 9;
        std::vector<bool> used(9, false);
        for (const auto& orbit : dec.orbits) {
            bool matched = false;
            for (int c = 0; c < 9 && !matched; ++c) {
                if (used[c] || orbit.size() != 7) continue;
                for (int shift = 0; shift < 7 && !matched; ++shift) {
                    bool eq = true;
                    for (int i = 0; i < 7 && eq; ++i)
                        eq = to_string(orbit[(shift + i) % 7].unsigned_rep()) == kCycles[c][i];
                    if (eq) {
                        used[c] = true;
                        matched = true;
                    }
                }
            }
            ok = ok && matched;
        }
        report(4, ok, "order-7 generator: block form = CNOT word, order 7, 9 printed orbits");
    }

    const GeneratedGroup grp = generate_group({gen.alpha, gen.beta, gen.gamma});
    const HexagonModel model = HexagonModel::build();

    // 5. The 168-element group and its preserved partitions.
    {
        bool ok = psl27_relations_hold(gen) && grp.order() == 168;
        for (const GateMatrix* g : {&gen.alpha, &gen.beta, &gen.gamma})
            for (const auto& p : enumerate_universe())
                ok = ok && is_symmetric(conjugate(*g, p)) == is_symmetric(p);
        std::map<std::set<int>, bool> line_class;
        for (const auto& line : model.lines()) {
            std::set<int> pts;
            for (const auto& l : line.labels) pts.insert(model.point_index(l));
            line_class[pts] = line.h2;
        }
        for (const GateMatrix* g : {&gen.alpha, &gen.beta, &gen.gamma})
            for (const auto& [pts, h2] : line_class) {
                std::set<int> img;
                for (int v : pts)
                    img.insert(model.point_index(conjugate(*g, model.op_at(v)).unsigned_rep()));
                auto it = line_class.find(img);
                ok = ok && it != line_class.end() && it->second == h2;
            }
        report(5, ok, "group: relations hold, order 168, partitions preserved");
    }

    // 6. Clifford algebra / so(8) structure.
    report(6, verify_clifford(special_set_lprime()).ok(),
           "Clifford: anticommutators 2*delta, half-commutators, so(8) closure");

    // 7. Generalized hexagon certificate.
    const HexagonCertificate cert = certify_generalized_hexagon(model);
    report(7, cert.ok(), "hexagon: 63+63, commuting closed lines, degree 3, girth 12, diameter 6");

    // 8. Sub-structures after flag removal.
    const FlagRemovalResult comps = flag_removal_components(model);
    {
        bool ok = comps.heawood.n == 14 && comps.coxeter.n == 28 && comps.heawood_isomorphic &&
                  comps.coxeter_isomorphic && cert.h1_count == 21 && cert.h2_count == 42;
        ok = ok && distance2_ovoid(model).covers_each_line_once;
        const auto ids = orbit_ids(gen.alpha);
        int same_orbit = 0;
        for (const auto& line : model.lines()) {
            if (!line.h2) continue;
            std::array<int, 3> p{model.point_index(line.labels[0]),
                                 model.point_index(line.labels[1]),
                                 model.point_index(line.labels[2])};
            if (ids[p[0]] == ids[p[1]] || ids[p[0]] == ids[p[2]] || ids[p[1]] == ids[p[2]])
                ++same_orbit;
        }
        ok = ok && same_orbit == 21;
        report(8, ok, "sub-structures: Heawood/Coxeter components, ovoid, half of H2 same-orbit");
    }

    // 9. Automorphism group and subgeometry copies.
    {
        const HexagonAutomorphisms aut = automorphism_group(model);
        const SubgeometryCopies copies = count_subgeometry_copies(model, aut);
        report(9, aut.order() == 12096 && copies.heawood == 36 && copies.coxeter == 36,
               "automorphisms: order 12096, 36 Heawood and 36 Coxeter copies");
    }

    // 10. Klein quadric.
    {
        bool ok = true;
        for (const auto& p : enumerate_universe())
            ok = ok && (klein_quadric_embedding(p).quadric() == 0) == is_symmetric(p);
        for (const auto& line : model.lines()) {
            const PG52Point a = klein_quadric_embedding(model.op(line.labels[0]));
            const PG52Point b = klein_quadric_embedding(model.op(line.labels[1]));
            const PG52Point c = klein_quadric_embedding(model.op(line.labels[2]));
            for (int i = 0; i < 6; ++i) ok = ok && (a.coords[i] ^ b.coords[i]) == c.coords[i];
        }
        report(10, ok, "Klein quadric: symmetric locus of 35, lines GF(2)-collinear");
    }

    // 11. Mutually unbiased bases.
    {
        const auto sets = build_commuting_sets(model);
        std::vector<ExactBasis> bases;
        for (const auto& s : sets) bases.push_back(joint_eigenbasis(s));
        const UnbiasednessReport rep = certify_unbiased(bases);
        report(11, rep.ok(), "MUBs: 9 exact bases, orthogonal, all 36 pairs unbiased");
    }

    // 12. Quartic invariant cross-form identity.
    {
        std::mt19937_64 rng(kSeed);
        bool ok = true;
        for (int t = 0; t < 1000 && ok; ++t) {
            const ChargeConfiguration c = random_charges(rng);
            const GaussianRational j4 = j4_cremmer(central_charge(c));
            ok = j4.is_real() && j4.re == j4_cartan(c);
        }
        report(12, ok, "J4: Cremmer-Julia equals Cartan on 1000 random configurations (ratio 1)");
    }

    // 13. Invariance under the transported group action.
    {
        std::mt19937_64 rng(kSeed + 1);
        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t) {
            const ChargeConfiguration c = random_charges(rng);
            const mpq_class j4 = j4_cartan(c);
            for (const auto& g : grp.elements)
                ok = ok && j4_cartan(psl27_action_on_charges(g, c)) == j4;
        }
        // Pfaffian invariance under the orthogonal generators directly.
        for (const GateMatrix* g : {&gen.alpha, &gen.beta, &gen.gamma}) {
            GaussianMatrix8 gg, m;
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) gg.a[i][j].re = g->m(i, j);
            std::uniform_int_distribution<int> d(-9, 9);
            for (int i = 0; i < 8; ++i)
                for (int j = i + 1; j < 8; ++j) {
                    m.a[i][j].re = d(rng);
                    m.a[j][i] = -m.a[i][j];
                }
            ok = ok && pfaffian(gg.transpose() * m * gg) == pfaffian(m);
        }
        report(13, ok, "invariance: J4 fixed by all 168 actions, Pfaffian fixed by generators");
    }

    // 14. Canonical truncation.
    {
        std::mt19937_64 rng(kSeed + 2);
        std::uniform_int_distribution<int> d(-9, 9);
        bool ok = true;
        for (int t = 0; t < 1000 && ok; ++t) {
            ChargeConfiguration c;
            std::array<mpz_class, 8> a;
            for (int i = 0; i < 8; ++i) {
                a[i] = d(rng);
                c.at(0, i) = a[i];
            }
            ok = j4_cartan(c) == -mpq_class(cayley_hyperdeterminant(a));
        }
        for (int t = 0; t < 50 && ok; ++t) {
            ChargeConfiguration c;
            c.at(0, 1) = d(rng);
            c.at(0, 2) = d(rng);
            c.at(0, 4) = d(rng);
            c.at(0, 7) = d(rng);
            const EntropyResult e = entropy(c);
            const mpz_class prod = -4 * c.at(0, 1) * c.at(0, 2) * c.at(0, 4) * c.at(0, 7);
            const double expect = kPi * std::sqrt(std::abs(prod.get_d()));
            ok = std::abs(e.entropy - expect) <= 1e-9 * (1 + expect);
        }
        ChargeConfiguration four;
        four.at(0, 1) = 1;
        four.at(0, 2) = 1;
        four.at(0, 4) = 1;
        four.at(0, 7) = -1;
        ok = ok && std::abs(entropy(four).entropy - 2 * kPi) < 1e-12;
        report(14, ok, "truncation: J4 = -D(a), four-charge entropy, S(1,1,1,-1) = 2*pi");
    }

    // 15. Hyperdeterminant symmetry.
    {
        std::mt19937_64 rng(kSeed + 3);
        std::uniform_int_distribution<int> d(-9, 9);
        bool ok = true;
        for (int t = 0; t < 200 && ok; ++t) {
            std::array<mpz_class, 8> a;
            for (int i = 0; i < 8; ++i) a[i] = d(rng);
            const mpz_class det = cayley_hyperdeterminant(a);
            for (const std::array<int, 3>& p :
                 {std::array<int, 3>{1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}})
                ok = ok && cayley_hyperdeterminant(permute_qubits(a, p)) == det;
            std::array<mpz_class, 2> u{d(rng), d(rng)}, v{d(rng), d(rng)}, w{d(rng), d(rng)};
            std::array<mpz_class, 8> prod;
            for (int i = 0; i < 8; ++i) prod[i] = u[(i >> 2) & 1] * v[(i >> 1) & 1] * w[i & 1];
            ok = ok && cayley_hyperdeterminant(prod) == 0;
        }
        report(15, ok, "hyperdeterminant: S3 qubit-permutation invariant, 0 on product states");
    }

    // 16. STU quadruples.
    {
        const auto stu = stu_quadruples(model, comps);
        bool ok = stu.size() == 7;
        for (const auto& q : stu)
            ok = ok && q.min_pairwise_distance == 4 && q.max_pairwise_distance == 4;
        report(16, ok, "STU: seven support quadruples at mutual Coxeter distance 4");
    }

    if (g_failures == 0)
        std::printf("acceptance: all 16 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
