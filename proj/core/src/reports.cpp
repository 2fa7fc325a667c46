#include "hexapauli/reports.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hexapauli/fano.hpp"
#include "hexapauli/graph.hpp"
#include "hexapauli/group.hpp"
#include "hexapauli/hexagon.hpp"
#include "hexapauli/invariants.hpp"
#include "hexapauli/mub.hpp"
#include "hexapauli/pauli.hpp"

namespace hexapauli {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "hexapauli/1";

struct Checker {
    json assertions = json::array();
    bool pass = true;

    void check(const std::string& name, bool ok, const json& detail = nullptr) {
        json a;
        a["name"] = name;
        a["pass"] = ok;
        if (!detail.is_null()) a["detail"] = detail;
        assertions.push_back(a);
        pass = pass && ok;
    }
};

std::string q_str(const mpq_class& q) { return q.get_str(); }

/// Orbit class (0..62 -> orbit id) of the order-7 generator's conjugation
/// action on the operator universe.
std::array<int, 63> alpha_orbit_ids() {
    const SignedAction act = signed_action(build_generators().alpha);
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

json certify_pauli_scope() {
    Checker c;
    const auto universe = enumerate_universe();
    c.check("universe_size_63", universe.size() == 63, universe.size());
    int sym = 0, antisym = 0;
    for (const auto& p : universe) (is_symmetric(p) ? sym : antisym)++;
    c.check("symmetric_count_35", sym == 35, sym);
    c.check("antisymmetric_count_28", antisym == 28, antisym);

    bool roundtrip = true, products = true, commuting = true;
    for (const auto& p : universe) {
        for (int s : {+1, -1}) {
            SignedPauliOp sp = s == 1 ? p : p.negated();
            auto back = from_dense(to_dense(sp));
            roundtrip = roundtrip && back && *back == sp;
        }
        for (const auto& q : universe) {
            const DenseIntMatrix dp = to_dense(p), dq = to_dense(q);
            products = products && to_dense(multiply(p, q)) == dp * dq;
            commuting = commuting && (commutes(p, q) == (dp * dq == dq * dp));
        }
    }
    c.check("dense_roundtrip", roundtrip);
    c.check("product_matches_dense", products);
    c.check("commutation_matches_dense", commuting);

    json r;
    r["scope"] = "pauli";
    r["pass"] = c.pass;
    r["assertions"] = c.assertions;
    return r;
}

json certify_fano_scope() {
    Checker c;
    const auto labelling = OperatorLabelling::standard();
    c.check("labelling_valid", labelling.valid());
    const FlagTable t = build_table1(labelling);

    int flags = 0;
    bool rows_ok = true, cols_ok = true, row_shift = true, col_shift = true;
    const FanoPlane plane = FanoPlane::standard();
    for (int k = 1; k <= 7; ++k) {
        int row_sym = 0, col_sym = 0;
        std::set<int> row_pos, col_pos;
        for (int j = 1; j <= 7; ++j) {
            if (t.flag_mask[k][j]) {
                ++row_sym;
                ++flags;
                row_pos.insert(j);
            }
            if (t.flag_mask[j][k]) {
                ++col_sym;
                col_pos.insert(j);
            }
        }
        rows_ok = rows_ok && row_sym == 3;
        cols_ok = cols_ok && col_sym == 3;
        // Row k is symmetric exactly on the Fano line {k, k+1, k+3}; the
        // column patterns are the shifts of {1,3,4}, i.e. the dual lines.
        const auto line = plane.line_points(k);
        row_shift = row_shift && row_pos == std::set<int>(line.begin(), line.end());
        const auto dual = plane.dual().line_points(k);
        col_shift = col_shift && col_pos == std::set<int>(dual.begin(), dual.end());
    }
    c.check("flag_count_21", flags == 21, flags);
    c.check("row_symmetric_3", rows_ok);
    c.check("col_symmetric_3", cols_ok);
    c.check("row_pattern_cyclic_shifts", row_shift);
    c.check("col_pattern_cyclic_shifts", col_shift);

    const auto special = special_set_lprime();
    bool anti = true, antisym = true;
    for (int j = 1; j <= 7; ++j) {
        antisym = antisym && !is_symmetric(special[j]);
        for (int k = j + 1; k <= 7; ++k) anti = anti && !commutes(special[j], special[k]);
    }
    c.check("special_set_pairwise_anticommuting", anti);
    c.check("special_set_antisymmetric", antisym);
    c.check("oriented_dual_fano_has_7_lines", orient_dual_fano().size() == 7);

    json r;
    r["scope"] = "fano";
    r["pass"] = c.pass;
    r["assertions"] = c.assertions;
    return r;
}

json certify_group_scope(const RunConfig& cfg) {
    Checker c;
    const CnotSet cnots = build_cnots();
    const Generators gen = build_generators();
    const GateMatrix id{DenseIntMatrix::identity(8)};

    c.check("generators_orthogonal",
            gen.alpha.is_orthogonal() && gen.beta.is_orthogonal() && gen.gamma.is_orthogonal());
    c.check("alpha_equals_cnot_word", gen.alpha == alpha_cnot_word(cnots));
    bool alpha7 = gate_power(gen.alpha, 7) == id;
    for (int n = 1; n < 7; ++n) alpha7 = alpha7 && !(gate_power(gen.alpha, n) == id);
    c.check("alpha_order_7", alpha7);
    c.check("beta_order_3", gate_power(gen.beta, 3) == id && !(gen.beta == id) &&
                                !(gate_power(gen.beta, 2) == id));
    c.check("gamma_order_2", gate_power(gen.gamma, 2) == id && !(gen.gamma == id));
    c.check("psl27_relations", psl27_relations_hold(gen));

    const GeneratedGroup grp = generate_group({gen.alpha, gen.beta, gen.gamma}, cfg.budget);
    c.check("group_order_168", grp.order() == 168, grp.order());

    const OrbitDecomposition orbs = orbits_under(gen.alpha);
    bool nine = orbs.orbits.size() == 9;
    for (const auto& o : orbs.orbits) nine = nine && o.size() == 7;
    c.check("alpha_orbits_9x7", nine, orbs.orbits.size());

    c.check("clifford_so8", verify_clifford(special_set_lprime()).ok());

    bool preserves = true;
    const auto universe = enumerate_universe();
    for (const GateMatrix* g : {&gen.alpha, &gen.beta, &gen.gamma})
        for (const auto& p : universe)
            preserves = preserves && is_symmetric(conjugate(*g, p)) == is_symmetric(p);
    c.check("flag_antiflag_partition_preserved", preserves);

    json r;
    r["scope"] = "group";
    r["pass"] = c.pass;
    r["assertions"] = c.assertions;
    return r;
}

json certify_hexagon_scope(const RunConfig& cfg) {
    Checker c;
    const HexagonModel m = HexagonModel::build();
    const HexagonCertificate cert = certify_generalized_hexagon(m);
    c.check("line_closure", cert.line_closure);
    c.check("incidence_biregular_3", cert.biregular_degree3);
    c.check("connected", cert.connected);
    c.check("girth_12", cert.girth == 12, cert.girth);
    c.check("diameter_6", cert.diam == 6, cert.diam);
    c.check("h1_count_21", cert.h1_count == 21, cert.h1_count);
    c.check("h2_count_42", cert.h2_count == 42, cert.h2_count);

    const FlagRemovalResult comps = flag_removal_components(m);
    c.check("heawood_component_14", comps.heawood.n == 14, comps.heawood.n);
    c.check("coxeter_component_28", comps.coxeter.n == 28, comps.coxeter.n);
    c.check("heawood_isomorphic", comps.heawood_isomorphic);
    c.check("coxeter_isomorphic", comps.coxeter_isomorphic);

    const OvoidReport ovoid = distance2_ovoid(m);
    c.check("flags_form_distance2_ovoid", ovoid.covers_each_line_once);
    json ovoid_detail;
    ovoid_detail["exact_cover_count"] = ovoid.exact_cover_count;
    c.check("ovoid_census_reported", true, ovoid_detail);

    const auto orbit_id = alpha_orbit_ids();
    int same_orbit_h2 = 0;
    bool h1h2_preserved = true;
    std::map<std::array<int, 3>, bool> line_class;  // sorted point triple -> h2
    for (const auto& line : m.lines()) {
        std::array<int, 3> pts{m.point_index(line.labels[0]), m.point_index(line.labels[1]),
                               m.point_index(line.labels[2])};
        std::sort(pts.begin(), pts.end());
        line_class[pts] = line.h2;
        if (line.h2 && (orbit_id[pts[0]] == orbit_id[pts[1]] ||
                        orbit_id[pts[0]] == orbit_id[pts[2]] ||
                        orbit_id[pts[1]] == orbit_id[pts[2]]))
            ++same_orbit_h2;
    }
    c.check("h2_lines_same_orbit_half_21", same_orbit_h2 == 21, same_orbit_h2);

    const Generators gen = build_generators();
    for (const GateMatrix* g : {&gen.alpha, &gen.beta, &gen.gamma})
        for (const auto& [pts, h2] : line_class) {
            std::array<int, 3> img;
            for (int i = 0; i < 3; ++i)
                img[i] = m.point_index(conjugate(*g, m.op_at(pts[i])).unsigned_rep());
            std::sort(img.begin(), img.end());
            auto it = line_class.find(img);
            h1h2_preserved = h1h2_preserved && it != line_class.end() && it->second == h2;
        }
    c.check("h1_h2_partition_preserved", h1h2_preserved);

    bool quadric_ok = true, collinear_ok = true;
    for (const auto& p : enumerate_universe())
        quadric_ok = quadric_ok && (klein_quadric_embedding(p).quadric() == 0) == is_symmetric(p);
    for (const auto& [pts, h2] : line_class) {
        const PG52Point a = klein_quadric_embedding(m.op_at(pts[0]));
        const PG52Point b = klein_quadric_embedding(m.op_at(pts[1]));
        const PG52Point d = klein_quadric_embedding(m.op_at(pts[2]));
        for (int i = 0; i < 6; ++i)
            collinear_ok = collinear_ok && ((a.coords[i] ^ b.coords[i]) == d.coords[i]);
    }
    c.check("klein_quadric_symmetric_locus", quadric_ok);
    c.check("lines_gf2_collinear", collinear_ok);

    const HexagonAutomorphisms aut = automorphism_group(m);
    c.check("automorphism_order_12096", aut.order() == 12096, aut.order());
    const SubgeometryCopies copies = count_subgeometry_copies(m, aut);
    c.check("heawood_copies_36", copies.heawood == 36, copies.heawood);
    c.check("coxeter_copies_36", copies.coxeter == 36, copies.coxeter);

    const auto stu = stu_quadruples(m, comps);
    bool stu_ok = stu.size() == 7;
    for (const auto& q : stu)
        stu_ok = stu_ok && q.min_pairwise_distance == 4 && q.max_pairwise_distance == 4;
    c.check("stu_quadruples_distance_4", stu_ok, stu.size());

    (void)cfg;
    json r;
    r["scope"] = "hexagon";
    r["pass"] = c.pass;
    r["assertions"] = c.assertions;
    return r;
}

json certify_mub_scope() {
    Checker c;
    const HexagonModel m = HexagonModel::build();
    const auto sets = build_commuting_sets(m);
    c.check("commuting_sets_9", sets.size() == 9, sets.size());
    std::vector<ExactBasis> bases;
    for (const auto& s : sets) bases.push_back(joint_eigenbasis(s));
    const UnbiasednessReport rep = certify_unbiased(bases);
    c.check("bases_9", rep.bases == 9, rep.bases);
    c.check("within_basis_orthogonal", rep.all_orthogonal);
    c.check("unbiased_pairs_36", rep.unbiased_pairs == 36, rep.unbiased_pairs);
    c.check("all_pairs_unbiased", rep.all_unbiased);

    json r;
    r["scope"] = "mub";
    r["pass"] = c.pass;
    r["assertions"] = c.assertions;
    return r;
}

ChargeConfiguration random_charges(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-9, 9);
    ChargeConfiguration c;
    for (int l = 0; l < 7; ++l)
        for (int i = 0; i < 8; ++i) c.at(l, i) = d(rng);
    return c;
}

json certify_blackhole_scope(const RunConfig& cfg) {
    Checker c;

    const GammaDictionary dict = build_gamma_dictionary();
    std::set<int> keys;
    bool all_antisym = true;
    for (int I = 0; I < 8; ++I)
        for (int J = I + 1; J < 8; ++J) {
            keys.insert(dict.at(I, J).label_key());
            all_antisym = all_antisym && !is_symmetric(dict.at(I, J));
        }
    c.check("gamma_basis_28_distinct_antisymmetric", keys.size() == 28 && all_antisym);

    const auto slots = charge_slots();
    std::set<std::pair<int, int>> covered;
    for (int I = 0; I < 8; ++I)
        for (int J = I + 1; J < 8; ++J) {
            covered.insert({slots[I][J].bold_letter, slots[I][J].x_index});
            covered.insert({slots[I][J].bold_letter, slots[I][J].y_index});
        }
    c.check("charge_slots_cover_56", covered.size() == 56, covered.size());

    // GHZ-type amplitudes (1,0,...,0,1): hyperdeterminant 1, quartic invariant -1.
    ChargeConfiguration ghz;
    ghz.at(0, 0) = 1;
    ghz.at(0, 7) = 1;
    c.check("ghz_hyperdeterminant_1",
            cayley_hyperdeterminant(canonical_truncation(ghz).amplitudes) == 1);
    const EntropyResult ghz_e = entropy(ghz);
    c.check("ghz_j4_minus_1", ghz_e.j4 == -1 && ghz_e.bps_sign == -1, q_str(ghz_e.j4));

    // Four-charge case (1,1,1,-1) on the canonical support: S = 2*pi.
    ChargeConfiguration four;
    four.at(0, 1) = 1;
    four.at(0, 2) = 1;
    four.at(0, 4) = 1;
    four.at(0, 7) = -1;
    const EntropyResult four_e = entropy(four);
    c.check("four_charge_j4_4", four_e.j4 == 4, q_str(four_e.j4));
    c.check("four_charge_entropy_2pi", std::abs(four_e.entropy - 2 * 3.14159265358979323846) < 1e-12,
            four_e.entropy);
    c.check("zero_charges_entropy_0", entropy(ChargeConfiguration{}).entropy == 0.0);

    std::mt19937_64 rng(cfg.seed);
    bool cross_form = true;
    for (int t = 0; t < cfg.trials && cross_form; ++t) {
        const ChargeConfiguration cc = random_charges(rng);
        const GaussianRational j4c = j4_cremmer(central_charge(cc));
        cross_form = j4c.is_real() && j4c.re == j4_cartan(cc);
    }
    c.check("cremmer_equals_cartan", cross_form, cfg.trials);

    const Generators gen = build_generators();
    const GeneratedGroup grp = generate_group({gen.alpha, gen.beta, gen.gamma}, cfg.budget);
    bool invariant = grp.order() == 168;
    const int inv_trials = std::min(cfg.trials, 20);
    for (int t = 0; t < inv_trials && invariant; ++t) {
        const ChargeConfiguration cc = random_charges(rng);
        const mpq_class j4 = j4_cartan(cc);
        for (const auto& g : grp.elements)
            invariant = invariant && j4_cartan(psl27_action_on_charges(g, cc)) == j4;
    }
    c.check("j4_invariant_under_psl27", invariant, inv_trials);

    bool truncation = true, s3 = true;
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < cfg.trials && (truncation && s3); ++t) {
        ChargeConfiguration cc;
        std::array<mpz_class, 8> a;
        for (int i = 0; i < 8; ++i) {
            a[i] = d(rng);
            cc.at(0, i) = a[i];
        }
        const mpz_class det = cayley_hyperdeterminant(a);
        truncation = truncation && j4_cartan(cc) == -mpq_class(det);
        // S3 qubit-permutation invariance of the hyperdeterminant.
        for (const std::array<int, 3>& p :
             {std::array<int, 3>{1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}})
            s3 = s3 && cayley_hyperdeterminant(permute_qubits(a, p)) == det;
    }
    c.check("truncation_j4_equals_minus_hyperdeterminant", truncation);
    c.check("hyperdeterminant_s3_invariant", s3);

    bool product_zero = true;
    for (int t = 0; t < 50; ++t) {
        std::array<mpz_class, 2> u{d(rng), d(rng)}, v{d(rng), d(rng)}, w{d(rng), d(rng)};
        std::array<mpz_class, 8> a;
        for (int i = 0; i < 8; ++i) a[i] = u[(i >> 2) & 1] * v[(i >> 1) & 1] * w[i & 1];
        product_zero = product_zero && cayley_hyperdeterminant(a) == 0;
    }
    c.check("product_states_hyperdeterminant_0", product_zero);

    json r;
    r["scope"] = "blackhole";
    r["pass"] = c.pass;
    r["assertions"] = c.assertions;
    return r;
}

json certify_scope(const std::string& scope, const RunConfig& cfg) {
    if (scope == "pauli") return certify_pauli_scope();
    if (scope == "fano") return certify_fano_scope();
    if (scope == "group") return certify_group_scope(cfg);
    if (scope == "hexagon") return certify_hexagon_scope(cfg);
    if (scope == "mub") return certify_mub_scope();
    if (scope == "blackhole") return certify_blackhole_scope(cfg);
    throw std::invalid_argument("unknown certify scope: " + scope);
}

ChargeConfiguration charges_from_parsed(const json& j) {
    ChargeConfiguration c;
    if (j.contains("charges")) {
        const json& ch = j.at("charges");
        for (int l = 0; l < 7; ++l) {
            const std::string key(1, static_cast<char>('a' + l));
            if (!ch.contains(key)) continue;
            const json& arr = ch.at(key);
            if (!arr.is_array() || arr.size() != 8)
                throw std::invalid_argument("charge letter '" + key + "' must be 8 integers");
            for (int i = 0; i < 8; ++i) c.at(l, i) = arr[i].get<long>();
        }
        return c;
    }
    if (j.contains("amplitudes")) {
        const json& arr = j.at("amplitudes");
        if (!arr.is_array() || arr.size() != 8)
            throw std::invalid_argument("amplitudes must be 8 integers");
        for (int i = 0; i < 8; ++i) c.at(0, i) = arr[i].get<long>();
        return c;
    }
    if (j.contains("four_charge")) {
        const json& arr = j.at("four_charge");
        if (!arr.is_array() || arr.size() != 4)
            throw std::invalid_argument("four_charge must be 4 integers");
        c.at(0, 1) = arr[0].get<long>();
        c.at(0, 2) = arr[1].get<long>();
        c.at(0, 4) = arr[2].get<long>();
        c.at(0, 7) = arr[3].get<long>();
        return c;
    }
    throw std::invalid_argument("expected one of: charges, amplitudes, four_charge");
}

const char* orbit_color(int letter) {
    static const char* kColors[9] = {"red",      "orange",   "green", "brown", "lightblue",
                                     "darkblue", "black",    "purple", "gray"};
    return kColors[letter];
}

std::string component_dot(const std::string& name, const HexagonModel& m, const Graph& g,
                          const std::vector<int>& points) {
    std::ostringstream os;
    os << "graph " << name << " {\n  node [style=filled fontcolor=white];\n";
    for (int v = 0; v < g.n; ++v) {
        const HexLabel lab = m.label_of(m.op_at(points[v]));
        os << "  v" << v << " [label=\"" << to_string(m.op_at(points[v]).unsigned_rep()) << "\\n"
           << lab.str() << "\" fillcolor=" << orbit_color(lab.letter) << "];\n";
    }
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace

CertifyReport certify(const std::string& scope, const RunConfig& cfg) {
    json top;
    top["schema"] = kSchema;
    top["seed"] = cfg.seed;
    top["trials"] = cfg.trials;
    top["budget"] = cfg.budget;
    bool pass = true;
    json scopes = json::array();
    if (scope == "all") {
        for (const char* s : {"pauli", "fano", "group", "hexagon", "mub", "blackhole"}) {
            json r = certify_scope(s, cfg);
            pass = pass && r["pass"].get<bool>();
            scopes.push_back(std::move(r));
        }
    } else {
        json r = certify_scope(scope, cfg);
        pass = r["pass"].get<bool>();
        scopes.push_back(std::move(r));
    }
    top["scopes"] = std::move(scopes);
    top["pass"] = pass;
    return {pass, top.dump(2) + "\n"};
}

std::string orbit_report_json() {
    const Generators gen = build_generators();
    json top;
    top["schema"] = kSchema;
    json gens = json::object();
    const std::array<std::pair<std::string, const GateMatrix*>, 3> named = {
        {{"alpha", &gen.alpha}, {"beta", &gen.beta}, {"gamma", &gen.gamma}}};
    for (const auto& [name, g] : named) {
        const OrbitDecomposition dec = orbits_under(*g);
        json orbits = json::array();
        for (const auto& orb : dec.orbits) {
            json members = json::array();
            for (const auto& p : orb) members.push_back(to_string(p));
            json o;
            o["id"] = to_string(orb.front().unsigned_rep());
            o["size"] = orb.size();
            o["cycle"] = std::move(members);
            orbits.push_back(std::move(o));
        }
        gens[name] = std::move(orbits);
    }
    top["generators"] = std::move(gens);
    return top.dump(2) + "\n";
}

std::string mub_report_json() {
    const HexagonModel m = HexagonModel::build();
    const auto sets = build_commuting_sets(m);
    std::vector<ExactBasis> bases;
    json jbases = json::array();
    for (const auto& s : sets) {
        bases.push_back(joint_eigenbasis(s));
        const ExactBasis& b = bases.back();
        json jb;
        jb["label"] = s.label;
        json members = json::array();
        for (const auto& op : s.members) members.push_back(to_string(op));
        jb["commuting_set"] = std::move(members);
        json vecs = json::array();
        for (int i = 0; i < 8; ++i) {
            json v = json::array();
            for (int k = 0; k < 8; ++k)
                v.push_back(json::array({b.vectors[i][k].re, b.vectors[i][k].im}));
            vecs.push_back(std::move(v));
        }
        jb["vectors"] = std::move(vecs);
        jb["norm_squares"] = b.norm_squares;
        jbases.push_back(std::move(jb));
    }
    const UnbiasednessReport rep = certify_unbiased(bases);
    json top;
    top["schema"] = kSchema;
    top["bases"] = std::move(jbases);
    top["unbiasedness"] = {{"bases", rep.bases},
                           {"unbiased_pairs", rep.unbiased_pairs},
                           {"all_orthogonal", rep.all_orthogonal},
                           {"all_unbiased", rep.all_unbiased},
                           {"pass", rep.ok()}};
    return top.dump(2) + "\n";
}

std::string entropy_report_json(const std::string& charges_json) {
    const json input = json::parse(charges_json);
    const ChargeConfiguration c = charges_from_parsed(input);

    const mpq_class j4 = j4_cartan(c);
    const GaussianRational j4c = j4_cremmer(central_charge(c));
    const EntropyResult e = entropy(c);

    json top;
    top["schema"] = kSchema;
    top["j4_cartan"] = q_str(j4);
    top["j4_cremmer"] = {{"re", q_str(j4c.re)}, {"im", q_str(j4c.im)}};
    top["forms_equal"] = j4c.is_real() && j4c.re == j4;
    top["bps"] = e.bps_sign > 0 ? "BPS" : (e.bps_sign < 0 ? "non-BPS" : "zero");
    top["entropy"] = e.entropy;

    bool a_only = true;
    for (int l = 1; l < 7 && a_only; ++l)
        for (int i = 0; i < 8; ++i) a_only = a_only && c.at(l, i) == 0;
    if (a_only) {
        const CanonicalTruncation t = canonical_truncation(c);
        top["hyperdeterminant"] = cayley_hyperdeterminant(t.amplitudes).get_str();
        json z = json::array();
        for (const auto& n : t.z_numerators) z.push_back(n.get_str());
        top["z_numerators_times_sqrt8"] = std::move(z);
    }
    return top.dump(2) + "\n";
}

std::string export_graph_dot(const std::string& which) {
    if (which == "fano_incidence") return fano_incidence_dot();
    if (which == "oriented_fano") return oriented_fano_dot();
    const HexagonModel m = HexagonModel::build();
    if (which == "hexagon") {
        const Graph g = m.collinearity_graph();
        std::vector<int> idx(63);
        for (int i = 0; i < 63; ++i) idx[i] = i;
        return component_dot("hexagon_collinearity", m, g, idx);
    }
    const FlagRemovalResult comps = flag_removal_components(m);
    if (which == "heawood") return component_dot("heawood", m, comps.heawood, comps.heawood_points);
    if (which == "coxeter") return component_dot("coxeter", m, comps.coxeter, comps.coxeter_points);
    throw std::invalid_argument("unknown graph export: " + which);
}

}  // namespace hexapauli
