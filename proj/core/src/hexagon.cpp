#include "hexapauli/hexagon.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hexapauli {

namespace {

int wrap7(int k) {
    k %= 7;
    if (k <= 0) k += 7;
    return k;
}

}  // namespace

HexagonModel HexagonModel::build() {
    HexagonModel m;
    const auto lab = OperatorLabelling::standard();
    const auto table = build_table1(lab);

    // Letters a..g run along the shifted diagonals of the product table:
    // letter l sits at (row k, column k+l); h_k and i_k are the marginals.
    for (int k = 1; k <= 7; ++k) {
        for (int l = 0; l < 7; ++l)
            m.point_ops_[l][k] = table.entries[k][wrap7(k + l)].unsigned_rep();
        m.point_ops_[7][k] = lab.point_ops[k].unsigned_rep();
        m.point_ops_[8][k] = lab.line_ops[k].unsigned_rep();
    }

    m.universe_ = enumerate_universe();
    for (int i = 0; i < 63; ++i) m.key_to_index_[m.universe_[i].label_key()] = i;
    for (int l = 0; l < 9; ++l)
        for (int k = 1; k <= 7; ++k)
            m.key_to_label_[m.point_ops_[l][k].label_key()] = HexLabel{l, k};
    if (m.key_to_label_.size() != 63) throw std::logic_error("hexagon labelling is not a bijection");

    const int a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, g = 6, h = 7, i = 8;
    struct FamilySpec {
        LineFamily fam;
        std::array<std::pair<int, int>, 3> parts;  // (letter, index offset)
        bool h2;
    };
    const std::vector<FamilySpec> fams = {
        {LineFamily::A, {{{g, +1}, {c, +3}, {a, +4}}}, true},
        {LineFamily::B, {{{f, -2}, {b, 0}, {g, +1}}}, true},
        {LineFamily::C, {{{c, -2}, {b, 0}, {c, +1}}}, true},
        {LineFamily::D, {{{d, -1}, {g, +1}, {e, +2}}}, true},
        {LineFamily::E, {{{e, +1}, {e, +3}, {a, +4}}}, true},
        {LineFamily::F, {{{d, -1}, {f, +1}, {f, +2}}}, true},
        {LineFamily::G, {{{d, -1}, {h, +2}, {i, -1}}}, false},
        {LineFamily::H, {{{a, +4}, {h, +4}, {i, +4}}}, false},
        {LineFamily::I, {{{b, 0}, {h, +1}, {i, 0}}}, false},
    };
    for (const auto& spec : fams)
        for (int k = 1; k <= 7; ++k) {
            HexLine line;
            line.family = spec.fam;
            line.index = k;
            line.h2 = spec.h2;
            for (int t = 0; t < 3; ++t)
                line.labels[t] = HexLabel{spec.parts[t].first, wrap7(k + spec.parts[t].second)};
            // Closure check: the triple pairwise commutes and the product of
            // any two is, up to a sign, the third.
            const SignedPauliOp p0 = m.op(line.labels[0]);
            const SignedPauliOp p1 = m.op(line.labels[1]);
            const SignedPauliOp p2 = m.op(line.labels[2]);
            if (!commutes(p0, p1) || !commutes(p1, p2) || !commutes(p0, p2))
                throw std::logic_error("hexagon line " + line.str() + " is not commuting");
            if (multiply(p0, p1).unsigned_rep() != p2.unsigned_rep())
                throw std::logic_error("hexagon line " + line.str() + " violates product closure");
            m.lines_.push_back(line);
        }
    return m;
}

HexLabel HexagonModel::label_of(const SignedPauliOp& p) const {
    return key_to_label_.at(p.unsigned_rep().label_key());
}

int HexagonModel::point_index(const SignedPauliOp& p) const {
    return key_to_index_.at(p.unsigned_rep().label_key());
}

Graph HexagonModel::incidence_graph() const {
    Graph g(126);
    for (int li = 0; li < static_cast<int>(lines_.size()); ++li)
        for (const auto& l : lines_[li].labels) g.add_edge(point_index(l), 63 + li);
    return g;
}

Graph HexagonModel::collinearity_graph() const {
    Graph g(63);
    std::set<std::pair<int, int>> edges;
    for (const auto& line : lines_)
        for (int s = 0; s < 3; ++s)
            for (int t = s + 1; t < 3; ++t) {
                int u = point_index(line.labels[s]);
                int v = point_index(line.labels[t]);
                if (u > v) std::swap(u, v);
                if (edges.insert({u, v}).second) g.add_edge(u, v);
            }
    return g;
}

std::vector<int> HexagonModel::lines_through(int pt) const {
    std::vector<int> out;
    for (int li = 0; li < static_cast<int>(lines_.size()); ++li)
        for (const auto& l : lines_[li].labels)
            if (point_index(l) == pt) {
                out.push_back(li);
                break;
            }
    return out;
}

HexagonCertificate certify_generalized_hexagon(const HexagonModel& m) {
    HexagonCertificate cert;
    const Graph inc = m.incidence_graph();
    cert.biregular_degree3 = is_regular(inc, 3);
    cert.connected = is_connected(inc);
    cert.girth = girth(inc);
    cert.diam = diameter(inc);
    cert.line_closure = true;  // enforced during construction
    for (const auto& l : m.lines())
        (l.h2 ? cert.h2_count : cert.h1_count)++;
    return cert;
}

FlagRemovalResult flag_removal_components(const HexagonModel& m) {
    FlagRemovalResult res;
    std::vector<bool> is_flag(63, false);
    for (int i = 0; i < 63; ++i)
        if (classify_op(m.op_at(i)) == CellClass::Flag) is_flag[i] = true;

    // Surviving collinearity: every line carries exactly one flag, so each
    // line contributes its single non-flag pair as an edge.
    Graph g(63);
    for (const auto& line : m.lines()) {
        std::array<int, 3> pts;
        for (int t = 0; t < 3; ++t) pts[t] = m.point_index(line.labels[t]);
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (!is_flag[pts[a]] && !is_flag[pts[b]]) g.add_edge(pts[a], pts[b]);
    }
    std::vector<int> remainder;
    for (int i = 0; i < 63; ++i)
        if (!is_flag[i]) remainder.push_back(i);

    Graph whole = induced_subgraph(g, remainder);
    const auto comps = connected_components(whole);
    std::vector<std::vector<int>> real_comps;
    for (const auto& comp : comps)
        if (comp.size() > 1) real_comps.push_back(comp);
    if (real_comps.size() != 2)
        throw std::logic_error("flag removal did not produce two components");
    for (const auto& comp : real_comps) {
        std::vector<int> verts;
        for (int v : comp) verts.push_back(remainder[v]);
        Graph sub = induced_subgraph(whole, comp);
        if (comp.size() == 14) {
            res.heawood = sub;
            res.heawood_points = verts;
        } else if (comp.size() == 28) {
            res.coxeter = sub;
            res.coxeter_points = verts;
        } else {
            throw std::logic_error("unexpected component size after flag removal");
        }
    }
    res.heawood_isomorphic = are_isomorphic(res.heawood, reference_heawood_graph());
    res.coxeter_isomorphic = are_isomorphic(res.coxeter, reference_coxeter_graph());
    return res;
}

Graph reference_heawood_graph() {
    const auto fano = FanoPlane::standard();
    Graph g(14);  // 0..6 points, 7..13 lines
    for (int k = 1; k <= 7; ++k)
        for (int j = 1; j <= 7; ++j)
            if (fano.incident[k][j]) g.add_edge(j - 1, 7 + k - 1);
    return g;
}

Graph reference_coxeter_graph() {
    // Kneser graph on the 35 triples from a 7-set, restricted to the 28
    // triples that are not Fano lines; adjacency is disjointness.
    const auto fano = FanoPlane::standard();
    std::set<std::array<int, 3>> fano_lines;
    for (int k = 1; k <= 7; ++k) {
        auto pts = fano.line_points(k);
        std::sort(pts.begin(), pts.end());
        fano_lines.insert(pts);
    }
    std::vector<std::array<int, 3>> triples;
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b)
            for (int c = b + 1; c <= 7; ++c) {
                const std::array<int, 3> t{a, b, c};
                if (!fano_lines.count(t)) triples.push_back(t);
            }
    if (triples.size() != 28) throw std::logic_error("expected 28 non-line triples");
    Graph g(28);
    for (int i = 0; i < 28; ++i)
        for (int j = i + 1; j < 28; ++j) {
            bool disjoint = true;
            for (int x : triples[i])
                for (int y : triples[j])
                    if (x == y) disjoint = false;
            if (disjoint) g.add_edge(i, j);
        }
    return g;
}

HexagonAutomorphisms automorphism_group(const HexagonModel& m, std::size_t node_budget) {
    const Graph coll = m.collinearity_graph();
    auto autos = all_automorphisms(coll, node_budget);

    // Line preservation filter: every hexagon line must map to a line.
    std::set<std::array<int, 3>> line_set;
    for (const auto& line : m.lines()) {
        std::array<int, 3> pts;
        for (int t = 0; t < 3; ++t) pts[t] = m.point_index(line.labels[t]);
        std::sort(pts.begin(), pts.end());
        line_set.insert(pts);
    }
    HexagonAutomorphisms out;
    for (auto& perm : autos) {
        bool ok = true;
        for (const auto& line : line_set) {
            std::array<int, 3> img{perm[line[0]], perm[line[1]], perm[line[2]]};
            std::sort(img.begin(), img.end());
            if (!line_set.count(img)) {
                ok = false;
                break;
            }
        }
        if (ok) out.elements.push_back(std::move(perm));
    }
    return out;
}

SubgeometryCopies count_subgeometry_copies(const HexagonModel& m,
                                           const HexagonAutomorphisms& aut) {
    std::vector<int> heawood_set, coxeter_set;
    for (int i = 0; i < 63; ++i) {
        const CellClass c = classify_op(m.op_at(i));
        if (c == CellClass::Point || c == CellClass::Line) heawood_set.push_back(i);
        if (c == CellClass::AntiFlag) coxeter_set.push_back(i);
    }
    auto orbit_size = [&](const std::vector<int>& base) {
        std::set<std::vector<int>> images;
        for (const auto& perm : aut.elements) {
            std::vector<int> img;
            img.reserve(base.size());
            for (int v : base) img.push_back(perm[v]);
            std::sort(img.begin(), img.end());
            images.insert(std::move(img));
        }
        return images.size();
    };
    return {orbit_size(heawood_set), orbit_size(coxeter_set)};
}

OvoidReport distance2_ovoid(const HexagonModel& m) {
    OvoidReport rep;
    for (int i = 0; i < 63; ++i)
        if (classify_op(m.op_at(i)) == CellClass::Flag) rep.flag_points.push_back(i);

    std::vector<int> cover_count(63, 0);
    for (int li = 0; li < static_cast<int>(m.lines().size()); ++li)
        for (const auto& l : m.lines()[li].labels) {
            const int pt = m.point_index(l);
            if (std::find(rep.flag_points.begin(), rep.flag_points.end(), pt) !=
                rep.flag_points.end())
                cover_count[li]++;
        }
    rep.covers_each_line_once =
        std::all_of(cover_count.begin(), cover_count.end(), [](int c) { return c == 1; });

    // Exact-cover census: each point covers the (three) lines through it.
    std::vector<std::uint64_t> sets(63, 0);
    for (int pt = 0; pt < 63; ++pt)
        for (int li : m.lines_through(pt)) sets[pt] |= 1ull << li;
    std::size_t count = 0;
    exact_cover(63, sets, [&](const std::vector<int>&) { ++count; });
    rep.exact_cover_count = count;
    return rep;
}

PG52Point klein_quadric_embedding(const SignedPauliOp& p) {
    PG52Point pt;
    for (int q = 0; q < 3; ++q) {
        pt.coords[q] = p.x[q];
        pt.coords[3 + q] = p.z[q];
    }
    return pt;
}

std::vector<StuQuadruple> stu_quadruples(const HexagonModel& m, const FlagRemovalResult& comps) {
    std::vector<int> cox_index(63, -1);
    for (std::size_t i = 0; i < comps.coxeter_points.size(); ++i)
        cox_index[comps.coxeter_points[i]] = static_cast<int>(i);

    std::vector<StuQuadruple> out;
    const int letters[4] = {6, 2, 4, 5};  // g, c, e, f
    for (int k = 1; k <= 7; ++k) {
        StuQuadruple q;
        q.k = k;
        for (int t = 0; t < 4; ++t) {
            q.labels[t] = HexLabel{letters[t], k};
            const int uni = m.point_index(q.labels[t]);
            q.coxeter_vertices[t] = cox_index[uni];
            if (q.coxeter_vertices[t] < 0)
                throw std::logic_error("STU support point is not in the Coxeter component");
        }
        q.min_pairwise_distance = 63;
        q.max_pairwise_distance = 0;
        for (int s = 0; s < 4; ++s) {
            const auto dist = bfs_distances(comps.coxeter, q.coxeter_vertices[s]);
            for (int t = s + 1; t < 4; ++t) {
                const int d = dist[q.coxeter_vertices[t]];
                q.min_pairwise_distance = std::min(q.min_pairwise_distance, d);
                q.max_pairwise_distance = std::max(q.max_pairwise_distance, d);
            }
        }
        out.push_back(q);
    }
    return out;
}

}  // namespace hexapauli
