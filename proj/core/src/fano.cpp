#include "hexapauli/fano.hpp"

#include <sstream>
#include <stdexcept>

namespace hexapauli {

namespace {

int wrap7(int k) {
    k %= 7;
    if (k <= 0) k += 7;
    return k;
}

}  // namespace

FanoPlane FanoPlane::standard() {
    FanoPlane f;
    for (int k = 1; k <= 7; ++k) {
        f.incident[k][wrap7(k)] = true;
        f.incident[k][wrap7(k + 1)] = true;
        f.incident[k][wrap7(k + 3)] = true;
    }
    return f;
}

FanoPlane FanoPlane::dual() const {
    FanoPlane d;
    for (int k = 1; k <= 7; ++k)
        for (int j = 1; j <= 7; ++j) d.incident[j][k] = incident[k][j];
    return d;
}

std::array<int, 3> FanoPlane::line_points(int line) const {
    std::array<int, 3> pts{};
    int n = 0;
    for (int j = 1; j <= 7; ++j)
        if (incident[line][j]) pts[n++] = j;
    if (n != 3) throw std::logic_error("Fano line without three points");
    return pts;
}

std::array<int, 3> FanoPlane::point_lines(int point) const {
    std::array<int, 3> ls{};
    int n = 0;
    for (int k = 1; k <= 7; ++k)
        if (incident[k][point]) ls[n++] = k;
    if (n != 3) throw std::logic_error("Fano point not on three lines");
    return ls;
}

OperatorLabelling OperatorLabelling::standard() {
    OperatorLabelling l;
    const char* lines[] = {"IIX", "IXX", "XIX", "XII", "XXX", "IXI", "XXI"};
    const char* points[] = {"ZZI", "ZII", "ZZZ", "IZI", "IZZ", "ZIZ", "IIZ"};
    for (int i = 0; i < 7; ++i) {
        l.line_ops[i + 1] = parse_op(lines[i]);
        l.point_ops[i + 1] = parse_op(points[i]);
    }
    return l;
}

bool OperatorLabelling::valid() const {
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            if (!commutes(line_ops[i], line_ops[j])) return false;
            if (!commutes(point_ops[i], point_ops[j])) return false;
        }
    return true;
}

FlagTable build_table1(const OperatorLabelling& labelling) {
    FlagTable t;
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            t.entries[i][j] = multiply(labelling.line_ops[i], labelling.point_ops[j]);
            t.flag_mask[i][j] = is_symmetric(t.entries[i][j]);
        }
    return t;
}

CellClass classify_op(const SignedPauliOp& p) {
    const auto lab = OperatorLabelling::standard();
    for (int i = 1; i <= 7; ++i) {
        if (lab.point_ops[i].unsigned_rep() == p.unsigned_rep()) return CellClass::Point;
        if (lab.line_ops[i].unsigned_rep() == p.unsigned_rep()) return CellClass::Line;
    }
    return is_symmetric(p) ? CellClass::Flag : CellClass::AntiFlag;
}

CellPosition locate_in_table(const FlagTable& t, const SignedPauliOp& p) {
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            if (t.entries[i][j].unsigned_rep() == p.unsigned_rep()) return {i, j};
    return {0, 0};
}

std::array<SignedPauliOp, 8> special_set_lprime() {
    std::array<SignedPauliOp, 8> s;
    const char* ops[] = {"IIY", "ZYX", "YIX", "YZZ", "XYX", "IYZ", "YXZ"};
    for (int i = 0; i < 7; ++i) s[i + 1] = parse_op(ops[i]);
    return s;
}

std::vector<OrientedDualLine> orient_dual_fano() {
    const auto lab = OperatorLabelling::standard();
    const auto lp = special_set_lprime();
    const auto fano = FanoPlane::standard();
    std::vector<OrientedDualLine> out;
    // Dual line j carries the dual points (original lines) through point j.
    for (int j = 1; j <= 7; ++j) {
        const auto ks = fano.point_lines(j);
        const SignedPauliOp target = lab.point_ops[j];
        bool found = false;
        const std::array<std::array<int, 3>, 2> cycles = {{{0, 1, 2}, {0, 2, 1}}};
        for (const auto& c : cycles) {
            const SignedPauliOp prod =
                multiply(multiply(lp[ks[c[0]]], lp[ks[c[1]]]), lp[ks[c[2]]]);
            if (prod == target) {
                out.push_back({j, {ks[c[0]], ks[c[1]], ks[c[2]]}});
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("dual Fano line admits no consistent orientation");
    }
    return out;
}

std::string table1_csv() {
    const auto lab = OperatorLabelling::standard();
    const auto t = build_table1(lab);
    std::ostringstream os;
    os << "lines/points";
    for (int j = 1; j <= 7; ++j) os << ',' << to_string(lab.point_ops[j]);
    os << '\n';
    for (int i = 1; i <= 7; ++i) {
        os << to_string(lab.line_ops[i]);
        for (int j = 1; j <= 7; ++j) {
            os << ',' << to_string(t.entries[i][j].unsigned_rep())
               << (t.flag_mask[i][j] ? ",symmetric" : ",antisymmetric");
        }
        os << '\n';
    }
    return os.str();
}

std::string table2_csv() {
    std::ostringstream os;
    os << "L/P";
    for (int j = 1; j <= 7; ++j) os << ",h" << j;
    os << '\n';
    for (int k = 1; k <= 7; ++k) {
        os << 'i' << k;
        for (int j = 1; j <= 7; ++j) {
            const char letter = static_cast<char>('a' + (((j - k) % 7 + 7) % 7));
            os << ',' << letter << k;
        }
        os << '\n';
    }
    return os.str();
}

std::string fano_incidence_dot() {
    const auto lab = OperatorLabelling::standard();
    const auto fano = FanoPlane::standard();
    std::ostringstream os;
    os << "graph heawood {\n";
    for (int j = 1; j <= 7; ++j)
        os << "  p" << j << " [label=\"" << to_string(lab.point_ops[j])
           << "\", shape=circle];\n";
    for (int k = 1; k <= 7; ++k)
        os << "  l" << k << " [label=\"" << to_string(lab.line_ops[k])
           << "\", shape=box];\n";
    for (int k = 1; k <= 7; ++k)
        for (int j = 1; j <= 7; ++j)
            if (fano.incident[k][j]) os << "  l" << k << " -- p" << j << ";\n";
    os << "}\n";
    return os.str();
}

std::string oriented_fano_dot() {
    const auto lab = OperatorLabelling::standard();
    const auto lp = special_set_lprime();
    const auto oriented = orient_dual_fano();
    std::ostringstream os;
    os << "digraph oriented_dual_fano {\n";
    for (int k = 1; k <= 7; ++k)
        os << "  q" << k << " [label=\"" << to_string(lp[k]) << "\"];\n";
    for (const auto& ol : oriented) {
        os << "  // line " << to_string(lab.point_ops[ol.line_index]) << "\n";
        for (int i = 0; i < 3; ++i)
            os << "  q" << ol.cycle[i] << " -> q" << ol.cycle[(i + 1) % 3] << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace hexapauli
