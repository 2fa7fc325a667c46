#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hexapauli/fano.hpp"
#include "hexapauli/graph.hpp"
#include "hexapauli/group.hpp"
#include "hexapauli/pauli.hpp"

namespace hexapauli {

/// Point label of the hexagon: letter a..i (0..8) with index 1..7.
struct HexLabel {
    int letter = 0;  // 0..6 = a..g (product-table diagonals), 7 = h (points), 8 = i (lines)
    int index = 1;   // 1..7

    bool operator==(const HexLabel&) const = default;
    auto operator<=>(const HexLabel&) const = default;
    std::string str() const { return std::string(1, "abcdefghi"[letter]) + std::to_string(index); }
};

enum class LineFamily { A = 0, B, C, D, E, F, G, H, I };

struct HexLine {
    LineFamily family;
    int index;  // 1..7
    std::array<HexLabel, 3> labels;
    bool h2;    // H2 (flag/anti-flag/anti-flag) vs H1 (point/line/flag)
    std::string str() const {
        return std::string(1, "ABCDEFGHI"[static_cast<int>(family)]) + std::to_string(index);
    }
};

/// The split Cayley hexagon of order two realized on the 63 operators.
class HexagonModel {
public:
    /// Builds the labelled model and certifies line-triple closure; throws on
    /// any triple violating the commuting/product-closure property.
    static HexagonModel build();

    const std::array<std::array<SignedPauliOp, 8>, 9>& point_ops() const { return point_ops_; }
    const std::vector<HexLine>& lines() const { return lines_; }

    SignedPauliOp op(const HexLabel& l) const { return point_ops_[l.letter][l.index]; }
    HexLabel label_of(const SignedPauliOp& p) const;
    /// Universe index (0..62) of a point by its operator label.
    int point_index(const SignedPauliOp& p) const;
    int point_index(const HexLabel& l) const { return point_index(op(l)); }
    SignedPauliOp op_at(int point_index) const { return universe_[point_index]; }

    /// Point/line incidence graph: vertices 0..62 points, 63..125 lines.
    Graph incidence_graph() const;
    /// Two points adjacent iff collinear.
    Graph collinearity_graph() const;
    /// Lines through a point, as indices into lines().
    std::vector<int> lines_through(int point_index) const;

private:
    std::array<std::array<SignedPauliOp, 8>, 9> point_ops_{};
    std::vector<HexLine> lines_;
    std::vector<SignedPauliOp> universe_;
    std::map<int, HexLabel> key_to_label_;
    std::map<int, int> key_to_index_;
};

struct HexagonCertificate {
    bool biregular_degree3 = false;
    bool connected = false;
    int girth = 0;
    int diam = 0;
    bool line_closure = false;
    int h1_count = 0;
    int h2_count = 0;
    bool ok() const {
        return biregular_degree3 && connected && girth == 12 && diam == 6 && line_closure &&
               h1_count == 21 && h2_count == 42;
    }
};
HexagonCertificate certify_generalized_hexagon(const HexagonModel& m);

/// Collinearity components left after deleting the 21 flag-type points,
/// keeping only lines fully inside the remainder as edges.
struct FlagRemovalResult {
    Graph heawood;                 // 14 vertices
    Graph coxeter;                 // 28 vertices
    std::vector<int> heawood_points;  // universe indices
    std::vector<int> coxeter_points;
    bool heawood_isomorphic = false;
    bool coxeter_isomorphic = false;
};
FlagRemovalResult flag_removal_components(const HexagonModel& m);

/// Reference graphs built from first principles (Fano incidence; Kneser
/// triples of a 7-set minus a Fano heptad).
Graph reference_heawood_graph();
Graph reference_coxeter_graph();

/// Full automorphism group of the point-line structure.
struct HexagonAutomorphisms {
    std::vector<std::vector<int>> elements;  // point permutations, 0..62
    std::size_t order() const { return elements.size(); }
};
HexagonAutomorphisms automorphism_group(const HexagonModel& m,
                                        std::size_t node_budget = 1000000000);

/// Orbit sizes of the canonical Heawood (h,i points) and Coxeter (anti-flag
/// points) subsets under the full automorphism group.
struct SubgeometryCopies {
    std::size_t heawood = 0;
    std::size_t coxeter = 0;
};
SubgeometryCopies count_subgeometry_copies(const HexagonModel& m,
                                           const HexagonAutomorphisms& aut);

/// The 21 flag-type points as a distance-2-ovoid, plus the census of all
/// exact covers of the 63 lines by points.
struct OvoidReport {
    std::vector<int> flag_points;     // universe indices, size 21
    bool covers_each_line_once = false;
    std::size_t exact_cover_count = 0;
};
OvoidReport distance2_ovoid(const HexagonModel& m);

/// (a|b) coordinates in PG(5,2); quadric form Q = a.b.
struct PG52Point {
    std::array<std::uint8_t, 6> coords{};
    int quadric() const { return (coords[0] * coords[3] + coords[1] * coords[4] + coords[2] * coords[5]) % 2; }
    bool operator==(const PG52Point&) const = default;
    auto operator<=>(const PG52Point&) const = default;
};
PG52Point klein_quadric_embedding(const SignedPauliOp& p);

/// The seven STU charge-support quadruples {g_k,c_k,e_k,f_k}, as vertex
/// quadruples of the Coxeter component, with their pairwise graph distances.
struct StuQuadruple {
    int k;
    std::array<HexLabel, 4> labels;
    std::array<int, 4> coxeter_vertices;
    int min_pairwise_distance;
    int max_pairwise_distance;
};
std::vector<StuQuadruple> stu_quadruples(const HexagonModel& m, const FlagRemovalResult& comps);

}  // namespace hexapauli
