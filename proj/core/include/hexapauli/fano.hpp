#pragma once

#include <array>
#include <string>
#include <vector>

#include "hexapauli/pauli.hpp"

namespace hexapauli {

/// The projective plane of order two. Points and lines are indexed 1..7;
/// incidence is generated from the difference-set shifts: line k carries
/// points {k, k+1, k+3} (mod 7, wrapped into 1..7).
struct FanoPlane {
    // incident[k][j] is true iff point j lies on line k (indices 1..7).
    std::array<std::array<bool, 8>, 8> incident{};

    static FanoPlane standard();
    /// Points and lines swapped.
    FanoPlane dual() const;

    std::array<int, 3> line_points(int line) const;
    std::array<int, 3> point_lines(int point) const;
};

/// Ordered labellings of Fano points and lines by commuting operator sets.
/// line_ops label the rows of the product table, point_ops the columns.
struct OperatorLabelling {
    std::array<SignedPauliOp, 8> line_ops;   // index 1..7: IIX,IXX,XIX,XII,XXX,IXI,XXI
    std::array<SignedPauliOp, 8> point_ops;  // index 1..7: ZZI,ZII,ZZZ,IZI,IZZ,ZIZ,IIZ

    static OperatorLabelling standard();
    bool valid() const;
};

/// The 7x7 grid of signed products line_ops[i] * point_ops[j]; flag_mask is
/// true where the product is a symmetric matrix (a Fano flag).
struct FlagTable {
    std::array<std::array<SignedPauliOp, 8>, 8> entries;
    std::array<std::array<bool, 8>, 8> flag_mask{};

    SignedPauliOp entry(int row, int col) const { return entries[row][col]; }
};

FlagTable build_table1(const OperatorLabelling& labelling);

enum class CellClass { Point, Line, Flag, AntiFlag };

/// The 63-operator partition: 7 points + 7 lines + 21 flags + 28 anti-flags.
CellClass classify_op(const SignedPauliOp& p);

/// Row/column position of an operator in the product table; {0,0} for the
/// marginal labels (points and lines themselves).
struct CellPosition {
    int row = 0;
    int col = 0;
};
CellPosition locate_in_table(const FlagTable& t, const SignedPauliOp& p);

/// One oriented line of the dual Fano plane: the dual-point indices in a
/// cyclic order whose ordered operator product is exactly +line_op.
struct OrientedDualLine {
    int line_index;                 // 1..7, labels the dual line by point_ops[line_index]
    std::array<int, 3> cycle;       // indices into the special set, product is +line_op
};

/// The special set L' (the pairwise anti-commuting orbit); index 1..7.
std::array<SignedPauliOp, 8> special_set_lprime();

/// Orients each dual-Fano line by its unique sign-positive cyclic order of
/// the three L' points on it. Throws if some line admits none.
std::vector<OrientedDualLine> orient_dual_fano();

/// CSV of the product table: entries plus the symmetry flags.
std::string table1_csv();

/// CSV of the table relabelled by the hexagon letter scheme.
std::string table2_csv();

/// DOT export of the Heawood-style point/line incidence graph.
std::string fano_incidence_dot();

/// DOT export of the oriented dual Fano plane (directed edges along each
/// oriented line cycle).
std::string oriented_fano_dot();

}  // namespace hexapauli
