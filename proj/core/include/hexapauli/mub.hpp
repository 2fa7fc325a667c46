#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hexapauli/hexagon.hpp"
#include "hexapauli/pauli.hpp"

namespace hexapauli {

/// Gaussian integer, exact.
struct GaussInt {
    std::int64_t re = 0, im = 0;
    bool operator==(const GaussInt&) const = default;
    GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
    GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
    GaussInt operator*(const GaussInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussInt conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    std::int64_t norm() const { return re * re + im * im; }
};

/// A maximal commuting set B_1..B_9 of seven operators.
struct CommutingSet {
    std::string label;
    std::array<SignedPauliOp, 7> members;
};

/// The nine maximal commuting sets read off the hexagon: B_1..B_7 are the
/// unions of the three lines through each special (black-bullet) point,
/// B_8 and B_9 are the point and line labelling sets.
std::vector<CommutingSet> build_commuting_sets(const HexagonModel& m);

/// One exact joint eigenbasis: 8 unnormalized Gaussian-integer vectors.
struct ExactBasis {
    std::array<std::array<GaussInt, 8>, 8> vectors;
    std::array<std::int64_t, 8> norm_squares;
};

/// Joint eigenbasis of a commuting set via rank-1 projector products over
/// the sign patterns of three independent Hermitianized generators.
ExactBasis joint_eigenbasis(const CommutingSet& s);

struct UnbiasednessReport {
    int bases = 0;
    int unbiased_pairs = 0;        // pairs of bases that are exactly unbiased
    bool all_orthogonal = false;   // within-basis orthogonality
    bool all_unbiased = false;     // every cross-basis pair satisfies the 1/8 identity
    bool ok() const { return bases == 9 && unbiased_pairs == 36 && all_orthogonal && all_unbiased; }
};

/// Exact integer identity |<u,v>|^2 * 8 = <u,u><v,v> for all cross-basis
/// vector pairs; 0-or-full overlap within a basis.
UnbiasednessReport certify_unbiased(const std::vector<ExactBasis>& bases);

}  // namespace hexapauli
