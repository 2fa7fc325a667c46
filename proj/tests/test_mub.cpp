#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "hexapauli/mub.hpp"

using namespace hexapauli;

namespace {

std::set<std::string> member_names(const CommutingSet& s) {
    std::set<std::string> names;
    for (const auto& op : s.members) names.insert(to_string(op.unsigned_rep()));
    return names;
}

GaussInt inner(const std::array<GaussInt, 8>& u, const std::array<GaussInt, 8>& v) {
    GaussInt s;
    for (int k = 0; k < 8; ++k) s = s + u[k].conj() * v[k];
    return s;
}

}  // namespace

TEST_SUITE("mub") {

TEST_CASE("nine maximal commuting sets with the printed contents") {
    const HexagonModel m = HexagonModel::build();
    const auto sets = build_commuting_sets(m);
    REQUIRE(sets.size() == 9);
    // Verbatim listings of the bullet-point sets.
    CHECK(member_names(sets[0]) ==
          std::set<std::string>{"YZZ", "XXZ", "ZYI", "YXX", "IYY", "ZIY", "XZX"});
    CHECK(member_names(sets[3]) ==
          std::set<std::string>{"IIY", "XZI", "XZY", "ZXY", "ZXI", "YYY", "YYI"});
    CHECK(member_names(sets[6]) ==
          std::set<std::string>{"XYX", "ZZX", "YXI", "ZYZ", "YIY", "IXY", "XZZ"});
    // The eighth and ninth are the column and row labelling sets.
    CHECK(member_names(sets[7]) ==
          std::set<std::string>{"ZZI", "ZII", "ZZZ", "IZI", "IZZ", "ZIZ", "IIZ"});
    CHECK(member_names(sets[8]) ==
          std::set<std::string>{"IIX", "IXX", "XIX", "XII", "XXX", "IXI", "XXI"});
    for (const auto& s : sets)
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j) CHECK(commutes(s.members[i], s.members[j]));
}

TEST_CASE("the sets partition the 63 operators") {
    const HexagonModel m = HexagonModel::build();
    const auto sets = build_commuting_sets(m);
    std::set<std::string> all;
    for (const auto& s : sets)
        for (const auto& op : s.members) all.insert(to_string(op.unsigned_rep()));
    CHECK(all.size() == 63);
}

TEST_CASE("joint eigenbases are exact and orthogonal") {
    const HexagonModel m = HexagonModel::build();
    const auto sets = build_commuting_sets(m);
    for (const auto& s : sets) {
        const ExactBasis b = joint_eigenbasis(s);
        for (int i = 0; i < 8; ++i) {
            const GaussInt n = inner(b.vectors[i], b.vectors[i]);
            CHECK(n.im == 0);
            CHECK(n.re == b.norm_squares[i]);
            CHECK(n.re > 0);
            for (int j = i + 1; j < 8; ++j) CHECK(inner(b.vectors[i], b.vectors[j]).is_zero());
        }
    }
}

TEST_CASE("all 36 cross pairs are exactly unbiased") {
    const HexagonModel m = HexagonModel::build();
    const auto sets = build_commuting_sets(m);
    std::vector<ExactBasis> bases;
    for (const auto& s : sets) bases.push_back(joint_eigenbasis(s));
    const UnbiasednessReport rep = certify_unbiased(bases);
    CHECK(rep.bases == 9);
    CHECK(rep.all_orthogonal);
    CHECK(rep.unbiased_pairs == 36);
    CHECK(rep.all_unbiased);
    CHECK(rep.ok());
    // Direct integer identity on one pair: 8 |<u,v>|^2 == <u,u><v,v>.
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const GaussInt ov = inner(bases[0].vectors[i], bases[8].vectors[j]);
            CHECK(8 * ov.norm() == bases[0].norm_squares[i] * bases[8].norm_squares[j]);
        }
}

}  // TEST_SUITE
