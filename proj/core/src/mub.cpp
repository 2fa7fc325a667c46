#include "hexapauli/mub.hpp"

#include <algorithm>
#include <stdexcept>

namespace hexapauli {

namespace {

int wrap7(int k) {
    k %= 7;
    if (k <= 0) k += 7;
    return k;
}

using GMat = std::array<std::array<GaussInt, 8>, 8>;

GMat hermitize(const SignedPauliOp& p) {
    // Symmetric members as-is; antisymmetric ones times i, so H^2 = 1.
    const DenseIntMatrix d = to_dense(p);
    const bool sym = is_symmetric(p);
    GMat h{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            if (sym)
                h[i][j].re = d(i, j);
            else
                h[i][j].im = d(i, j);
        }
    return h;
}

GMat gmul(const GMat& a, const GMat& b) {
    GMat r{};
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < 8; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
        }
    return r;
}

GMat gidentity(std::int64_t s = 1) {
    GMat r{};
    for (int i = 0; i < 8; ++i) r[i][i].re = s;
    return r;
}

GMat gadd_scaled(const GMat& a, const GMat& b, std::int64_t sb) {
    GMat r{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            r[i][j] = {a[i][j].re + sb * b[i][j].re, a[i][j].im + sb * b[i][j].im};
    return r;
}

bool gf2_independent(const SignedPauliOp& a, const SignedPauliOp& b, const SignedPauliOp& c) {
    // Nonzero labels are independent iff no product of a subset is identity.
    if (a.unsigned_rep() == b.unsigned_rep() || a.unsigned_rep() == c.unsigned_rep() ||
        b.unsigned_rep() == c.unsigned_rep())
        return false;
    return !multiply(multiply(a, b), c).is_identity_label();
}

}  // namespace

std::vector<CommutingSet> build_commuting_sets(const HexagonModel& m) {
    std::vector<CommutingSet> sets;
    const int g_letter = 6;
    // B_j is the union of the three lines through the bullet point g_{5-j}.
    for (int j = 1; j <= 7; ++j) {
        const int k = wrap7(5 - j);
        const HexLabel bullet{g_letter, k};
        const int pt = m.point_index(bullet);
        std::vector<SignedPauliOp> members;
        for (int li : m.lines_through(pt))
            for (const auto& l : m.lines()[li].labels) {
                const SignedPauliOp op = m.op(l).unsigned_rep();
                if (std::find(members.begin(), members.end(), op) == members.end())
                    members.push_back(op);
            }
        if (members.size() != 7) throw std::logic_error("bullet point star is not of size 7");
        CommutingSet s;
        s.label = "B" + std::to_string(j);
        std::copy_n(members.begin(), 7, s.members.begin());
        sets.push_back(s);
    }
    const auto lab = OperatorLabelling::standard();
    CommutingSet b8{"B8", {}}, b9{"B9", {}};
    for (int k = 1; k <= 7; ++k) {
        b8.members[k - 1] = lab.point_ops[k];
        b9.members[k - 1] = lab.line_ops[k];
    }
    sets.push_back(b8);
    sets.push_back(b9);

    for (const auto& s : sets)
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                if (!commutes(s.members[i], s.members[j]))
                    throw std::logic_error(s.label + " is not pairwise commuting");
    return sets;
}

ExactBasis joint_eigenbasis(const CommutingSet& s) {
    // First three members (in stored order) with GF(2)-independent labels.
    std::array<SignedPauliOp, 3> gens;
    bool found = false;
    for (int i = 0; i < 7 && !found; ++i)
        for (int j = i + 1; j < 7 && !found; ++j)
            for (int k = j + 1; k < 7 && !found; ++k)
                if (gf2_independent(s.members[i], s.members[j], s.members[k])) {
                    gens = {s.members[i], s.members[j], s.members[k]};
                    found = true;
                }
    if (!found) throw std::logic_error("no independent generator triple in " + s.label);

    std::array<GMat, 3> h;
    for (int t = 0; t < 3; ++t) {
        h[t] = hermitize(gens[t]);
        if (!(gmul(h[t], h[t]) == gidentity()))
            throw std::logic_error("Hermitianized generator does not square to 1");
    }

    ExactBasis basis;
    for (int pattern = 0; pattern < 8; ++pattern) {
        // Scaled projector 8P = (1+s0 H0)(1+s1 H1)(1+s2 H2).
        GMat p = gidentity();
        for (int t = 0; t < 3; ++t) {
            const std::int64_t sgn = (pattern >> t & 1) ? -1 : +1;
            p = gmul(p, gadd_scaled(gidentity(), h[t], sgn));
        }
        GaussInt trace{};
        for (int i = 0; i < 8; ++i) trace = trace + p[i][i];
        if (!(trace == GaussInt{8, 0}))
            throw std::logic_error("projector is not rank one in " + s.label);

        int col = -1;
        for (int j = 0; j < 8 && col < 0; ++j)
            for (int i = 0; i < 8; ++i)
                if (!p[i][j].is_zero()) {
                    col = j;
                    break;
                }
        if (col < 0) throw std::logic_error("zero projector in " + s.label);
        std::int64_t norm = 0;
        for (int i = 0; i < 8; ++i) {
            basis.vectors[pattern][i] = p[i][col];
            norm += p[i][col].norm();
        }
        basis.norm_squares[pattern] = norm;
    }
    return basis;
}

UnbiasednessReport certify_unbiased(const std::vector<ExactBasis>& bases) {
    UnbiasednessReport rep;
    rep.bases = static_cast<int>(bases.size());
    rep.all_orthogonal = true;
    rep.all_unbiased = true;

    auto inner = [](const std::array<GaussInt, 8>& u, const std::array<GaussInt, 8>& v) {
        GaussInt s{};
        for (int i = 0; i < 8; ++i) s = s + u[i].conj() * v[i];
        return s;
    };

    for (std::size_t a = 0; a < bases.size(); ++a)
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                if (!inner(bases[a].vectors[i], bases[a].vectors[j]).is_zero())
                    rep.all_orthogonal = false;

    for (std::size_t a = 0; a < bases.size(); ++a)
        for (std::size_t b = a + 1; b < bases.size(); ++b) {
            bool pair_ok = true;
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) {
                    const GaussInt ov = inner(bases[a].vectors[i], bases[b].vectors[j]);
                    // |<u,v>|^2 * 8 == <u,u><v,v>, exactly.
                    if (ov.norm() * 8 !=
                        bases[a].norm_squares[i] * bases[b].norm_squares[j])
                        pair_ok = false;
                }
            if (pair_ok) rep.unbiased_pairs++;
            else rep.all_unbiased = false;
        }
    return rep;
}

}  // namespace hexapauli
