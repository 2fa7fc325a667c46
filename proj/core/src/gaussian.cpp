#include "hexapauli/gaussian.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace hexapauli {

std::string GaussianRational::str() const {
    std::string s = re.get_str();
    if (im != 0) {
        s += (im > 0 ? "+" : "") + im.get_str() + "i";
    }
    return s;
}

GaussianMatrix8 GaussianMatrix8::operator+(const GaussianMatrix8& o) const {
    GaussianMatrix8 r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r.a[i][j] = a[i][j] + o.a[i][j];
    return r;
}

GaussianMatrix8 GaussianMatrix8::operator*(const GaussianMatrix8& o) const {
    GaussianMatrix8 r;
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < 8; ++j) r.a[i][j] = r.a[i][j] + a[i][k] * o.a[k][j];
        }
    return r;
}

GaussianMatrix8 GaussianMatrix8::conj() const {
    GaussianMatrix8 r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r.a[i][j] = a[i][j].conj();
    return r;
}

GaussianMatrix8 GaussianMatrix8::transpose() const {
    GaussianMatrix8 r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r.a[j][i] = a[i][j];
    return r;
}

GaussianRational GaussianMatrix8::trace() const {
    GaussianRational t;
    for (int i = 0; i < 8; ++i) t = t + a[i][i];
    return t;
}

bool GaussianMatrix8::is_antisymmetric() const {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (!(a[i][j] + a[j][i]).is_zero()) return false;
    return true;
}

GaussianMatrix8 GaussianMatrix8::scaled(const GaussianRational& s) const {
    GaussianMatrix8 r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r.a[i][j] = a[i][j] * s;
    return r;
}

namespace {

GaussianRational pf_recursive(const std::vector<int>& rows, const GaussianMatrix8& m) {
    const std::size_t n = rows.size();
    if (n == 0) return {1, 0};
    GaussianRational sum;
    const int i0 = rows[0];
    int sign = +1;
    for (std::size_t j = 1; j < n; ++j) {
        const GaussianRational& aij = m.a[i0][rows[j]];
        if (!aij.is_zero()) {
            std::vector<int> rest;
            rest.reserve(n - 2);
            for (std::size_t k = 1; k < n; ++k)
                if (k != j) rest.push_back(rows[k]);
            const GaussianRational sub = pf_recursive(rest, m);
            const GaussianRational term = aij * sub;
            sum = (sign > 0) ? sum + term : sum - term;
        }
        sign = -sign;
    }
    return sum;
}

}  // namespace

GaussianRational pfaffian(const GaussianMatrix8& m) {
    if (!m.is_antisymmetric()) throw std::invalid_argument("pfaffian of non-antisymmetric matrix");
    return pf_recursive({0, 1, 2, 3, 4, 5, 6, 7}, m);
}

GaussianRational pfaffian_matchings(const GaussianMatrix8& m) {
    if (!m.is_antisymmetric()) throw std::invalid_argument("pfaffian of non-antisymmetric matrix");
    // Sum over the 105 perfect matchings of {0..7}, with the matching sign
    // given by the parity of the induced permutation.
    GaussianRational sum;
    std::array<int, 8> perm{};
    std::array<bool, 8> used{};
    auto parity_sign = [&](const std::array<int, 8>& p) {
        int inv = 0;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                if (p[i] > p[j]) ++inv;
        return inv % 2 == 0 ? +1 : -1;
    };
    std::function<void(int)> rec = [&](int pos) {
        if (pos == 8) {
            GaussianRational term{1, 0};
            for (int t = 0; t < 4; ++t) term = term * m.a[perm[2 * t]][perm[2 * t + 1]];
            if (parity_sign(perm) > 0)
                sum = sum + term;
            else
                sum = sum - term;
            return;
        }
        int first = 0;
        while (used[first]) ++first;
        used[first] = true;
        perm[pos] = first;
        for (int second = first + 1; second < 8; ++second) {
            if (used[second]) continue;
            used[second] = true;
            perm[pos + 1] = second;
            rec(pos + 2);
            used[second] = false;
        }
        used[first] = false;
    };
    rec(0);
    return sum;
}

GaussianRational determinant(const GaussianMatrix8& m) {
    // Gaussian elimination over the field of complex rationals.
    auto a = m.a;
    GaussianRational det{1, 0};
    for (int col = 0; col < 8; ++col) {
        int pivot = -1;
        for (int r = col; r < 8; ++r)
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return {0, 0};
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        // Normalize row and eliminate below.
        const GaussianRational p = a[col][col];
        const mpq_class nrm = p.re * p.re + p.im * p.im;
        const GaussianRational inv{p.re / nrm, -p.im / nrm};
        for (int c = col; c < 8; ++c) a[col][c] = a[col][c] * inv;
        for (int r = col + 1; r < 8; ++r) {
            if (a[r][col].is_zero()) continue;
            const GaussianRational f = a[r][col];
            for (int c = col; c < 8; ++c) a[r][c] = a[r][c] - f * a[col][c];
        }
    }
    return det;
}

}  // namespace hexapauli
