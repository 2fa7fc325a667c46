#pragma once

#include <array>
#include <string>

#include <gmpxx.h>

namespace hexapauli {

/// Exact complex rational scalar.
struct GaussianRational {
    mpq_class re = 0, im = 0;

    bool operator==(const GaussianRational&) const = default;
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    std::string str() const;
};

/// 8x8 matrix of exact complex rationals.
struct GaussianMatrix8 {
    std::array<std::array<GaussianRational, 8>, 8> a{};

    bool operator==(const GaussianMatrix8&) const = default;
    GaussianMatrix8 operator+(const GaussianMatrix8& o) const;
    GaussianMatrix8 operator*(const GaussianMatrix8& o) const;
    GaussianMatrix8 conj() const;
    GaussianMatrix8 transpose() const;
    GaussianRational trace() const;
    bool is_antisymmetric() const;
    GaussianMatrix8 scaled(const GaussianRational& s) const;
};

/// Pfaffian by recursive expansion along the first row. Throws unless the
/// input is antisymmetric.
GaussianRational pfaffian(const GaussianMatrix8& m);

/// Pfaffian by the 105-term perfect-matching expansion; an independent route
/// kept for cross-checking the recursive one.
GaussianRational pfaffian_matchings(const GaussianMatrix8& m);

/// Exact determinant (fraction elimination over the complex rationals).
GaussianRational determinant(const GaussianMatrix8& m);

}  // namespace hexapauli
