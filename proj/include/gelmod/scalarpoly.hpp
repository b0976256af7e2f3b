#pragma once

// Dense univariate polynomials over Scalar, plus truncated power-series
// operations (multiplication and inversion mod t^(upTo+1)) used by the
// Molien-style sums.

#include "gelmod/intpoly.hpp"
#include "gelmod/scalar.hpp"

#include <optional>
#include <vector>

namespace gelmod {

class ScalarPoly {
public:
    ScalarPoly() = default;
    ScalarPoly(Scalar constant);
    static ScalarPoly monomial(Scalar coeff, int exponent);
    static ScalarPoly from_coefficients(std::vector<Scalar> coeffs);
    static ScalarPoly from_int_polynomial(const IntPolynomial& p);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const;
    const Scalar& coeff(int k) const;
    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    ScalarPoly operator+(const ScalarPoly& o) const;
    ScalarPoly operator-(const ScalarPoly& o) const;
    ScalarPoly operator*(const ScalarPoly& o) const;
    ScalarPoly operator-() const;
    ScalarPoly& operator+=(const ScalarPoly& o) { return *this = *this + o; }
    ScalarPoly& operator*=(const ScalarPoly& o) { return *this = *this * o; }
    bool operator==(const ScalarPoly& o) const;

    ScalarPoly scaled(const Scalar& c) const;

    // Product truncated to degree upTo (inclusive).
    ScalarPoly truncated_mul(const ScalarPoly& o, int upTo) const;
    // Multiplicative inverse as a power series mod t^(upTo+1); the constant
    // term must be invertible (throws NonInvertibleConstantTerm).
    ScalarPoly series_inverse(int upTo) const;
    ScalarPoly truncated(int upTo) const;

    // Conversion back to integer coefficients; throws NonIntegralResult if
    // any coefficient is not an integer.
    IntPolynomial to_int_polynomial() const;

    std::string to_string() const;

private:
    std::vector<Scalar> coeffs_;
    void trim();
};

// num / den as a formal power series: coefficients 0..upTo.
// den must have invertible constant term.
ScalarPoly series_quotient(const ScalarPoly& num, const ScalarPoly& den, int upTo);

} // namespace gelmod
