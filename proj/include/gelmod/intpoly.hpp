#pragma once

// Dense univariate polynomials over Int in the grading variable t.
// Invariant: no trailing zero coefficients; the zero polynomial has an empty
// coefficient vector and degree() == nullopt.

#include "gelmod/numbers.hpp"

#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace gelmod {

class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(Int constant);                     // implicit on purpose
    IntPolynomial(int constant) : IntPolynomial(Int(constant)) {}
    static IntPolynomial monomial(Int coeff, int exponent);
    static IntPolynomial from_coefficients(std::vector<Int> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const;
    // Coefficient of t^k; zero outside the stored range.
    const Int& coeff(int k) const;
    std::span<const Int> coefficients() const { return coeffs_; }

    // Smallest exponent with nonzero coefficient. Throws ZeroPolynomial.
    int low_exponent() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
    IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }
    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    IntPolynomial times_monomial(Int coeff, int exponent) const;
    Int evaluate_at_one() const;
    Int evaluate(const Int& x) const;
    bool coefficients_nonnegative() const;

    std::string to_string() const; // e.g. "t^4 + 2*t^2 + 1", "0"

private:
    std::vector<Int> coeffs_;
    void trim();
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

// Exact quotient a / b; throws NotDivisible if the remainder is nonzero or
// b is zero.
IntPolynomial poly_exact_div(const IntPolynomial& a, const IntPolynomial& b);

// prod (t^i - 1) over the given exponents (empty product = 1).
IntPolynomial gaussian_product(std::span<const int> exponents);

// 1 + t + ... + t^(d-1) = (t^d - 1)/(t - 1).
IntPolynomial geometric_sum(int d);

} // namespace gelmod
