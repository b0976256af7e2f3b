#pragma once

// The coefficient tower: exact rationals, the real quadratic field Q(sqrt5),
// and cyclotomic residues Q[x]/Phi_n(x). A Scalar always stores the smallest
// kind that can represent its value (a Quad with zero irrational part or a
// cyclotomic residue with only a constant term demotes to Rational), so
// equality and ordering are representation independent.
//
// Mixing the two irrational kinds (Quad op Cyc, or residues of different
// orders) throws DomainMismatch unless one side is zero or rational.

#include "gelmod/intpoly.hpp"
#include "gelmod/numbers.hpp"

#include <compare>
#include <ostream>
#include <variant>
#include <vector>

namespace gelmod {

// a + b*sqrt(5)
struct Quad {
    Rational a, b;
};

// Residue class modulo the n-th cyclotomic polynomial; coords has fixed size
// phi(n) = deg Phi_n and coords[k] multiplies x^k.
struct Cyc {
    int order = 0;
    std::vector<Rational> coords;
};

class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(int v) : v_(Rational(v)) {}
    Scalar(Int v) : v_(Rational(std::move(v))) {}
    Scalar(Rational v) : v_(std::move(v)) {}
    explicit Scalar(Quad q) { assign(std::move(q)); }
    explicit Scalar(Cyc c) { assign(std::move(c)); }

    static Scalar sqrt5() { return Scalar(Quad{0, 1}); }
    // zeta_n^k (k may be any integer; reduced mod n).
    static Scalar root_of_unity(int n, long k);

    bool is_zero() const;
    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    const Rational& as_rational() const; // throws DomainMismatch if irrational
    bool is_integer() const;
    Int as_integer() const;              // throws NonIntegralResult

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws Error on zero divisor
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar complex_conjugate() const; // rationals and Quad are real: identity

    // Total order: by kind (Rational < Quad < Cyc), then componentwise.
    // Canonical storage makes this well defined on values.
    int compare(const Scalar& o) const;
    bool operator==(const Scalar& o) const { return compare(o) == 0; }
    bool operator<(const Scalar& o) const { return compare(o) < 0; }

    std::string to_string() const;

private:
    std::variant<Rational, Quad, Cyc> v_;
    void assign(Quad q);
    void assign(Cyc c);
    friend struct ScalarOps;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Phi_n, cached; thread safe.
const IntPolynomial& cyclotomic_polynomial(int n);

// Euler phi (degree of Phi_n).
int euler_phi(int n);

} // namespace gelmod
