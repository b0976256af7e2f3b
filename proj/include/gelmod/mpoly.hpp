#pragma once

// Multivariate polynomials over the Scalar tower, keyed by exponent vectors.
// Map-based on purpose: model spaces at this scale hold at most a few
// hundred monomials, and deterministic term order matters more than speed.

#include "gelmod/scalar.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gelmod {

class MPoly {
public:
    MPoly() = default;
    explicit MPoly(int nvars) : nvars_(nvars) {}
    static MPoly constant(int nvars, const Scalar& c);
    static MPoly variable(int nvars, int index);
    static MPoly monomial(int nvars, std::vector<int> exponents, const Scalar& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<int> total_degree() const; // max over support; nullopt if zero
    bool is_homogeneous() const;             // vacuously true for zero
    const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }
    Scalar coefficient(const std::vector<int>& exponents) const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    bool operator==(const MPoly& o) const;
    MPoly scaled(const Scalar& c) const;

    // Adds c * x^exponents in place.
    void add_term(const std::vector<int>& exponents, const Scalar& c);

    // Simultaneous substitution: variable i -> images[i]. All images must
    // share this polynomial's variable count.
    MPoly substituted(std::span<const MPoly> images) const;

    // Default variable names x0, x1, ...; pass names to override.
    std::string to_string(std::span<const std::string> names = {}) const;

private:
    int nvars_ = 0;
    std::map<std::vector<int>, Scalar> terms_; // no zero coefficients stored
};

// Exponent vectors of all monomials of the given total degree, in
// lexicographically descending order ((d,0,...,0) first). Deterministic.
std::vector<std::vector<int>> monomials_of_degree(int nvars, int degree);

} // namespace gelmod
