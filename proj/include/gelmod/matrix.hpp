#pragma once

// Square matrices over the Scalar tower. Small and exact; used for group
// elements in the reflection representation and for induced actions on
// monomial bases.

#include "gelmod/scalar.hpp"
#include "gelmod/scalarpoly.hpp"

#include <vector>

namespace gelmod {

class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
    static Matrix identity(int n);

    int size() const { return n_; }
    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const { return compare(o) == 0; }
    bool operator<(const Matrix& o) const { return compare(o) < 0; }
    int compare(const Matrix& o) const;

    Matrix transpose() const;
    Matrix inverse() const; // Gauss-Jordan; throws Error if singular
    Scalar trace() const;
    bool is_identity() const;

    // det(I - t*M), exact, via Newton's identities on power-sum traces.
    ScalarPoly char_poly_reversed() const;

    static Matrix block_diagonal(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<Scalar> a_;
};

} // namespace gelmod
