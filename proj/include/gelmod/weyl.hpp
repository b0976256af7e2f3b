#pragma once

// Operators sum c * x^a d^b acting on polynomials: exact application and
// conjugation by group elements (x-variables by the matrix columns,
// d-variables by the inverse transpose).

#include "gelmod/matrix.hpp"
#include "gelmod/mpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gelmod {

class WeylOperator {
public:
    WeylOperator() = default;
    explicit WeylOperator(int nvars) : nvars_(nvars) {}
    static WeylOperator monomial_op(int nvars, std::vector<int> xExp,
                                    std::vector<int> dExp, const Scalar& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    // max over the support of sum(xExp) - sum(dExp); nullopt for zero
    std::optional<int> degree() const;
    const std::map<std::pair<std::vector<int>, std::vector<int>>, Scalar>& terms() const {
        return terms_;
    }

    WeylOperator operator+(const WeylOperator& o) const;
    WeylOperator operator-(const WeylOperator& o) const;
    WeylOperator operator-() const;
    WeylOperator& operator+=(const WeylOperator& o) { return *this = *this + o; }
    WeylOperator scaled(const Scalar& c) const;
    bool operator==(const WeylOperator& o) const;

    void add_term(const std::vector<int>& xExp, const std::vector<int>& dExp,
                  const Scalar& c);

    std::string to_string() const; // "x0^2*d1 - d0*d1" style

private:
    int nvars_ = 0;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Scalar> terms_;
};

// sum_i x_i d_i; multiplies every homogeneous polynomial by its degree.
WeylOperator euler_operator(int nvars);

MPoly weyl_apply(const WeylOperator& D, const MPoly& P);

// g . P: variable i is replaced by the i-th column of g.
MPoly matrix_act(const Matrix& g, const MPoly& P);

// Conjugated operator g D g^{-1}.
WeylOperator weyl_act_group(const Matrix& g, const Matrix& gInverse, const WeylOperator& D);
WeylOperator weyl_act_group(const Matrix& g, const WeylOperator& D);

} // namespace gelmod
