#pragma once

// Exact linear algebra over the Scalar tower: right-kernel bases and an
// incremental row-space basis used for filtering independent operators.

#include "gelmod/scalar.hpp"

#include <vector>

namespace gelmod {

// Basis of { v : rows * v = 0 }. Each row must have exactly ncols entries.
// Forward elimination is fraction-free (Bareiss); back substitution divides
// in the field.
std::vector<std::vector<Scalar>> kernel_basis(std::vector<std::vector<Scalar>> rows,
                                              int ncols);

// Maintains a row-space basis in reduced echelon form. insert() returns true
// when the vector was independent of the current span (and keeps it).
class EchelonBasis {
public:
    explicit EchelonBasis(int ncols) : ncols_(ncols) {}
    bool insert(std::vector<Scalar> v);
    int rank() const { return static_cast<int>(rows_.size()); }
    int columns() const { return ncols_; }
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }

private:
    int ncols_;
    std::vector<std::vector<Scalar>> rows_; // pivot of rows_[i] at pivots_[i], normalized to 1
    std::vector<int> pivots_;
    void reduce(std::vector<Scalar>& v) const;
};

} // namespace gelmod
