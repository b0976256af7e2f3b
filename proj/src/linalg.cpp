#include "gelmod/linalg.hpp"

#include "gelmod/errors.hpp"

#include <algorithm>

namespace gelmod {

std::vector<std::vector<Scalar>> kernel_basis(std::vector<std::vector<Scalar>> rows,
                                              int ncols) {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != ncols)
            throw DimensionMismatch("kernel_basis: ragged row");

    const int nrows = static_cast<int>(rows.size());
    std::vector<int> pivotCols;
    int pivotRow = 0;
    Scalar prev(1);
    for (int col = 0; col < ncols && pivotRow < nrows; ++col) {
        int sel = -1;
        for (int r = pivotRow; r < nrows; ++r)
            if (!rows[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[static_cast<size_t>(sel)], rows[static_cast<size_t>(pivotRow)]);
        const auto& prow = rows[static_cast<size_t>(pivotRow)];
        const Scalar& pv = prow[static_cast<size_t>(col)];
        for (int r = pivotRow + 1; r < nrows; ++r) {
            auto& row = rows[static_cast<size_t>(r)];
            const Scalar f = row[static_cast<size_t>(col)];
            if (f.is_zero()) {
                // still rescale to keep the one-step fraction-free invariant
                for (int c = col + 1; c < ncols; ++c)
                    row[static_cast<size_t>(c)] =
                        pv * row[static_cast<size_t>(c)] / prev;
            } else {
                for (int c = col + 1; c < ncols; ++c)
                    row[static_cast<size_t>(c)] =
                        (pv * row[static_cast<size_t>(c)] -
                         f * prow[static_cast<size_t>(c)]) /
                        prev;
                row[static_cast<size_t>(col)] = Scalar();
            }
        }
        prev = pv;
        pivotCols.push_back(col);
        ++pivotRow;
    }

    // classify columns
    std::vector<bool> isPivot(static_cast<size_t>(ncols), false);
    for (int c : pivotCols) isPivot[static_cast<size_t>(c)] = true;

    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (isPivot[static_cast<size_t>(f)]) continue;
        std::vector<Scalar> v(static_cast<size_t>(ncols));
        v[static_cast<size_t>(f)] = Scalar(1);
        for (int i = static_cast<int>(pivotCols.size()) - 1; i >= 0; --i) {
            const int pc = pivotCols[static_cast<size_t>(i)];
            const auto& row = rows[static_cast<size_t>(i)];
            Scalar s;
            for (int c = pc + 1; c < ncols; ++c) {
                if (v[static_cast<size_t>(c)].is_zero() ||
                    row[static_cast<size_t>(c)].is_zero())
                    continue;
                s += row[static_cast<size_t>(c)] * v[static_cast<size_t>(c)];
            }
            v[static_cast<size_t>(pc)] = -(s / row[static_cast<size_t>(pc)]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

void EchelonBasis::reduce(std::vector<Scalar>& v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const int p = pivots_[i];
        const Scalar& c = v[static_cast<size_t>(p)];
        if (c.is_zero()) continue;
        const Scalar f = c; // pivot of rows_[i] is 1
        for (int j = 0; j < ncols_; ++j) {
            if (rows_[i][static_cast<size_t>(j)].is_zero()) continue;
            v[static_cast<size_t>(j)] -= f * rows_[i][static_cast<size_t>(j)];
        }
    }
}

bool EchelonBasis::insert(std::vector<Scalar> v) {
    if (static_cast<int>(v.size()) != ncols_)
        throw DimensionMismatch("EchelonBasis: wrong vector length");
    reduce(v);
    int pivot = -1;
    for (int j = 0; j < ncols_; ++j)
        if (!v[static_cast<size_t>(j)].is_zero()) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;
    const Scalar inv = v[static_cast<size_t>(pivot)].inverse();
    for (auto& x : v)
        if (!x.is_zero()) x *= inv;
    // keep reduced form: clear the new pivot column from existing rows
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Scalar f = rows_[i][static_cast<size_t>(pivot)];
        if (f.is_zero()) continue;
        for (int j = 0; j < ncols_; ++j) {
            if (v[static_cast<size_t>(j)].is_zero()) continue;
            rows_[i][static_cast<size_t>(j)] -= f * v[static_cast<size_t>(j)];
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

} // namespace gelmod
