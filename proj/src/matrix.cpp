#include "gelmod/matrix.hpp"

#include "gelmod/errors.hpp"

#include <sstream>

namespace gelmod {

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (n_ != o.n_) throw DimensionMismatch("matrix product size mismatch");
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                const Scalar& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

int Matrix::compare(const Matrix& o) const {
    if (n_ != o.n_) return n_ < o.n_ ? -1 : 1;
    for (size_t i = 0; i < a_.size(); ++i) {
        int c = a_[i].compare(o.a_[i]);
        if (c) return c;
    }
    return 0;
}

Matrix Matrix::transpose() const {
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::inverse() const {
    Matrix a = *this, inv = identity(n_);
    for (int col = 0; col < n_; ++col) {
        int piv = -1;
        for (int r = col; r < n_; ++r)
            if (!a.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) throw Error("matrix is singular");
        if (piv != col) {
            for (int j = 0; j < n_; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        const Scalar d = a.at(col, col).inverse();
        for (int j = 0; j < n_; ++j) {
            a.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            const Scalar f = a.at(r, col);
            for (int j = 0; j < n_; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Scalar Matrix::trace() const {
    Scalar t;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!(at(i, j) == Scalar(i == j ? 1 : 0))) return false;
    return true;
}

ScalarPoly Matrix::char_poly_reversed() const {
    // det(I - tM) = sum_k (-1)^k e_k(eigenvalues) t^k; Newton's identities
    // recover e_k from power sums p_j = tr(M^j).
    std::vector<Scalar> p(static_cast<size_t>(n_) + 1); // p[j] = tr(M^j), j >= 1
    Matrix pw = *this;
    for (int j = 1; j <= n_; ++j) {
        p[static_cast<size_t>(j)] = pw.trace();
        if (j < n_) pw = pw * *this;
    }
    std::vector<Scalar> e(static_cast<size_t>(n_) + 1);
    e[0] = Scalar(1);
    for (int k = 1; k <= n_; ++k) {
        Scalar s;
        for (int i = 1; i <= k; ++i) {
            Scalar term = e[static_cast<size_t>(k - i)] * p[static_cast<size_t>(i)];
            if (i % 2 == 0) term = -term;
            s += term;
        }
        e[static_cast<size_t>(k)] = s / Scalar(k);
    }
    std::vector<Scalar> c(static_cast<size_t>(n_) + 1);
    for (int k = 0; k <= n_; ++k)
        c[static_cast<size_t>(k)] = (k % 2 == 0) ? e[static_cast<size_t>(k)]
                                                 : -e[static_cast<size_t>(k)];
    return ScalarPoly::from_coefficients(std::move(c));
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix r(a.n_ + b.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.n_; ++i)
        for (int j = 0; j < b.n_; ++j) r.at(a.n_ + i, a.n_ + j) = b.at(i, j);
    return r;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        os << (i ? "; " : "[");
        for (int j = 0; j < n_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
    }
    os << "]";
    return os.str();
}

} // namespace gelmod
