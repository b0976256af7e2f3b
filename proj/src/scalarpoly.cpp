#include "gelmod/scalarpoly.hpp"

#include "gelmod/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gelmod {

ScalarPoly::ScalarPoly(Scalar constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

ScalarPoly ScalarPoly::monomial(Scalar coeff, int exponent) {
    ScalarPoly p;
    if (coeff.is_zero()) return p;
    if (exponent < 0) throw Error("monomial: negative exponent");
    p.coeffs_.assign(static_cast<size_t>(exponent) + 1, Scalar());
    p.coeffs_.back() = std::move(coeff);
    return p;
}

ScalarPoly ScalarPoly::from_coefficients(std::vector<Scalar> coeffs) {
    ScalarPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

ScalarPoly ScalarPoly::from_int_polynomial(const IntPolynomial& p) {
    std::vector<Scalar> c;
    c.reserve(p.coefficients().size());
    for (const auto& x : p.coefficients()) c.emplace_back(Int(x));
    return from_coefficients(std::move(c));
}

void ScalarPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<int> ScalarPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const Scalar& ScalarPoly::coeff(int k) const {
    static const Scalar zero;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(k)];
}

ScalarPoly ScalarPoly::operator+(const ScalarPoly& o) const {
    std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return from_coefficients(std::move(c));
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

ScalarPoly ScalarPoly::operator-(const ScalarPoly& o) const { return *this + (-o); }

ScalarPoly ScalarPoly::operator*(const ScalarPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Scalar> c(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return from_coefficients(std::move(c));
}

bool ScalarPoly::operator==(const ScalarPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!(coeffs_[i] == o.coeffs_[i])) return false;
    return true;
}

ScalarPoly ScalarPoly::scaled(const Scalar& c) const {
    if (c.is_zero()) return {};
    ScalarPoly p = *this;
    for (auto& x : p.coeffs_) x *= c;
    p.trim();
    return p;
}

ScalarPoly ScalarPoly::truncated(int upTo) const {
    if (upTo < 0) return {};
    if (static_cast<int>(coeffs_.size()) <= upTo + 1) return *this;
    std::vector<Scalar> c(coeffs_.begin(), coeffs_.begin() + upTo + 1);
    return from_coefficients(std::move(c));
}

ScalarPoly ScalarPoly::truncated_mul(const ScalarPoly& o, int upTo) const {
    if (is_zero() || o.is_zero() || upTo < 0) return {};
    std::vector<Scalar> c(static_cast<size_t>(upTo) + 1);
    for (size_t i = 0; i < coeffs_.size() && i <= static_cast<size_t>(upTo); ++i) {
        if (coeffs_[i].is_zero()) continue;
        const size_t jmax = std::min(o.coeffs_.size(), static_cast<size_t>(upTo) + 1 - i);
        for (size_t j = 0; j < jmax; ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return from_coefficients(std::move(c));
}

ScalarPoly ScalarPoly::series_inverse(int upTo) const {
    if (coeffs_.empty() || coeffs_[0].is_zero())
        throw NonInvertibleConstantTerm("series_inverse: constant term is zero");
    const Scalar c0inv = coeffs_[0].inverse();
    std::vector<Scalar> inv(static_cast<size_t>(upTo) + 1);
    inv[0] = c0inv;
    for (int k = 1; k <= upTo; ++k) {
        // coefficient of t^k in (this * inv) must vanish
        Scalar s;
        const int jmax = std::min<int>(k, static_cast<int>(coeffs_.size()) - 1);
        for (int j = 1; j <= jmax; ++j)
            s += coeffs_[static_cast<size_t>(j)] * inv[static_cast<size_t>(k - j)];
        inv[static_cast<size_t>(k)] = -(s * c0inv);
    }
    return from_coefficients(std::move(inv));
}

IntPolynomial ScalarPoly::to_int_polynomial() const {
    std::vector<Int> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x.as_integer());
    return IntPolynomial::from_coefficients(std::move(c));
}

std::string ScalarPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
        const Scalar& c = coeffs_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (k > 0) {
            os << "*t";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

ScalarPoly series_quotient(const ScalarPoly& num, const ScalarPoly& den, int upTo) {
    return num.truncated_mul(den.series_inverse(upTo), upTo);
}

} // namespace gelmod
