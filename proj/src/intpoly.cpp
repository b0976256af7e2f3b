#include "gelmod/intpoly.hpp"

#include "gelmod/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gelmod {

IntPolynomial::IntPolynomial(Int constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPolynomial IntPolynomial::monomial(Int coeff, int exponent) {
    IntPolynomial p;
    if (coeff == 0) return p;
    if (exponent < 0) throw Error("monomial: negative exponent");
    p.coeffs_.assign(static_cast<size_t>(exponent) + 1, Int(0));
    p.coeffs_.back() = std::move(coeff);
    return p;
}

IntPolynomial IntPolynomial::from_coefficients(std::vector<Int> coeffs) {
    IntPolynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> IntPolynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const Int& IntPolynomial::coeff(int k) const {
    static const Int zero = 0;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(k)];
}

int IntPolynomial::low_exponent() const {
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return static_cast<int>(k);
    throw ZeroPolynomial("low_exponent of zero polynomial");
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return from_coefficients(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return from_coefficients(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return from_coefficients(std::move(c));
}

IntPolynomial IntPolynomial::times_monomial(Int coeff, int exponent) const {
    return *this * monomial(std::move(coeff), exponent);
}

Int IntPolynomial::evaluate_at_one() const {
    Int s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int s = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * x + *it;
    return s;
}

bool IntPolynomial::coefficients_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Int& c) { return c >= 0; });
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
        const Int& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || k == 0) os << a.str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    return os << p.to_string();
}

IntPolynomial poly_exact_div(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw NotDivisible("division by zero polynomial");
    if (a.is_zero()) return {};
    const int da = *a.degree(), db = *b.degree();
    if (da < db) throw NotDivisible("quotient would have negative degree");
    std::vector<Int> rem(a.coefficients().begin(), a.coefficients().end());
    std::vector<Int> quo(static_cast<size_t>(da - db) + 1, Int(0));
    const Int& lead = b.coeff(db);
    for (int k = da - db; k >= 0; --k) {
        Int& top = rem[static_cast<size_t>(k + db)];
        if (top == 0) continue;
        if (top % lead != 0)
            throw NotDivisible("leading coefficient does not divide");
        Int q = top / lead;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(k + j)] -= q * b.coeff(j);
        quo[static_cast<size_t>(k)] = std::move(q);
    }
    for (const auto& r : rem)
        if (r != 0) throw NotDivisible("nonzero remainder");
    return IntPolynomial::from_coefficients(std::move(quo));
}

IntPolynomial gaussian_product(std::span<const int> exponents) {
    IntPolynomial p(1);
    for (int e : exponents) {
        if (e <= 0) throw Error("gaussian_product: exponent must be positive");
        p *= IntPolynomial::monomial(1, e) - IntPolynomial(1);
    }
    return p;
}

IntPolynomial geometric_sum(int d) {
    if (d <= 0) throw Error("geometric_sum: length must be positive");
    return IntPolynomial::from_coefficients(
        std::vector<Int>(static_cast<size_t>(d), Int(1)));
}

} // namespace gelmod
