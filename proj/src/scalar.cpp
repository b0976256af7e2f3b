#include "gelmod/scalar.hpp"

#include "gelmod/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gelmod {

// ---------------------------------------------------------------------------
// Cyclotomic polynomials
// ---------------------------------------------------------------------------

int euler_phi(int n) {
    if (n <= 0) throw ParameterOutOfRange("euler_phi: n must be positive");
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

namespace {

IntPolynomial compute_cyclotomic(int n, std::map<int, IntPolynomial>& cache) {
    // x^n - 1 divided by Phi_d for all proper divisors d of n.
    IntPolynomial p = IntPolynomial::monomial(1, n) - IntPolynomial(1);
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        auto it = cache.find(d);
        if (it == cache.end())
            it = cache.emplace(d, compute_cyclotomic(d, cache)).first;
        p = poly_exact_div(p, it->second);
    }
    return p;
}

} // namespace

const IntPolynomial& cyclotomic_polynomial(int n) {
    if (n <= 0) throw ParameterOutOfRange("cyclotomic_polynomial: n must be positive");
    static std::map<int, IntPolynomial> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic(n, cache)).first;
    return it->second;
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers (little-endian coefficient vectors), used for
// arithmetic in Q[x]/Phi_n only.
// ---------------------------------------------------------------------------

namespace {

using RP = std::vector<Rational>;

void rp_trim(RP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

RP rp_mul(const RP& a, const RP& b) {
    if (a.empty() || b.empty()) return {};
    RP c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    rp_trim(c);
    return c;
}

// Remainder of a modulo the monic integer polynomial m.
RP rp_mod(RP a, const IntPolynomial& m) {
    rp_trim(a);
    const int dm = *m.degree();
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const Rational lead = a.back();
        const size_t shift = a.size() - 1 - static_cast<size_t>(dm);
        if (lead != 0)
            for (int j = 0; j <= dm; ++j)
                a[shift + static_cast<size_t>(j)] -= lead * Rational(m.coeff(j));
        a.pop_back();
        rp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Extended Euclid: returns (g, u) with u*a = g (mod m), g a nonzero constant
// when gcd(a, m) = 1. m is irreducible here so that always holds for a != 0.
std::pair<RP, RP> rp_half_ext_gcd(RP a, RP b) {
    RP u0{Rational(1)}, u1;
    rp_trim(a);
    rp_trim(b);
    while (!b.empty()) {
        // divide a by b: quotient q, remainder r
        RP r = a, q;
        const Rational blead = b.back();
        const int db = static_cast<int>(b.size()) - 1;
        while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
            const int k = static_cast<int>(r.size()) - 1 - db;
            const Rational c = r.back() / blead;
            if (static_cast<int>(q.size()) <= k) q.resize(static_cast<size_t>(k) + 1, Rational(0));
            q[static_cast<size_t>(k)] = c;
            for (int j = 0; j <= db; ++j)
                r[static_cast<size_t>(k + j)] -= c * b[static_cast<size_t>(j)];
            r.pop_back();
            rp_trim(r);
        }
        // (a, b) <- (b, r); (u0, u1) <- (u1, u0 - q*u1)
        RP qu1 = rp_mul(q, u1);
        RP nu(std::max(u0.size(), qu1.size()), Rational(0));
        for (size_t i = 0; i < u0.size(); ++i) nu[i] = u0[i];
        for (size_t i = 0; i < qu1.size(); ++i) nu[i] -= qu1[i];
        rp_trim(nu);
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(nu);
    }
    return {a, u0};
}

RP rp_from_intpoly(const IntPolynomial& p) {
    RP r;
    r.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) r.emplace_back(c);
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

void Scalar::assign(Quad q) {
    if (q.b == 0)
        v_ = std::move(q.a);
    else
        v_ = std::move(q);
}

void Scalar::assign(Cyc c) {
    c.coords.resize(static_cast<size_t>(euler_phi(c.order)), Rational(0));
    bool constant = true;
    for (size_t k = 1; k < c.coords.size(); ++k)
        if (c.coords[k] != 0) { constant = false; break; }
    if (constant)
        v_ = c.coords.empty() ? Rational(0) : std::move(c.coords[0]);
    else
        v_ = std::move(c);
}

Scalar Scalar::root_of_unity(int n, long k) {
    if (n <= 0) throw ParameterOutOfRange("root_of_unity: order must be positive");
    long r = k % n;
    if (r < 0) r += n;
    const IntPolynomial& phi = cyclotomic_polynomial(n);
    RP x(static_cast<size_t>(r) + 1, Rational(0));
    x.back() = 1;
    RP red = rp_mod(std::move(x), phi);
    Cyc c{n, {}};
    c.coords.assign(static_cast<size_t>(*phi.degree()), Rational(0));
    for (size_t i = 0; i < red.size(); ++i) c.coords[i] = red[i];
    Scalar s;
    s.assign(std::move(c));
    return s;
}

bool Scalar::is_zero() const {
    const Rational* r = std::get_if<Rational>(&v_);
    return r && *r == 0;
}

const Rational& Scalar::as_rational() const {
    const Rational* r = std::get_if<Rational>(&v_);
    if (!r) throw DomainMismatch("scalar is not rational: " + to_string());
    return *r;
}

bool Scalar::is_integer() const {
    return is_rational() && gelmod::is_integer(as_rational());
}

Int Scalar::as_integer() const {
    if (!is_rational() || !gelmod::is_integer(as_rational()))
        throw NonIntegralResult("scalar is not an integer: " + to_string());
    return boost::multiprecision::numerator(as_rational());
}

namespace {

Quad to_quad(const Scalar&); // fwd
Cyc to_cyc(const Scalar&, int order);

} // namespace

// Internal helpers get access through this friend.
struct ScalarOps {
    static const std::variant<Rational, Quad, Cyc>& v(const Scalar& s) { return s.v_; }
    static Scalar make(Quad q) { Scalar s; s.assign(std::move(q)); return s; }
    static Scalar make(Cyc c) { Scalar s; s.assign(std::move(c)); return s; }
};

namespace {

Quad to_quad(const Scalar& s) {
    const auto& v = ScalarOps::v(s);
    if (const Rational* r = std::get_if<Rational>(&v)) return Quad{*r, 0};
    if (const Quad* q = std::get_if<Quad>(&v)) return *q;
    throw DomainMismatch("cannot mix sqrt5 and cyclotomic scalars: " + s.to_string());
}

Cyc to_cyc(const Scalar& s, int order) {
    const auto& v = ScalarOps::v(s);
    if (const Rational* r = std::get_if<Rational>(&v)) {
        Cyc c{order, RP(static_cast<size_t>(euler_phi(order)), Rational(0))};
        c.coords[0] = *r;
        return c;
    }
    if (const Cyc* c = std::get_if<Cyc>(&v)) {
        if (c->order != order)
            throw DomainMismatch("cyclotomic orders differ: " +
                                 std::to_string(c->order) + " vs " +
                                 std::to_string(order));
        return *c;
    }
    throw DomainMismatch("cannot mix sqrt5 and cyclotomic scalars: " + s.to_string());
}

enum class Kind { Rat = 0, Qd = 1, Cy = 2 };

Kind kind_of(const Scalar& s) {
    return static_cast<Kind>(ScalarOps::v(s).index());
}

} // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (is_rational() && o.is_rational()) return Scalar(as_rational() + o.as_rational());
    const Kind k = std::max(kind_of(*this), kind_of(o));
    if (k == Kind::Qd) {
        Quad a = to_quad(*this), b = to_quad(o);
        return ScalarOps::make(Quad{a.a + b.a, a.b + b.b});
    }
    const int n = std::get_if<Cyc>(&v_) ? std::get_if<Cyc>(&v_)->order
                                        : std::get_if<Cyc>(&o.v_)->order;
    Cyc a = to_cyc(*this, n), b = to_cyc(o, n);
    for (size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
    return ScalarOps::make(std::move(a));
}

Scalar Scalar::operator-() const {
    if (const Rational* r = std::get_if<Rational>(&v_)) return Scalar(-*r);
    if (const Quad* q = std::get_if<Quad>(&v_)) return ScalarOps::make(Quad{-q->a, -q->b});
    Cyc c = *std::get_if<Cyc>(&v_);
    for (auto& x : c.coords) x = -x;
    return ScalarOps::make(std::move(c));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    if (is_rational() && o.is_rational()) return Scalar(as_rational() * o.as_rational());
    const Kind k = std::max(kind_of(*this), kind_of(o));
    if (k == Kind::Qd) {
        Quad a = to_quad(*this), b = to_quad(o);
        return ScalarOps::make(Quad{a.a * b.a + 5 * a.b * b.b, a.a * b.b + a.b * b.a});
    }
    const int n = std::get_if<Cyc>(&v_) ? std::get_if<Cyc>(&v_)->order
                                        : std::get_if<Cyc>(&o.v_)->order;
    Cyc a = to_cyc(*this, n), b = to_cyc(o, n);
    RP prod = rp_mod(rp_mul(a.coords, b.coords), cyclotomic_polynomial(n));
    Cyc c{n, RP(a.coords.size(), Rational(0))};
    for (size_t i = 0; i < prod.size(); ++i) c.coords[i] = prod[i];
    return ScalarOps::make(std::move(c));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero scalar");
    if (const Rational* r = std::get_if<Rational>(&v_)) return Scalar(Rational(1) / *r);
    if (const Quad* q = std::get_if<Quad>(&v_)) {
        Rational norm = q->a * q->a - 5 * q->b * q->b; // conjugate norm, nonzero
        return ScalarOps::make(Quad{q->a / norm, -q->b / norm});
    }
    const Cyc& c = *std::get_if<Cyc>(&v_);
    RP a = c.coords;
    rp_trim(a);
    auto [g, u] = rp_half_ext_gcd(a, rp_from_intpoly(cyclotomic_polynomial(c.order)));
    if (g.size() != 1)
        throw Error("cyclotomic inverse: gcd is not constant"); // unreachable: Phi_n irreducible
    const Rational& gc = g[0];
    Cyc inv{c.order, RP(c.coords.size(), Rational(0))};
    RP red = rp_mod(std::move(u), cyclotomic_polynomial(c.order));
    for (size_t i = 0; i < red.size(); ++i) inv.coords[i] = red[i] / gc;
    return ScalarOps::make(std::move(inv));
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_rational()) {
        // cheap common case: divide componentwise
        const Rational& d = o.as_rational();
        if (d == 0) throw Error("division by zero scalar");
        if (const Rational* r = std::get_if<Rational>(&v_)) return Scalar(*r / d);
        if (const Quad* q = std::get_if<Quad>(&v_))
            return ScalarOps::make(Quad{q->a / d, q->b / d});
        Cyc c = *std::get_if<Cyc>(&v_);
        for (auto& x : c.coords) x /= d;
        return ScalarOps::make(std::move(c));
    }
    return *this * o.inverse();
}

Scalar Scalar::complex_conjugate() const {
    const Cyc* c = std::get_if<Cyc>(&v_);
    if (!c) return *this; // rationals and Q(sqrt5) sit inside the reals
    const int n = c->order;
    RP acc;
    for (size_t k = 0; k < c->coords.size(); ++k) {
        if (c->coords[k] == 0) continue;
        const size_t e = k == 0 ? 0 : static_cast<size_t>(n) - k;
        if (acc.size() <= e) acc.resize(e + 1, Rational(0));
        acc[e] += c->coords[k];
    }
    RP red = rp_mod(std::move(acc), cyclotomic_polynomial(n));
    Cyc r{n, RP(c->coords.size(), Rational(0))};
    for (size_t i = 0; i < red.size(); ++i) r.coords[i] = red[i];
    return ScalarOps::make(std::move(r));
}

int Scalar::compare(const Scalar& o) const {
    const auto ka = v_.index(), kb = o.v_.index();
    if (ka != kb) return ka < kb ? -1 : 1;
    if (const Rational* a = std::get_if<Rational>(&v_)) {
        const Rational& b = *std::get_if<Rational>(&o.v_);
        return *a == b ? 0 : (*a < b ? -1 : 1);
    }
    if (const Quad* a = std::get_if<Quad>(&v_)) {
        const Quad& b = *std::get_if<Quad>(&o.v_);
        if (a->a != b.a) return a->a < b.a ? -1 : 1;
        if (a->b != b.b) return a->b < b.b ? -1 : 1;
        return 0;
    }
    const Cyc& a = *std::get_if<Cyc>(&v_);
    const Cyc& b = *std::get_if<Cyc>(&o.v_);
    if (a.order != b.order) return a.order < b.order ? -1 : 1;
    for (size_t i = 0; i < a.coords.size(); ++i)
        if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i] ? -1 : 1;
    return 0;
}

std::string Scalar::to_string() const {
    if (const Rational* r = std::get_if<Rational>(&v_)) return gelmod::to_string(*r);
    std::ostringstream os;
    if (const Quad* q = std::get_if<Quad>(&v_)) {
        if (q->a != 0) os << gelmod::to_string(q->a) << (q->b > 0 ? " + " : " - ");
        else if (q->b < 0) os << "-";
        Rational ab = q->b < 0 ? Rational(-q->b) : q->b;
        if (ab != 1) os << gelmod::to_string(ab) << "*";
        os << "sqrt5";
        return os.str();
    }
    const Cyc& c = *std::get_if<Cyc>(&v_);
    bool first = true;
    for (size_t k = 0; k < c.coords.size(); ++k) {
        const Rational& x = c.coords[k];
        if (x == 0) continue;
        Rational ax = x < 0 ? Rational(-x) : x;
        if (first) {
            if (x < 0) os << "-";
            first = false;
        } else {
            os << (x < 0 ? " - " : " + ");
        }
        if (ax != 1 || k == 0) os << gelmod::to_string(ax);
        if (k > 0) {
            if (ax != 1) os << "*";
            os << "zeta" << c.order;
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
}

} // namespace gelmod
