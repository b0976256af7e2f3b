#include "gelmod/coxeter.hpp"

#include "gelmod/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gelmod {

bool family_computable(Family f) {
    switch (f) {
        case Family::A:
        case Family::B:
        case Family::D:
        case Family::Dihedral:
        case Family::H3:
            return true;
        default:
            return false;
    }
}

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::D: return "D";
        case Family::Dihedral: return "I2";
        case Family::H3: return "H3";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::F4: return "F4";
        case Family::H4: return "H4";
    }
    return "?";
}

CoxeterDescriptor descriptor(Family family, int parameter) {
    if (!family_computable(family))
        throw UnsupportedFamily(family_name(family) +
                                " is classification-only; no computational data");
    switch (family) {
        case Family::A:
            if (parameter < 1) throw ParameterOutOfRange("A requires rank >= 1");
            break;
        case Family::B:
            if (parameter < 2) throw ParameterOutOfRange("B requires rank >= 2");
            break;
        case Family::D:
            if (parameter < 4) throw ParameterOutOfRange("D requires rank >= 4");
            break;
        case Family::Dihedral:
            if (parameter < 3) throw ParameterOutOfRange("I2 requires n >= 3");
            break;
        case Family::H3:
            if (parameter != 0 && parameter != 3)
                throw ParameterOutOfRange("H3 takes no parameter");
            parameter = 3;
            break;
        default:
            break;
    }
    CoxeterDescriptor d;
    d.family_ = family;
    d.parameter_ = parameter;
    return d;
}

int CoxeterDescriptor::rank() const {
    switch (family_) {
        case Family::A:
        case Family::B:
        case Family::D:
            return parameter_;
        case Family::Dihedral:
            return 2;
        case Family::H3:
            return 3;
        default:
            return 0; // unreachable: descriptor() rejects these
    }
}

std::vector<int> CoxeterDescriptor::degrees() const {
    std::vector<int> d;
    switch (family_) {
        case Family::A:
            for (int i = 2; i <= parameter_ + 1; ++i) d.push_back(i);
            break;
        case Family::B:
            for (int i = 1; i <= parameter_; ++i) d.push_back(2 * i);
            break;
        case Family::D:
            for (int i = 1; i <= parameter_ - 1; ++i) d.push_back(2 * i);
            d.push_back(parameter_);
            std::sort(d.begin(), d.end());
            break;
        case Family::Dihedral:
            d = {2, parameter_};
            break;
        case Family::H3:
            d = {2, 6, 10};
            break;
        default:
            break;
    }
    return d;
}

Int CoxeterDescriptor::order() const {
    Int o = 1;
    for (int d : degrees()) o *= d;
    return o;
}

int CoxeterDescriptor::reflection_count() const {
    int n = 0;
    for (int d : degrees()) n += d - 1;
    return n;
}

int CoxeterDescriptor::coxeter_m(int i, int j) const {
    const int r = generator_count();
    if (i < 0 || j < 0 || i >= r || j >= r)
        throw ParameterOutOfRange("coxeter_m: generator index out of range");
    if (i == j) return 1;
    if (i > j) std::swap(i, j);
    switch (family_) {
        case Family::A:
            return j - i == 1 ? 3 : 2;
        case Family::B:
            if (j - i != 1) return 2;
            return j == r - 1 ? 4 : 3;
        case Family::D:
            if (j == r - 1) return i == r - 3 ? 3 : 2; // fork attaches two below
            return j - i == 1 ? 3 : 2;
        case Family::Dihedral:
            return parameter_;
        case Family::H3:
            if (i == 0 && j == 1) return 5;
            if (i == 1 && j == 2) return 3;
            return 2;
        default:
            return 2;
    }
}

std::string CoxeterDescriptor::name() const {
    switch (family_) {
        case Family::Dihedral:
            return "I2(" + std::to_string(parameter_) + ")";
        case Family::H3:
            return "H3";
        default:
            return family_name(family_) + std::to_string(parameter_);
    }
}

CoxeterDescriptor GroupFactor::desc() const { return descriptor(family, parameter); }

std::string GroupFactor::name() const {
    switch (family) {
        case Family::Dihedral:
            return "I2(" + std::to_string(parameter) + ")";
        case Family::A:
        case Family::B:
        case Family::D:
            return family_name(family) + std::to_string(parameter);
        default:
            return family_name(family);
    }
}

std::string ProductDescriptor::name() const {
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "x";
        s += factors[i].name();
    }
    return s;
}

bool ProductDescriptor::all_computable() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const GroupFactor& f) { return f.computable(); });
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

namespace {

Matrix transposition_matrix(int n, int i) {
    // swap coordinates i, i+1 (0-indexed)
    Matrix m = Matrix::identity(n);
    m.at(i, i) = Scalar();
    m.at(i + 1, i + 1) = Scalar();
    m.at(i, i + 1) = Scalar(1);
    m.at(i + 1, i) = Scalar(1);
    return m;
}

} // namespace

std::vector<Matrix> canonical_rep_generators(const CoxeterDescriptor& g) {
    const int n = g.rank();
    std::vector<Matrix> gens;
    switch (g.family()) {
        case Family::A: {
            // permutation action of S_{n+1} written on the root basis
            // e_i = x_i - x_{i+1}; identical to the 2cos-form matrices
            for (int i = 0; i < n; ++i) {
                Matrix m = Matrix::identity(n);
                m.at(i, i) = Scalar(-1);
                if (i > 0) m.at(i, i - 1) = Scalar(1);
                if (i < n - 1) m.at(i, i + 1) = Scalar(1);
                gens.push_back(std::move(m));
            }
            break;
        }
        case Family::B: {
            for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition_matrix(n, i));
            Matrix flip = Matrix::identity(n);
            flip.at(n - 1, n - 1) = Scalar(-1);
            gens.push_back(std::move(flip));
            break;
        }
        case Family::D: {
            for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition_matrix(n, i));
            Matrix m = Matrix::identity(n);
            m.at(n - 2, n - 2) = Scalar();
            m.at(n - 1, n - 1) = Scalar();
            m.at(n - 2, n - 1) = Scalar(-1);
            m.at(n - 1, n - 2) = Scalar(-1);
            gens.push_back(std::move(m));
            break;
        }
        case Family::Dihedral: {
            const int nn = g.parameter();
            Matrix sigma(2);
            sigma.at(0, 1) = Scalar(1);
            sigma.at(1, 0) = Scalar(1);
            Matrix rhosigma(2);
            rhosigma.at(0, 1) = Scalar::root_of_unity(nn, 1);
            rhosigma.at(1, 0) = Scalar::root_of_unity(nn, -1);
            gens = {sigma, rhosigma};
            break;
        }
        case Family::H3: {
            for (int s = 0; s < 3; ++s) {
                Matrix m = Matrix::identity(3);
                for (int j = 0; j < 3; ++j) {
                    if (j == s) {
                        m.at(s, s) = Scalar(-1);
                        continue;
                    }
                    switch (g.coxeter_m(s, j)) {
                        case 2: break;                         // 2cos(pi/2) = 0
                        case 3: m.at(s, j) = Scalar(1); break; // 2cos(pi/3) = 1
                        case 5:                                // 2cos(pi/5) = (1+sqrt5)/2
                            m.at(s, j) = Scalar(Quad{Rational(1, 2), Rational(1, 2)});
                            break;
                        default:
                            throw Error("unexpected Coxeter entry for H3");
                    }
                }
                gens.push_back(std::move(m));
            }
            break;
        }
        default:
            throw UnsupportedFamily("generators: " + family_name(g.family()));
    }
    return gens;
}

GroupElementList enumerate_from_generators(const std::vector<Matrix>& gens, const Int& cap) {
    GroupElementList out;
    if (gens.empty()) throw Error("enumerate: no generators");
    const int n = gens.front().size();
    std::set<Matrix> seen;
    const Matrix id = Matrix::identity(n);
    seen.insert(id);
    out.elements.push_back(id);
    out.inverses.push_back(id);
    // generator inverses (simple reflections are involutions, but don't assume)
    std::vector<Matrix> geninv;
    geninv.reserve(gens.size());
    for (const auto& s : gens) geninv.push_back(s.inverse());
    size_t head = 0;
    while (head < out.elements.size()) {
        const Matrix cur = out.elements[head];
        const Matrix curinv = out.inverses[head];
        ++head;
        for (size_t k = 0; k < gens.size(); ++k) {
            Matrix next = cur * gens[k];
            if (seen.count(next)) continue;
            if (Int(static_cast<long>(seen.size())) + 1 > cap)
                throw OrderExceedsCap("group order exceeds cap " + cap.str());
            seen.insert(next);
            out.inverses.push_back(geninv[k] * curinv);
            out.elements.push_back(std::move(next));
        }
    }
    return out;
}

GroupElementList enumerate_elements(const CoxeterDescriptor& g, const Int& cap) {
    if (g.order() > cap)
        throw OrderExceedsCap("order " + g.order().str() + " exceeds cap " + cap.str());
    return enumerate_from_generators(canonical_rep_generators(g), cap);
}

// ---------------------------------------------------------------------------
// Conjugacy classes
// ---------------------------------------------------------------------------

namespace {

std::map<int, int> multiplicities(const Partition& p) {
    std::map<int, int> m;
    for (int part : p.parts()) ++m[part];
    return m;
}

// |centralizer| of a permutation with this cycle type in the symmetric group
Int symmetric_centralizer(const Partition& p) {
    Int z = 1;
    for (auto [part, mult] : multiplicities(p))
        z *= int_pow(part, mult) * factorial(mult);
    return z;
}

// centralizer factor of one sign block in the hyperoctahedral group
Int hyperoctahedral_centralizer(const Partition& p) {
    Int z = 1;
    for (auto [part, mult] : multiplicities(p))
        z *= int_pow(2 * part, mult) * factorial(mult);
    return z;
}

IntPolynomial signed_cycle_det(const Partition& pos, const Partition& neg) {
    IntPolynomial d(1);
    for (int p : pos.parts())
        d *= IntPolynomial(1) - IntPolynomial::monomial(1, p);
    for (int q : neg.parts())
        d *= IntPolynomial(1) + IntPolynomial::monomial(1, q);
    return d;
}

} // namespace

const std::vector<A5ClassInfo>& a5_class_table() {
    static const std::vector<A5ClassInfo> table = [] {
        const Scalar golden(Quad{Rational(1, 2), Rational(1, 2)});
        const Scalar golden_conj(Quad{Rational(1, 2), Rational(-1, 2)});
        return std::vector<A5ClassInfo>{
            {"1A", 1, Scalar(3)},  {"2A", 15, Scalar(-1)}, {"3A", 20, Scalar(0)},
            {"5A", 12, golden},    {"5B", 12, golden_conj},
        };
    }();
    return table;
}

std::vector<ClassDatum> conjugacy_classes(const CoxeterDescriptor& g) {
    std::vector<ClassDatum> out;
    switch (g.family()) {
        case Family::A: {
            const int n = g.parameter();
            const Int size_g = g.order();
            for (const auto& mu : partitions_of(n + 1)) {
                IntPolynomial d(1);
                for (int part : mu.parts())
                    d *= IntPolynomial(1) - IntPolynomial::monomial(1, part);
                d = poly_exact_div(d, IntPolynomial(1) - IntPolynomial::monomial(1, 1));
                out.push_back(ClassDatum{mu.to_string(), size_g / symmetric_centralizer(mu),
                                         ScalarPoly::from_int_polynomial(d),
                                         CycleTypeKey{mu}});
            }
            break;
        }
        case Family::B: {
            const Int size_g = g.order();
            for (const auto& bp : bipartitions_of(g.parameter())) {
                const Partition& pos = bp.alpha;
                const Partition& neg = bp.beta;
                out.push_back(ClassDatum{
                    bp.to_string(),
                    size_g / (hyperoctahedral_centralizer(pos) * hyperoctahedral_centralizer(neg)),
                    ScalarPoly::from_int_polynomial(signed_cycle_det(pos, neg)),
                    SignedCycleKey{pos, neg}});
            }
            break;
        }
        case Family::D: {
            // classes of the ambient hyperoctahedral group with an even number
            // of negative cycles; very-even classes stay merged, so sizes are
            // the full ambient class sizes and sum to |D_n|
            const Int ambient = g.order() * 2;
            for (const auto& bp : bipartitions_of(g.parameter())) {
                const Partition& pos = bp.alpha;
                const Partition& neg = bp.beta;
                if (neg.count() % 2 != 0) continue;
                out.push_back(ClassDatum{
                    bp.to_string(),
                    ambient / (hyperoctahedral_centralizer(pos) * hyperoctahedral_centralizer(neg)),
                    ScalarPoly::from_int_polynomial(signed_cycle_det(pos, neg)),
                    SignedCycleKey{pos, neg}});
            }
            break;
        }
        case Family::Dihedral: {
            const int n = g.parameter();
            // rotations: k and n-k are conjugate; reflections split in two
            // classes when n is even
            for (int k = 0; k <= n / 2; ++k) {
                Int size = (k == 0 || 2 * k == n) ? 1 : 2;
                ScalarPoly det =
                    ScalarPoly::from_coefficients({Scalar(1), -Scalar::root_of_unity(n, k)}) *
                    ScalarPoly::from_coefficients({Scalar(1), -Scalar::root_of_unity(n, -k)});
                std::string label = k == 0 ? "e" : "rot" + std::to_string(k);
                out.push_back(ClassDatum{label, size, det, DihedralKey{false, k}});
            }
            const ScalarPoly refl_det = ScalarPoly::from_int_polynomial(
                IntPolynomial(1) - IntPolynomial::monomial(1, 2));
            if (n % 2 == 1) {
                out.push_back(ClassDatum{"refl", n, refl_det, DihedralKey{true, 0}});
            } else {
                out.push_back(ClassDatum{"refl0", n / 2, refl_det, DihedralKey{true, 0}});
                out.push_back(ClassDatum{"refl1", n / 2, refl_det, DihedralKey{true, 1}});
            }
            break;
        }
        case Family::H3: {
            const auto& table = a5_class_table();
            for (int c = 0; c < static_cast<int>(table.size()); ++c) {
                const Scalar chi = table[static_cast<size_t>(c)].rotation_trace;
                for (int eps : {+1, -1}) {
                    // det(1 - t*eps*R) with R a rotation: eigenvalues 1, a, 1/a
                    // where 1 + a + 1/a = chi
                    const Scalar e(eps);
                    ScalarPoly lin = ScalarPoly::from_coefficients({Scalar(1), -e});
                    ScalarPoly quad = ScalarPoly::from_coefficients(
                        {Scalar(1), -(e * (chi - Scalar(1))), Scalar(1)});
                    out.push_back(ClassDatum{
                        std::string(table[static_cast<size_t>(c)].label) + (eps > 0 ? "+" : "-"),
                        table[static_cast<size_t>(c)].size, lin * quad, H3Key{c, eps}});
                }
            }
            break;
        }
        default:
            throw UnsupportedFamily("conjugacy_classes: " + family_name(g.family()));
    }
    return out;
}

} // namespace gelmod
