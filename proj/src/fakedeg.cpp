#include "gelmod/fakedeg.hpp"

#include "gelmod/errors.hpp"
#include "gelmod/scalarpoly.hpp"

namespace gelmod {
namespace {

int choose3(int m) {
    return static_cast<int>(static_cast<long long>(m) * (m - 1) * (m - 2) / 6);
}

std::vector<int> ladder(int upTo, int step) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(upTo > 0 ? upTo : 0));
    for (int i = 1; i <= upTo; ++i) v.push_back(i * step);
    return v;
}

// One side of the hook-content style quotient, shared between the symmetric
// (step 1) and signed (step 2) families: multiplies the pairwise difference
// product into num and the prefactor power + ladder products into den.
void lambda_block(const Partition& part, int padTo, int step,
                  IntPolynomial& num, IntPolynomial& den) {
    const std::vector<int> lam = lambda_values(part, padTo);
    for (size_t i = 0; i < lam.size(); ++i)
        for (size_t j = i + 1; j < lam.size(); ++j)
            num *= IntPolynomial::monomial(1, step * lam[i]) -
                   IntPolynomial::monomial(1, step * lam[j]);
    den *= IntPolynomial::monomial(1, step * choose3(padTo));
    for (int l : lam) den *= gaussian_product(ladder(l, step));
}

} // namespace

IntPolynomial fake_degree_A(const Partition& alpha) {
    return fake_degree_A_padded(alpha, alpha.count());
}

IntPolynomial fake_degree_A_padded(const Partition& alpha, int padTo) {
    IntPolynomial num = gaussian_product(ladder(alpha.sum(), 1));
    IntPolynomial den(1);
    lambda_block(alpha, padTo, 1, num, den);
    return poly_exact_div(num, den);
}

IntPolynomial fake_degree_B(const BiPartition& pair) {
    return fake_degree_B_padded(pair, pair.alpha.count(), pair.beta.count());
}

IntPolynomial fake_degree_B_padded(const BiPartition& pair, int padAlpha, int padBeta) {
    IntPolynomial num = IntPolynomial::monomial(1, pair.beta.sum()) *
                        gaussian_product(ladder(pair.total(), 2));
    IntPolynomial den(1);
    lambda_block(pair.alpha, padAlpha, 2, num, den);
    lambda_block(pair.beta, padBeta, 2, num, den);
    return poly_exact_div(num, den);
}

IntPolynomial fake_degree_D(const BiPartition& pair, std::optional<int> splitTag) {
    const int n = pair.total();
    if (pair.alpha == pair.beta) {
        if (!splitTag)
            throw MissingSplitTag("label " + pair.to_string() + " needs a split tag");
        if (*splitTag != 1 && *splitTag != 2)
            throw InvalidLabel("split tag must be 1 or 2");
        // both halves share the value; the quotient (t^n - 1)/(t^{2n} - 1)
        // is applied as exact division by t^n + 1
        return poly_exact_div(fake_degree_B(pair),
                              IntPolynomial::monomial(1, n) + IntPolynomial(1));
    }
    if (splitTag)
        throw InvalidLabel("split tag on non-split label " + pair.to_string());
    IntPolynomial both = fake_degree_B(pair) +
                         fake_degree_B(BiPartition{pair.beta, pair.alpha});
    return poly_exact_div(both, IntPolynomial::monomial(1, n) + IntPolynomial(1));
}

IntPolynomial fake_degree_dihedral(int n, const DihedralLabel& label) {
    if (n < 3) throw ParameterOutOfRange("dihedral parameter must be >= 3");
    switch (label.kind) {
    case DihedralLabel::Triv:
        return IntPolynomial(1);
    case DihedralLabel::Sign:
        return IntPolynomial::monomial(1, n);
    case DihedralLabel::DetPlus:
    case DihedralLabel::DetMinus:
        if (n % 2 != 0) throw InvalidLabel("det labels exist only for even n");
        return IntPolynomial::monomial(1, n / 2);
    case DihedralLabel::TwoDim:
        if (label.j < 1 || 2 * label.j >= n)
            throw InvalidLabel("two-dimensional index out of range");
        return IntPolynomial::monomial(1, label.j) + IntPolynomial::monomial(1, n - label.j);
    }
    throw InvalidLabel("unknown dihedral label");
}

IntPolynomial fake_degree_H3(const H3Label& label) {
    auto mons = [](std::initializer_list<int> exps) {
        IntPolynomial f;
        for (int e : exps) f += IntPolynomial::monomial(1, e);
        return f;
    };
    switch (label.a5_index) {
    case 0: return label.primed ? mons({15}) : mons({0});
    case 1: return label.primed ? mons({3, 7, 9, 11}) : mons({4, 6, 8, 12});
    case 2: return label.primed ? mons({5, 7, 9, 11, 13}) : mons({2, 4, 6, 8, 10});
    case 3: return label.primed ? mons({1, 5, 9}) : mons({6, 10, 14});
    case 4: return label.primed ? mons({3, 5, 7}) : mons({8, 10, 12});
    default: throw InvalidLabel("H3 label index out of range");
    }
}

IntPolynomial fake_degree_closed(const CoxeterDescriptor& g, const IrreducibleLabel& label) {
    switch (g.family()) {
    case Family::A: {
        const auto* l = std::get_if<ALabel>(&label);
        if (!l || l->alpha.sum() != g.parameter() + 1)
            throw InvalidLabel("label does not belong to " + g.name());
        return fake_degree_A(l->alpha);
    }
    case Family::B: {
        const auto* l = std::get_if<BLabel>(&label);
        if (!l || l->pair.total() != g.parameter())
            throw InvalidLabel("label does not belong to " + g.name());
        return fake_degree_B(l->pair);
    }
    case Family::D: {
        const auto* l = std::get_if<DLabel>(&label);
        if (!l || l->pair.total() != g.parameter())
            throw InvalidLabel("label does not belong to " + g.name());
        return fake_degree_D(l->pair,
                             l->split == 0 ? std::nullopt : std::optional<int>(l->split));
    }
    case Family::Dihedral: {
        const auto* l = std::get_if<DihedralLabel>(&label);
        if (!l) throw InvalidLabel("label does not belong to " + g.name());
        return fake_degree_dihedral(g.parameter(), *l);
    }
    case Family::H3: {
        const auto* l = std::get_if<H3Label>(&label);
        if (!l) throw InvalidLabel("label does not belong to " + g.name());
        return fake_degree_H3(*l);
    }
    default:
        throw UnsupportedFamily("no closed form for " + g.name());
    }
}

IntPolynomial fake_degree_molien(const CoxeterDescriptor& g, const IrreducibleLabel& label) {
    const int upTo = g.reflection_count();
    ScalarPoly sum;
    for (const ClassDatum& c : conjugacy_classes(g)) {
        Scalar chi = character_value(g, label, c);
        if (chi.is_zero()) continue;
        sum += c.det_one_minus_t.series_inverse(upTo).scaled(chi * Scalar(c.size));
    }
    ScalarPoly shape{Scalar(1)};
    for (int d : g.degrees())
        shape *= ScalarPoly(Scalar(1)) - ScalarPoly::monomial(Scalar(1), d);
    const ScalarPoly f =
        sum.truncated_mul(shape, upTo).scaled(Scalar(Rational(Int(1), g.order())));
    IntPolynomial out = f.to_int_polynomial();
    if (!out.coefficients_nonnegative())
        throw NonIntegralResult("negative graded multiplicity for " +
                                label_to_string(label) + " in " + g.name());
    return out;
}

FirstOccurrence first_occurrence(const IntPolynomial& f) {
    const int p = f.low_exponent();
    return FirstOccurrence{p, f.coeff(p)};
}

std::vector<Int> isotypic_series(const CoxeterDescriptor& g, const IrreducibleLabel& label,
                                 int upTo) {
    const IntPolynomial f = fake_degree_closed(g, label);
    std::vector<Int> out(static_cast<size_t>(upTo) + 1, Int(0));
    for (int k = 0; k <= upTo; ++k) out[static_cast<size_t>(k)] = f.coeff(k);
    // dividing by (1 - t^d) is a prefix accumulation with stride d
    for (int d : g.degrees())
        for (int k = d; k <= upTo; ++k)
            out[static_cast<size_t>(k)] += out[static_cast<size_t>(k - d)];
    return out;
}

std::vector<FakeDegreeReport> fake_degree_reports(const CoxeterDescriptor& g) {
    std::vector<FakeDegreeReport> out;
    for (const IrreducibleLabel& label : irreducible_labels(g)) {
        FakeDegreeReport r;
        r.label = label_to_string(label);
        r.fakeDegree = fake_degree_closed(g, label);
        const FirstOccurrence fo = first_occurrence(r.fakeDegree);
        r.p = fo.p;
        r.firstMultiplicity = fo.multiplicity;
        r.dim = label_dimension(g, label);
        out.push_back(std::move(r));
    }
    return out;
}

Verdict gelfand_verdict_computed(const CoxeterDescriptor& g) {
    Verdict v;
    v.method = "computed";
    for (const FakeDegreeReport& r : fake_degree_reports(g))
        if (r.firstMultiplicity != 1)
            v.witnesses.push_back(Witness{g.name(), r.label, r.firstMultiplicity});
    v.isGelfand = v.witnesses.empty();
    return v;
}

Verdict gelfand_verdict_classification(const ProductDescriptor& g) {
    Verdict v;
    v.method = "classified";
    for (const GroupFactor& f : g.factors) {
        const bool fails = (f.family == Family::D && f.parameter % 2 == 0) ||
                           f.family == Family::E7 || f.family == Family::E8;
        if (fails) v.witnesses.push_back(Witness{f.name(), "", Int(0)});
    }
    v.isGelfand = v.witnesses.empty();
    return v;
}

Verdict gelfand_verdict(const ProductDescriptor& g) {
    if (!g.all_computable()) return gelfand_verdict_classification(g);
    Verdict v;
    v.method = "computed";
    for (const GroupFactor& f : g.factors) {
        Verdict part = gelfand_verdict_computed(f.desc());
        v.witnesses.insert(v.witnesses.end(), part.witnesses.begin(), part.witnesses.end());
    }
    v.isGelfand = v.witnesses.empty();
    return v;
}

Int gelfand_dimension(const CoxeterDescriptor& g) {
    Int total = 0;
    for (const IrreducibleLabel& label : irreducible_labels(g))
        total += label_dimension(g, label);
    return total;
}

Int gelfand_dimension(const ProductDescriptor& g) {
    Int total = 1;
    for (const GroupFactor& f : g.factors) total *= gelfand_dimension(f.desc());
    return total;
}

PoincareReport poincare_check(const CoxeterDescriptor& g) {
    PoincareReport r;
    for (const IrreducibleLabel& label : irreducible_labels(g))
        r.lhs += fake_degree_closed(g, label)
                     .times_monomial(label_dimension(g, label), 0);
    r.rhs = IntPolynomial(1);
    for (int d : g.degrees()) r.rhs *= geometric_sum(d);
    r.defect = r.lhs - r.rhs;
    r.pass = r.defect.is_zero();
    return r;
}

} // namespace gelmod
