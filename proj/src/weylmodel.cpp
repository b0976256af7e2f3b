#include "gelmod/weylmodel.hpp"

#include "gelmod/errors.hpp"
#include "gelmod/linalg.hpp"
#include "gelmod/util.hpp"

#include <algorithm>

namespace gelmod {

MonomialBasis::MonomialBasis(int nvars, int degree)
    : nvars_(nvars), degree_(degree), mons_(monomials_of_degree(nvars, degree)) {
    for (int i = 0; i < static_cast<int>(mons_.size()); ++i)
        index_.emplace(mons_[static_cast<size_t>(i)], i);
}

int MonomialBasis::index_of(const std::vector<int>& e) const {
    auto it = index_.find(e);
    if (it == index_.end())
        throw DimensionMismatch("monomial outside this homogeneous component");
    return it->second;
}

Matrix action_on_degree(const Matrix& subst, const MonomialBasis& basis) {
    if (subst.size() != basis.nvars())
        throw DimensionMismatch("substitution size and variable count differ");
    const int n = basis.nvars();
    const int d = basis.degree();
    // intermediate bases for the degree-by-degree buildup
    std::vector<MonomialBasis> levels;
    levels.reserve(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) levels.emplace_back(n, k);
    Matrix out(basis.size());
    for (int col = 0; col < basis.size(); ++col) {
        const std::vector<int>& target = basis.exponents(col);
        // coefficient vector of the image, grown one linear factor at a time
        std::vector<Scalar> cur{Scalar(1)};
        int level = 0;
        for (int var = 0; var < n; ++var) {
            for (int rep = 0; rep < target[static_cast<size_t>(var)]; ++rep) {
                const MonomialBasis& from = levels[static_cast<size_t>(level)];
                const MonomialBasis& to = levels[static_cast<size_t>(level) + 1];
                std::vector<Scalar> next(static_cast<size_t>(to.size()), Scalar(0));
                for (int i = 0; i < from.size(); ++i) {
                    if (cur[static_cast<size_t>(i)].is_zero()) continue;
                    std::vector<int> e = from.exponents(i);
                    for (int j = 0; j < n; ++j) {
                        const Scalar& m = subst.at(j, var);
                        if (m.is_zero()) continue;
                        ++e[static_cast<size_t>(j)];
                        next[static_cast<size_t>(to.index_of(e))] +=
                            cur[static_cast<size_t>(i)] * m;
                        --e[static_cast<size_t>(j)];
                    }
                }
                cur = std::move(next);
                ++level;
            }
        }
        for (int i = 0; i < basis.size(); ++i) out.at(i, col) = cur[static_cast<size_t>(i)];
    }
    return out;
}

namespace {

// dim of the invariant operators of bidegree (p, q) from character data:
// average over the group of [t^q](1/det(1 - t g)) * [t^p](same).
Int expected_invariant_count(const GroupElementList& els, int p, int q) {
    const int top = std::max(p, q);
    Scalar acc(0);
    for (const Matrix& m : els.elements) {
        const ScalarPoly series = m.char_poly_reversed().series_inverse(top);
        acc += series.coeff(q) * series.coeff(p);
    }
    const Scalar value = acc * Scalar(Rational(Int(1), Int(els.size())));
    if (!value.is_integer()) throw Error("non-integral invariant operator count");
    return value.as_integer();
}

} // namespace

std::vector<WeylOperator> invariant_operator_basis(const GroupElementList& els,
                                                   int nvars, int p, int q) {
    const MonomialBasis xb(nvars, p), db(nvars, q);
    const int P = xb.size(), Q = db.size();
    std::vector<Matrix> xs, ds;
    xs.reserve(els.size());
    ds.reserve(els.size());
    for (size_t k = 0; k < els.size(); ++k) {
        xs.push_back(action_on_degree(els.elements[k], xb));
        ds.push_back(action_on_degree(els.inverses[k].transpose(), db));
    }
    std::vector<std::vector<Scalar>> averaged(static_cast<size_t>(P) * Q);
    parallel_for(P * Q, [&](int col) {
        const int a = col / Q, b = col % Q;
        std::vector<Scalar> v(static_cast<size_t>(P) * Q, Scalar(0));
        for (size_t k = 0; k < els.size(); ++k)
            for (int i = 0; i < P; ++i) {
                const Scalar& xia = xs[k].at(i, a);
                if (xia.is_zero()) continue;
                for (int j = 0; j < Q; ++j) {
                    const Scalar& djb = ds[k].at(j, b);
                    if (!djb.is_zero())
                        v[static_cast<size_t>(i) * Q + j] += xia * djb;
                }
            }
        averaged[static_cast<size_t>(col)] = std::move(v);
    });
    EchelonBasis ech(P * Q);
    for (auto& v : averaged) ech.insert(std::move(v));
    const Int expected = expected_invariant_count(els, p, q);
    if (Int(ech.rank()) != expected)
        throw Error("invariant operator count mismatch at bidegree (" +
                    std::to_string(p) + ", " + std::to_string(q) + "): averaged " +
                    std::to_string(ech.rank()) + ", characters say " + to_string(expected));
    std::vector<WeylOperator> out;
    out.reserve(static_cast<size_t>(ech.rank()));
    for (const std::vector<Scalar>& row : ech.rows()) {
        WeylOperator op(nvars);
        for (int i = 0; i < P; ++i)
            for (int j = 0; j < Q; ++j) {
                const Scalar& c = row[static_cast<size_t>(i) * Q + j];
                if (!c.is_zero()) op.add_term(xb.exponents(i), db.exponents(j), c);
            }
        out.push_back(std::move(op));
    }
    return out;
}

std::vector<WeylOperator> invariant_operator_basis(const CoxeterDescriptor& g, int p, int q) {
    return invariant_operator_basis(enumerate_elements(g), g.rank(), p, q);
}

TruncatedModel truncated_model(const GroupElementList& els, int nvars, int degreeBound,
                               int operatorDropBound) {
    TruncatedModel tm;
    std::map<std::pair<int, int>, std::vector<WeylOperator>> pool;
    for (int q = 1; q <= degreeBound; ++q)
        for (int p = std::max(0, q - operatorDropBound); p < q; ++p) {
            pool.emplace(std::make_pair(p, q), invariant_operator_basis(els, nvars, p, q));
            tm.bidegreesUsed.emplace_back(p, q);
        }
    for (int m = 0; m <= degreeBound; ++m) {
        const MonomialBasis mb(nvars, m);
        std::vector<std::vector<Scalar>> rows;
        for (const auto& [pq, ops] : pool) {
            const auto& [p, q] = pq;
            if (q > m) continue; // a pure d-degree above m kills the component anyway
            const MonomialBasis ob(nvars, m - q + p);
            for (const WeylOperator& op : ops) {
                std::vector<std::vector<Scalar>> block(
                    static_cast<size_t>(ob.size()),
                    std::vector<Scalar>(static_cast<size_t>(mb.size()), Scalar(0)));
                for (int j = 0; j < mb.size(); ++j) {
                    const MPoly image = weyl_apply(
                        op, MPoly::monomial(nvars, mb.exponents(j), Scalar(1)));
                    for (const auto& [e, c] : image.terms())
                        block[static_cast<size_t>(ob.index_of(e))][static_cast<size_t>(j)] = c;
                }
                for (auto& r : block) {
                    const bool nonzero =
                        std::any_of(r.begin(), r.end(),
                                    [](const Scalar& s) { return !s.is_zero(); });
                    if (nonzero) rows.push_back(std::move(r));
                }
            }
        }
        const std::vector<std::vector<Scalar>> kernel = kernel_basis(std::move(rows), mb.size());
        if (kernel.empty()) continue;
        std::vector<MPoly> polys;
        polys.reserve(kernel.size());
        for (const std::vector<Scalar>& v : kernel) {
            MPoly poly(nvars);
            for (int i = 0; i < mb.size(); ++i)
                poly.add_term(mb.exponents(i), v[static_cast<size_t>(i)]);
            polys.push_back(std::move(poly));
        }
        tm.gradedDimension[m] = Int(static_cast<int>(kernel.size()));
        tm.totalDimension += Int(static_cast<int>(kernel.size()));
        tm.basis.emplace(m, std::move(polys));
    }
    return tm;
}

TruncatedModel truncated_model(const CoxeterDescriptor& g, int degreeBound,
                               int operatorDropBound) {
    return truncated_model(enumerate_elements(g), g.rank(), degreeBound, operatorDropBound);
}

std::map<int, Int> model_graded_dimensions(const CoxeterDescriptor& g) {
    std::map<int, Int> out;
    for (const FakeDegreeReport& r : fake_degree_reports(g))
        out[r.p] += r.firstMultiplicity * r.dim;
    return out;
}

DihedralModel dihedral_model_basis(int n) {
    if (n < 3) throw ParameterOutOfRange("dihedral parameter must be >= 3");
    const int h = n / 2;
    const int m = h + 1;
    DihedralModel dm;
    auto zpow = [](int a, int b) {
        return MPoly::monomial(2, std::vector<int>{a, b}, Scalar(1));
    };
    dm.basis[0].push_back(zpow(0, 0));
    for (int k = 1; k <= h; ++k) {
        dm.basis[k].push_back(zpow(k, 0));
        dm.basis[k].push_back(zpow(0, k));
    }
    dm.basis[n].push_back(zpow(n, 0) - zpow(0, n));
    dm.dimension = Int(2 * h + 2);
    WeylOperator laplace =
        WeylOperator::monomial_op(2, {0, 0}, {1, 1}, Scalar(1));
    WeylOperator fold =
        WeylOperator::monomial_op(2, {n - m, 0}, {0, m}, Scalar(1)) +
        WeylOperator::monomial_op(2, {0, n - m}, {m, 0}, Scalar(1));
    dm.annihilators = {laplace, fold};
    dm.annihilationCertified = true;
    for (const auto& [deg, polys] : dm.basis)
        for (const MPoly& p : polys)
            for (const WeylOperator& op : dm.annihilators)
                if (!weyl_apply(op, p).is_zero()) dm.annihilationCertified = false;
    return dm;
}

bool dihedral_model_matches_kernel(int n) {
    const CoxeterDescriptor g = descriptor(Family::Dihedral, n);
    const DihedralModel dm = dihedral_model_basis(n);
    const int bound = g.reflection_count();
    const TruncatedModel tm = truncated_model(g, bound, bound);
    std::map<int, Int> dims;
    for (const auto& [d, polys] : dm.basis) dims[d] = Int(static_cast<int>(polys.size()));
    if (dims != tm.gradedDimension) return false;
    auto coeff_vector = [](const MPoly& p, const MonomialBasis& mb) {
        std::vector<Scalar> v(static_cast<size_t>(mb.size()), Scalar(0));
        for (const auto& [e, c] : p.terms()) v[static_cast<size_t>(mb.index_of(e))] = c;
        return v;
    };
    for (const auto& [d, polys] : dm.basis) {
        const MonomialBasis mb(2, d);
        EchelonBasis ech(mb.size());
        for (const MPoly& k : tm.basis.at(d)) ech.insert(coeff_vector(k, mb));
        for (const MPoly& p : polys)
            if (ech.insert(coeff_vector(p, mb))) return false; // escapes the kernel span
    }
    return true;
}

std::map<int, Int> convolve_graded(const std::map<int, Int>& a,
                                   const std::map<int, Int>& b) {
    std::map<int, Int> out;
    for (const auto& [i, u] : a)
        for (const auto& [j, v] : b) out[i + j] += u * v;
    return out;
}

ProductModelReport product_model_check(const CoxeterDescriptor& g1,
                                       const CoxeterDescriptor& g2) {
    const GroupElementList e1 = enumerate_elements(g1);
    const GroupElementList e2 = enumerate_elements(g2);
    GroupElementList prod;
    prod.elements.reserve(e1.size() * e2.size());
    prod.inverses.reserve(e1.size() * e2.size());
    for (size_t a = 0; a < e1.size(); ++a)
        for (size_t b = 0; b < e2.size(); ++b) {
            prod.elements.push_back(Matrix::block_diagonal(e1.elements[a], e2.elements[b]));
            prod.inverses.push_back(Matrix::block_diagonal(e1.inverses[a], e2.inverses[b]));
        }
    const int bound = g1.reflection_count() + g2.reflection_count();
    const TruncatedModel tm = truncated_model(prod, g1.rank() + g2.rank(), bound, bound);
    ProductModelReport r;
    r.kernelDims = tm.gradedDimension;
    r.convolved = convolve_graded(model_graded_dimensions(g1), model_graded_dimensions(g2));
    r.match = r.kernelDims == r.convolved;
    return r;
}

} // namespace gelmod
