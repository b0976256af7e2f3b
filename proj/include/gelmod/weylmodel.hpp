#pragma once

// The polynomial-model engine: monomial bases, induced matrix actions on
// homogeneous components, invariant-operator bases by group averaging,
// truncated joint kernels, the explicit dihedral basis with its annihilation
// certificate, and block-diagonal product checks.

#include "gelmod/coxeter.hpp"
#include "gelmod/fakedeg.hpp"
#include "gelmod/weyl.hpp"

#include <map>
#include <utility>
#include <vector>

namespace gelmod {

class MonomialBasis {
public:
    MonomialBasis(int nvars, int degree);
    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(mons_.size()); }
    const std::vector<int>& exponents(int i) const { return mons_[static_cast<size_t>(i)]; }
    int index_of(const std::vector<int>& e) const; // throws DimensionMismatch if absent

private:
    int nvars_, degree_;
    std::vector<std::vector<int>> mons_;
    std::map<std::vector<int>, int> index_;
};

// Matrix of the substitution "variable i -> column i of subst" acting on the
// homogeneous component spanned by basis; entry (i, j) is the coefficient of
// monomial i in the image of monomial j.
Matrix action_on_degree(const Matrix& subst, const MonomialBasis& basis);

// Basis of the invariant operators with x-degree p and d-degree q, obtained
// by averaging the monomial operators over the listed elements and filtering
// to an independent set. The count is cross-checked against the graded
// character inner product computed per element from det(1 - t g); a mismatch
// throws Error (it would mean the averaging and the character data disagree).
std::vector<WeylOperator> invariant_operator_basis(const GroupElementList& els,
                                                   int nvars, int p, int q);
std::vector<WeylOperator> invariant_operator_basis(const CoxeterDescriptor& g, int p, int q);

// degree -> linearly independent homogeneous polynomials of that degree
using GradedBasis = std::map<int, std::vector<MPoly>>;

struct TruncatedModel {
    GradedBasis basis;                              // only nonzero degrees appear
    std::map<int, Int> gradedDimension;             // aligned with basis
    std::vector<std::pair<int, int>> bidegreesUsed; // (p, q) pairs averaged
    Int totalDimension = 0;
};

// Joint kernel, inside each homogeneous component of degree m <= degreeBound,
// of all invariant operators of bidegree (p, q) with q <= degreeBound, p < q,
// q - p <= operatorDropBound.
TruncatedModel truncated_model(const GroupElementList& els, int nvars, int degreeBound,
                               int operatorDropBound);
TruncatedModel truncated_model(const CoxeterDescriptor& g, int degreeBound,
                               int operatorDropBound);

// Reference graded dimensions from the fake degrees: each label contributes
// firstMultiplicity * dim at its first-occurrence degree.
std::map<int, Int> model_graded_dimensions(const CoxeterDescriptor& g);

struct DihedralModel {
    GradedBasis basis;                       // polynomials in (z, zbar) = (x0, x1)
    std::vector<WeylOperator> annihilators;  // the two certified operators
    bool annihilationCertified = false;      // both kill every basis element
    Int dimension = 0;
};

// The explicit basis {1, z, ..., z^h, zbar, ..., zbar^h, z^n - zbar^n} with
// h = floor(n/2), together with the annihilation certificate for the
// operators d*dbar and z^{n-m} dbar^m + zbar^{n-m} d^m, m = h + 1.
DihedralModel dihedral_model_basis(int n);

// True when the explicit basis spans exactly the truncated kernel (both
// bounds set to the reflection count): graded dimensions agree and every
// listed polynomial lies in the kernel's span.
bool dihedral_model_matches_kernel(int n);

std::map<int, Int> convolve_graded(const std::map<int, Int>& a,
                                   const std::map<int, Int>& b);

struct ProductModelReport {
    std::map<int, Int> kernelDims; // truncated model on the block-diagonal sum
    std::map<int, Int> convolved;  // convolution of the factor reference maps
    bool match = false;
};

// Builds the product group as block-diagonal matrices and compares the
// truncated model's graded dimensions against the convolution of the two
// factors' reference maps.
ProductModelReport product_model_check(const CoxeterDescriptor& g1,
                                       const CoxeterDescriptor& g2);

} // namespace gelmod
