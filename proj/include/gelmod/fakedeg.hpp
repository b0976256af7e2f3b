#pragma once

// Fake degrees: closed forms per family, an independent series oracle over
// class data, first-occurrence extraction, Gelfand verdicts, and the
// regular-representation (Poincare) identity check.

#include "gelmod/characters.hpp"
#include "gelmod/coxeter.hpp"
#include "gelmod/intpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gelmod {

// Closed form for the symmetric-group family. The value is independent of
// the padding length used for the lambda values; fake_degree_A picks the
// minimal one, the padded variant lets tests pin that invariance.
IntPolynomial fake_degree_A(const Partition& alpha);
IntPolynomial fake_degree_A_padded(const Partition& alpha, int padTo);

// Closed form for the signed-permutation family (group parameter n =
// |alpha| + |beta|).
IntPolynomial fake_degree_B(const BiPartition& pair);
IntPolynomial fake_degree_B_padded(const BiPartition& pair, int padAlpha, int padBeta);

// Closed form for the index-two subgroup family. splitTag (1 or 2) is
// required exactly when alpha == beta; both tags share one value.
IntPolynomial fake_degree_D(const BiPartition& pair, std::optional<int> splitTag);

IntPolynomial fake_degree_dihedral(int n, const DihedralLabel& label);

IntPolynomial fake_degree_H3(const H3Label& label);

// Dispatch to the closed form matching the group's family; validates that
// the label belongs to g.
IntPolynomial fake_degree_closed(const CoxeterDescriptor& g, const IrreducibleLabel& label);

// Independent evaluation from class data:
//   |G|^{-1} * prod_i (1 - t^{d_i}) * sum_c |c| * chi(c) / det(1 - t c)
// expanded to degree N = sum (d_i - 1). The scalar tower must collapse to
// nonnegative integers (NonIntegralResult otherwise). For split labels the
// class data cannot separate the two halves, so the result is the sum of
// both halves' values.
IntPolynomial fake_degree_molien(const CoxeterDescriptor& g, const IrreducibleLabel& label);

struct FirstOccurrence {
    int p = 0;        // lowest exponent with nonzero coefficient
    Int multiplicity; // that coefficient
};
FirstOccurrence first_occurrence(const IntPolynomial& f); // throws ZeroPolynomial

// Multiplicities of the label's irreducible in the homogeneous polynomial
// components of degrees 0..upTo: coefficients of f / prod_i (1 - t^{d_i}).
std::vector<Int> isotypic_series(const CoxeterDescriptor& g, const IrreducibleLabel& label,
                                 int upTo);

struct FakeDegreeReport {
    std::string label;
    IntPolynomial fakeDegree;
    int p = 0;
    Int firstMultiplicity;
    Int dim;
};

// One report per label, in irreducible_labels order, via the closed forms.
std::vector<FakeDegreeReport> fake_degree_reports(const CoxeterDescriptor& g);

struct Witness {
    std::string factor;
    std::string label;     // empty for classification-only witnesses
    Int firstMultiplicity; // 0 for classification-only witnesses
};

struct Verdict {
    bool isGelfand = true;
    std::string method; // "computed" or "classified"
    std::vector<Witness> witnesses;
};

// Scans first multiplicities of one computable group.
Verdict gelfand_verdict_computed(const CoxeterDescriptor& g);
// Classification rule alone: fails exactly when some factor has even
// parameter in the D family or is tagged E7 or E8.
Verdict gelfand_verdict_classification(const ProductDescriptor& g);
// Computed factor-by-factor when every factor supports it, classification
// otherwise.
Verdict gelfand_verdict(const ProductDescriptor& g);

// Sum of irreducible dimensions (= number of involutions, identity included).
Int gelfand_dimension(const CoxeterDescriptor& g);
Int gelfand_dimension(const ProductDescriptor& g); // multiplies over factors

struct PoincareReport {
    bool pass = false;
    IntPolynomial lhs;    // sum of dim * fake degree over all labels
    IntPolynomial rhs;    // prod over degrees of (t^d - 1)/(t - 1)
    IntPolynomial defect; // lhs - rhs
};
PoincareReport poincare_check(const CoxeterDescriptor& g);

} // namespace gelmod
