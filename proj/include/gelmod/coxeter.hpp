#pragma once

// Finite Coxeter group descriptors: degree tables, Coxeter matrices,
// generator matrices for the reflection representation, brute-force element
// enumeration, and symbolic conjugacy-class data (sizes and det(1 - t*g)).

#include "gelmod/matrix.hpp"
#include "gelmod/partitions.hpp"
#include "gelmod/scalarpoly.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gelmod {

enum class Family { A, B, D, Dihedral, H3, E6, E7, E8, F4, H4 };

// Families with full computational support. The rest are classification-only
// tags: they can appear in product expressions for Gelfand verdicts but
// support no computation.
bool family_computable(Family f);
std::string family_name(Family f);

class CoxeterDescriptor {
public:
    Family family() const { return family_; }
    int parameter() const { return parameter_; }

    int rank() const;                  // dim of the reflection representation
    std::vector<int> degrees() const;  // fundamental degrees d_1..d_rank
    Int order() const;                 // product of the degrees
    int reflection_count() const;      // sum of (d_i - 1)
    int generator_count() const { return rank(); }
    // Coxeter matrix entry for simple reflections i, j (0-indexed).
    int coxeter_m(int i, int j) const;

    std::string name() const;          // "A4", "B3", "I2(7)", "H3"

    bool operator==(const CoxeterDescriptor& o) const {
        return family_ == o.family_ && parameter_ == o.parameter_;
    }

private:
    Family family_ = Family::A;
    int parameter_ = 1;
    friend CoxeterDescriptor descriptor(Family, int);
};

// Validates and builds a descriptor. Supported ranges: A n>=1, B n>=2,
// D n>=4, Dihedral n>=3; H3 takes no parameter (pass 0 or 3).
// Classification-only families throw UnsupportedFamily.
CoxeterDescriptor descriptor(Family family, int parameter);

// One factor of a (possibly reducible) group: either a computable descriptor
// or a classification-only tag.
struct GroupFactor {
    Family family;
    int parameter; // meaningful for A/B/D/Dihedral; fixed rank otherwise
    bool computable() const { return family_computable(family); }
    CoxeterDescriptor desc() const; // throws UnsupportedFamily when not computable
    std::string name() const;
};

struct ProductDescriptor {
    std::vector<GroupFactor> factors; // at least one
    std::string name() const;         // factors joined with "x"
    bool all_computable() const;
};

// --- Conjugacy class data -------------------------------------------------

struct CycleTypeKey { Partition mu; };               // A: cycle type in S_{n+1}
struct SignedCycleKey { Partition pos, neg; };       // B and D
struct DihedralKey { bool reflection; int k; };      // rotation pair {k, n-k}, or reflection parity k
struct H3Key { int a5_class; int eps; };             // class 0..4 of A5, eps = +-1
using ClassKey = std::variant<CycleTypeKey, SignedCycleKey, DihedralKey, H3Key>;

struct ClassDatum {
    std::string label;
    Int size;
    ScalarPoly det_one_minus_t; // det(1 - t*g), constant term 1, degree = rank
    ClassKey key;
};

// Complete class list; sizes sum to |G|. For D the very-even classes are kept
// merged (one datum with the full size of the ambient B-class).
std::vector<ClassDatum> conjugacy_classes(const CoxeterDescriptor& g);

// One matrix per simple reflection. A uses the permutation realization on the
// root basis (integral), B/D signed permutations, Dihedral the diagonal
// (z, zbar) coordinates over cyclotomic scalars, H3 the 2cos form over
// Q(sqrt5).
std::vector<Matrix> canonical_rep_generators(const CoxeterDescriptor& g);

struct GroupElementList {
    std::vector<Matrix> elements; // [0] is the identity
    std::vector<Matrix> inverses; // aligned with elements
    size_t size() const { return elements.size(); }
};

// Closure of the generators under multiplication; throws OrderExceedsCap if
// more than cap distinct elements appear.
GroupElementList enumerate_elements(const CoxeterDescriptor& g, const Int& cap = 10000);
GroupElementList enumerate_from_generators(const std::vector<Matrix>& gens, const Int& cap);

// Stored A5 class table facts used for H3 (also consumed by characters).
struct A5ClassInfo {
    const char* label;
    int size;
    Scalar rotation_trace; // trace in the 3-dim rotation representation
};
const std::vector<A5ClassInfo>& a5_class_table();

} // namespace gelmod
