#pragma once

// Exact irreducible character values on conjugacy classes, per family:
// Murnaghan-Nakayama for the symmetric-group family, its wreath-product
// extension for the signed families, explicit tables for dihedral and H3.

#include "gelmod/coxeter.hpp"
#include "gelmod/partitions.hpp"

#include <variant>
#include <vector>

namespace gelmod {

struct ALabel {
    Partition alpha; // partition of n+1
};
struct BLabel {
    BiPartition pair; // |alpha| + |beta| = n
};
struct DLabel {
    BiPartition pair; // canonical orientation; see irreducible_labels
    int split = 0;    // 0 none (alpha != beta); 1 = ', 2 = '' (alpha == beta)
};
struct DihedralLabel {
    enum Kind { Triv, Sign, DetPlus, DetMinus, TwoDim } kind = Triv;
    int j = 0; // for TwoDim: 1 <= j <= floor((n-1)/2), or n/2 - 1 for even n
};
struct H3Label {
    int a5_index = 0; // 0..4 = U1, V4, W5, Y3, Z3
    bool primed = false;
};

using IrreducibleLabel = std::variant<ALabel, BLabel, DLabel, DihedralLabel, H3Label>;

// All labels for the group, in a fixed deterministic order: A by descending
// lexicographic partitions; B by bipartition order; D by first encounter in
// bipartition order (split pairs emit ' then ''); dihedral one-dims first;
// H3 in table order U1, U1', V4, V4', W5, W5', Y3, Y3', Z3, Z3'.
std::vector<IrreducibleLabel> irreducible_labels(const CoxeterDescriptor& g);

std::string label_to_string(const IrreducibleLabel& label);

// chi_alpha at the class of the given cycle type in S_{|alpha|}.
Int character_S(const Partition& alpha, const Partition& cycleType);

// Wreath-product character of the hyperoctahedral group at the class with
// positive cycle type pos and negative cycle type neg.
Int character_B(const BiPartition& label, const Partition& pos, const Partition& neg);

// Character of the restriction of the hyperoctahedral irreducible to the
// index-2 subgroup: irreducible when alpha != beta, the sum of the two split
// constituents when alpha == beta.
Int character_D_restricted(const BiPartition& label, const SignedCycleKey& cls);

Scalar character_dihedral(int n, const DihedralLabel& label, const DihedralKey& cls);

Scalar character_H3(const H3Label& label, const H3Key& cls);

// Dispatch on the family; label and class datum must belong to g.
Scalar character_value(const CoxeterDescriptor& g, const IrreducibleLabel& label,
                       const ClassDatum& cls);

Int label_dimension(const CoxeterDescriptor& g, const IrreducibleLabel& label);

struct OrthogonalityReport {
    bool pass = true;
    std::vector<std::string> failures;
};

// First (row) and second (column) orthogonality over the class data, exact.
OrthogonalityReport orthogonality_check(const CoxeterDescriptor& g);

} // namespace gelmod
