#pragma once

// Integer partitions, bipartitions, and rim-hook removal (via beta numbers).

#include "gelmod/numbers.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gelmod {

class Partition {
public:
    Partition() = default;
    // Accepts weakly decreasing nonnegative parts; trailing zeros stripped.
    explicit Partition(std::vector<int> parts);

    int sum() const { return sum_; }                 // |alpha|
    int count() const { return static_cast<int>(parts_.size()); } // number of parts
    std::span<const int> parts() const { return parts_; }
    int part(int i) const;                           // 1-indexed; 0 past the end
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Lexicographic on the parts vector (so e.g. [2] > [1,1]).
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }
    bool operator>(const Partition& o) const { return o < *this; }

    Partition conjugate() const;
    std::string to_string() const;                   // "[3,1]", "[]"
    static Partition parse(std::string_view s);      // inverse of to_string

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

// All partitions of n in descending lexicographic order ([n] first).
std::vector<Partition> partitions_of(int n);

// lambda_i = alpha_i - i + padTo for i = 1..padTo (alpha zero-padded).
// Strictly decreasing nonnegative values. Throws PadTooSmall if padTo is
// less than the number of parts.
std::vector<int> lambda_values(const Partition& alpha, int padTo);

struct BiPartition {
    Partition alpha, beta;
    int total() const { return alpha.sum() + beta.sum(); }
    bool operator==(const BiPartition& o) const {
        return alpha == o.alpha && beta == o.beta;
    }
    std::string to_string() const; // "([2,1],[1])"
};

// All bipartitions (alpha, beta) with |alpha| + |beta| = n; alpha runs from
// size n down to 0, each side in descending lexicographic order.
std::vector<BiPartition> bipartitions_of(int n);

// All ways to remove a rim hook of the given length; returns the smaller
// partition together with the hook's leg length.
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& p, int length);

// Number of standard Young tableaux (hook length formula).
Int standard_tableaux_count(const Partition& p);

} // namespace gelmod
