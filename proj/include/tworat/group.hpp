#pragma once

#include <string>
#include <vector>

#include "tworat/arith.hpp"

namespace tworat {

// Finite abelian group by invariant factors d1 | d2 | ... (all > 1).
// An empty list is the trivial group.
struct AbelianGroupStructure {
    std::vector<i64> invariant_factors;

    i64 order() const;
    bool is_trivial() const { return invariant_factors.empty(); }
    bool is_cyclic() const { return invariant_factors.size() <= 1; }
    // Number of invariant factors divisible by ell.
    int rank_at(i64 ell) const;
    AbelianGroupStructure two_part() const;
    std::string to_string() const;

    friend bool operator==(const AbelianGroupStructure&, const AbelianGroupStructure&) = default;
};

// Invariant factors of Z^n / (row lattice). The rows must span a full-rank
// sublattice; throws InvalidArgument otherwise.
AbelianGroupStructure smith_quotient(std::vector<std::vector<i64>> relations, std::size_t n);

// Structure of a finite abelian group from the multiset of its element orders.
// For each prime ell the number of elements killed by ell^k is ell^(s_k), and
// s_k - s_(k-1) counts the cyclic ell-factors of order at least ell^k.
AbelianGroupStructure structure_from_orders(const std::vector<i64>& orders);

// Builds invariant factors from an unordered list of cyclic factor orders.
AbelianGroupStructure structure_from_cyclic(const std::vector<i64>& cyclic_orders);

}  // namespace tworat
