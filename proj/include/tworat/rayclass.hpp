#pragma once

#include <vector>

#include "tworat/arith.hpp"
#include "tworat/group.hpp"

namespace tworat {

struct UnitGenerator {
    i64 residue;  // in [1, M)
    i64 order;
    friend bool operator==(const UnitGenerator&, const UnitGenerator&) = default;
};

// (Z/M)^* as a product of cyclic groups. For 2^k the classes of -1 and 5
// (only -1 when k = 2); for p^a the smallest primitive root. Generators of
// one CRT component are lifted to 1 modulo the other component.
struct UnitGroup {
    i64 modulus;
    std::vector<UnitGenerator> generators;
    i64 order() const;
};

// Requires M >= 3 of the form 2^k p^a. Throws InvalidArgument otherwise.
UnitGroup units_mod(i64 M);

struct RayClassLevel {
    int k;
    AbelianGroupStructure structure;
};

struct RayClassReport {
    i64 p;
    i64 q;
    std::vector<RayClassLevel> per_level;  // k = 3 .. k_max
    int stabilization_level;               // first k from which the structure no longer changes
    AbelianGroupStructure structure;       // the stabilized structure
    i64 stabilized_order;
    SquarefreeInt quadratic_character{1};
};

// 2-Sylow of (Z/2^k p)^* modulo the classes of -1 and q, for k = 3 .. k_max.
// Requires p != q both primitive (HypothesisViolation) and k_max >= 5.
// Throws TheoremViolation unless the stabilized group is cyclic of order 2^v2(p-1).
RayClassReport gal_N(OddPrime p, OddPrime q, int k_max = 12);

// The real quadratic field tamely ramified at p alone and split at q. Only
// p and 2p qualify: a real quadratic label with odd ramified set {p} is
// p or 2p, and -p, -2p are imaginary. Their product is 2, inert at the
// primitive q, so exactly one of them splits q.
SquarefreeInt find_K_prime(OddPrime p, OddPrime q);

// 2-rank of (Z/q)^* tensor Z2 modulo the image of 2.
int mirror_2rank(OddPrime q, OddPrime p);

// True iff the image of 2 generates the 2-Sylow of (Z/q)^*. Also checks that
// quotienting further by p and -1 leaves the group unchanged.
bool verify_mirror(OddPrime q, OddPrime p);

struct ReflectionRanks {
    int rank_T_S;
    int rank_mirror;
    friend bool operator==(const ReflectionRanks&, const ReflectionRanks&) = default;
};

// Throws TheoremViolation unless rank_T_S - rank_mirror == 1.
ReflectionRanks reflection_identity(OddPrime p, OddPrime q);

}  // namespace tworat
