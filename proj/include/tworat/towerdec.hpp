#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tworat/arith.hpp"

namespace tworat {

// Layer n >= 1 of the cyclotomic Z2-extension of Q is the real subfield of
// Q(zeta_{2^(n+2)}); its Galois group is (Z/2^(n+2))^* / {+-1}, cyclic of
// order 2^n. A prime q is unramified there, with Frobenius the image of q.

inline constexpr int kDefaultTowerDepth = 6;
inline constexpr int kMaxTowerDepth = 60;

struct TowerLevel {
    int n;      // level index, >= 1
    i64 f;      // residue degree
    i64 g;      // number of places
    friend bool operator==(const TowerLevel&, const TowerLevel&) = default;
};

struct TowerProfile {
    i64 prime;
    std::vector<TowerLevel> levels;
};

class PrimitivityClass {
public:
    enum class Kind { Primitive, SemiPrimitive, Imprimitive };

    static PrimitivityClass primitive() { return PrimitivityClass(Kind::Primitive, 0); }
    static PrimitivityClass semi_primitive() { return PrimitivityClass(Kind::SemiPrimitive, 1); }
    static PrimitivityClass imprimitive(int split_depth) { return PrimitivityClass(Kind::Imprimitive, split_depth); }

    Kind kind() const { return kind_; }
    bool is_primitive() const { return kind_ == Kind::Primitive; }
    bool is_semi_primitive() const { return kind_ == Kind::SemiPrimitive; }
    // Largest level at which the place is completely split (0 for primitive).
    int split_depth() const { return split_depth_; }
    std::string name() const;

    friend bool operator==(const PrimitivityClass&, const PrimitivityClass&) = default;

private:
    PrimitivityClass(Kind k, int depth) : kind_(k), split_depth_(depth) {}
    Kind kind_;
    int split_depth_;
};

enum class Splitting { Split, Inert, Ramified };
std::string to_string(Splitting s);

// A tame place of some totally real base field: a name, the rational prime
// below it and its primitivity class in the base's cyclotomic Z2-extension.
struct PrimePlace {
    std::string name;
    i64 prime = 0;
    PrimitivityClass cls = PrimitivityClass::primitive();

    // The place of Q at q, classified by the congruence law.
    static PrimePlace over_Q(OddPrime q);

    friend bool operator==(const PrimePlace&, const PrimePlace&) = default;
};

// Residue degree and place count of q at levels 1..depth over Q.
TowerProfile decomposition_profile(OddPrime q, int depth = kDefaultTowerDepth);

// Reads a profile: Primitive when f = 2^n throughout, SemiPrimitive when g = 2
// throughout, otherwise Imprimitive with the deepest completely split level.
// The profile is rigid after the first level with g < 2^n (the group is
// cyclic, so f doubles at every later level), which is asserted here.
PrimitivityClass classify_profile(const TowerProfile& profile);

// Congruence law: Primitive iff q = +-3 mod 8, SemiPrimitive iff q = +-7 mod 16,
// otherwise Imprimitive with split depth v2(q -+ 1) - 2.
PrimitivityClass primitivity_over_Q(OddPrime q);

struct QuadraticPlaceInfo {
    Splitting splitting;
    // Empty when q ramifies in Q(sqrt m); only unramified places are classified.
    std::optional<PrimitivityClass> place_class;
    // Per-place profile in the cyclotomic Z2-extension of Q(sqrt m); empty when ramified.
    std::vector<TowerLevel> levels;
};

// Behaviour of q in K = Q(sqrt m) and primitivity of the places of K above q
// in the cyclotomic Z2-extension K^c/K. Throws InvalidArgument for m in {0, 1}
// or m not squarefree.
QuadraticPlaceInfo place_primitivity_in_quadratic(i64 m, OddPrime q, int depth = kDefaultTowerDepth);

}  // namespace tworat
