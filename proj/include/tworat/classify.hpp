#pragma once

#include <string>
#include <vector>

#include "tworat/arith.hpp"
#include "tworat/fields.hpp"
#include "tworat/towerdec.hpp"

namespace tworat {

enum class CaseTag {
    // 2-rational multiquadratic fields, by shape: Q; real quadratic; real
    // biquadratic; imaginary quadratic; imaginary biquadratic; imaginary triquadratic.
    CMQ2R_i,
    CMQ2R_ii,
    CMQ2R_iii,
    CMQ2R_iv,
    CMQ2R_v,
    CMQ2R_vi,
    // 2-birational imaginary multiquadratic fields, after adjoining sqrt 2:
    BIR_a_i,   // F' = <2, -q>, q = 7 mod 16
    BIR_a_ii,  // F' = <2, -q q'>, q = -q' = +-3 mod 8
    BIR_b_i,   // F' = <2, p, -q>, -q = p = +-3 mod 8, (p|q) = -1
    BIR_b_ii,  // same with (p|q) = +1
    // propagation branches
    PROP_b1,   // the other ramified place is inert in K'/K
    PROP_b2,   // the other ramified place splits in K'/K
    NotApplicable,
};

std::string to_string(CaseTag tag);

struct Evidence {
    std::string condition;
    std::string values;
    bool ok = false;
    friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct Verdict {
    bool positive = false;
    CaseTag tag = CaseTag::NotApplicable;
    std::string reason;  // set when tag is NotApplicable
    std::vector<Evidence> evidence;
};

Verdict is_2rational_multiquadratic(const MultiquadField& F);

// Q(sqrt -d): positive iff d = q = 7 mod 16 prime, or d = pq with p = 3, q = 5 mod 8.
// Throws InvalidArgument unless d >= 1 is squarefree.
Verdict is_2birational_quadratic(i64 d);

// Classifies F up to adjoining sqrt 2: the verdict for F and for F(sqrt 2)
// always coincide. Throws InvalidArgument for totally real F.
Verdict is_2birational_multiquadratic(const MultiquadField& F);

// Symbolic propagation check for L/K 2-birational and K'/K totally real.
// ramified: the places of K tamely ramified in L/K. kprime_ramified: the
// unique tame place ramified in K'/K. other_behavior: how the other
// L-ramified place behaves in K'/K (split or inert).
Verdict check_propagation(const std::vector<PrimePlace>& ramified, int kprime_degree,
                          const PrimePlace& kprime_ramified, Splitting other_behavior);

}  // namespace tworat
