#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tworat/arith.hpp"
#include "tworat/classify.hpp"
#include "tworat/fields.hpp"

namespace tworat {

enum class StepChoice { P, Q };
char to_char(StepChoice c);

enum class ObligationStatus { Checked, Symbolic };
std::string to_string(ObligationStatus s);

struct Obligation {
    std::string name;
    ObligationStatus status;
    std::string detail;
};

// One quadratic step K_i/K_{i-1}. Places are named by the word of splittings
// leading to them: the base pair is (P, Q); choosing P at a step leaves the
// two places above the other one, (Q.1, Q.2), as the next pair.
struct StepCertificate {
    int index;  // 1-based
    StepChoice choice;
    std::string ramified_place;
    std::string split_place;
    std::vector<Obligation> obligations;
};

struct RealizedStep {
    SquarefreeInt Kprime{1};
    MultiquadField Lprime;
    Verdict verdict;
};

struct TowerPlan {
    i64 base_p;
    i64 base_q;
    std::string choices;
    std::vector<StepCertificate> steps;
    std::optional<RealizedStep> realized_step1;
};

// Parses a word over {P, Q}. Throws InvalidArgument on other letters.
std::vector<StepChoice> parse_choices(std::string_view word);

// Throws HypothesisViolation unless p, q are distinct primitive primes and
// Q(sqrt -pq) is 2-birational. Step 1 obligations are computed over Q; later
// steps are recorded as symbolic. With realize, step 1 is also realized.
TowerPlan plan_tower(OddPrime p, OddPrime q, std::string_view choices, bool realize = false);

// K' = find_K_prime(p, q) for P, find_K_prime(q, p) for Q; L' = field(-pq, K').
// Throws TheoremViolation when the verdict on L' is negative.
RealizedStep realize_step1(OddPrime p, OddPrime q, StepChoice choice);

}  // namespace tworat
