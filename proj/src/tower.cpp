#include "tworat/tower.hpp"

#include "tworat/rayclass.hpp"
#include "tworat/towerdec.hpp"

namespace tworat {

char to_char(StepChoice c) { return c == StepChoice::P ? 'P' : 'Q'; }

std::string to_string(ObligationStatus s) { return s == ObligationStatus::Checked ? "checked" : "symbolic"; }

std::vector<StepChoice> parse_choices(std::string_view word) {
    std::vector<StepChoice> out;
    for (char c : word) {
        if (c == 'P' || c == 'p') {
            out.push_back(StepChoice::P);
        } else if (c == 'Q' || c == 'q') {
            out.push_back(StepChoice::Q);
        } else {
            throw InvalidArgument(std::string("choice word must use letters P and Q, got '") + c + "'");
        }
    }
    return out;
}

namespace {

void check_admissible(OddPrime p, OddPrime q) {
    for (OddPrime x : {p, q}) {
        const auto cls = primitivity_over_Q(x);
        if (cls.is_primitive()) continue;
        std::string msg = std::to_string(x.value()) + " is not primitive (" + std::to_string(x.value()) +
                          " = " + std::to_string(mod(x, 8)) + " mod 8, class " + cls.name() +
                          "); propagation needs L ramified at two primitive places";
        if (cls.is_semi_primitive()) msg += ", and a semi-primitive ramified place admits no propagation";
        throw HypothesisViolation(msg);
    }
    if (p == q) throw HypothesisViolation("p and q must be distinct");
    const i64 d = checked_mul(p, q);
    const Verdict v = is_2birational_quadratic(d);
    if (!v.positive) {
        throw HypothesisViolation("Q(sqrt -" + std::to_string(d) + ") is not 2-birational (" + v.reason +
                                  "); need p = -q = 3 mod 8 up to order");
    }
}

Obligation checked(std::string name, bool ok, std::string detail) {
    if (!ok) throw TheoremViolation("step 1 obligation " + name + " fails: " + detail);
    return {std::move(name), ObligationStatus::Checked, std::move(detail)};
}

std::vector<Obligation> step1_obligations(OddPrime p, OddPrime q, StepChoice choice) {
    const OddPrime ram = choice == StepChoice::P ? p : q;
    const OddPrime other = choice == StepChoice::P ? q : p;
    const SquarefreeInt K = find_K_prime(ram, other);
    const std::string label = "Q(sqrt " + std::to_string(K.value()) + ")";
    std::vector<Obligation> obs;
    obs.push_back(checked("degree_two", K.value() != 1, label));
    obs.push_back(checked("totally_real", K.value() > 1, label));
    obs.push_back(checked("tame_ramified_exactly_at", K.odd_primes() == std::vector<i64>{ram.value()},
                          label + " tamely ramified at " + std::to_string(ram.value())));
    const int symbol = kronecker(K.discriminant(), other);
    obs.push_back(checked("split_at", symbol == 1,
                          "(" + std::to_string(K.discriminant()) + "|" + std::to_string(other.value()) +
                              ") = " + std::to_string(symbol)));
    const auto info = place_primitivity_in_quadratic(K.value(), other);
    const bool prim = info.place_class && info.place_class->is_primitive();
    obs.push_back(checked("places_primitive", prim,
                          "places above " + std::to_string(other.value()) + " in " + label + ": " +
                              (info.place_class ? info.place_class->name() : std::string("ramified"))));
    obs.push_back(checked("unique_dyadic_place", kronecker(K.discriminant(), 2) != 1,
                          "2 is " + std::string(kronecker(K.discriminant(), 2) == 0 ? "ramified" : "inert") +
                              " in " + label));
    const PrimePlace P = PrimePlace::over_Q(p);
    const PrimePlace Q = PrimePlace::over_Q(q);
    PrimePlace ramified = choice == StepChoice::P ? P : Q;
    ramified.name = choice == StepChoice::P ? "P" : "Q";
    std::vector<PrimePlace> places{P, Q};
    places[0].name = "P";
    places[1].name = "Q";
    const Verdict prop = check_propagation(places, 2, ramified, Splitting::Split);
    obs.push_back(checked("propagation_branch", prop.positive, to_string(prop.tag)));
    return obs;
}

std::vector<Obligation> symbolic_obligations(const std::string& ram, const std::string& split) {
    return {
        {"degree_two", ObligationStatus::Symbolic, ""},
        {"totally_real", ObligationStatus::Symbolic, ""},
        {"tame_ramified_exactly_at", ObligationStatus::Symbolic, ram},
        {"split_at", ObligationStatus::Symbolic, split},
        {"places_primitive", ObligationStatus::Symbolic, split + ".1, " + split + ".2"},
        {"unique_dyadic_place", ObligationStatus::Symbolic, ""},
    };
}

}  // namespace

TowerPlan plan_tower(OddPrime p, OddPrime q, std::string_view choices, bool realize) {
    const auto word = parse_choices(choices);
    check_admissible(p, q);
    TowerPlan plan{p, q, {}, {}, std::nullopt};
    for (auto c : word) plan.choices += to_char(c);
    std::string first = "P";
    std::string second = "Q";
    int index = 1;
    for (auto c : word) {
        const std::string& ram = c == StepChoice::P ? first : second;
        const std::string& split = c == StepChoice::P ? second : first;
        StepCertificate step{index, c, ram, split, {}};
        step.obligations = index == 1 ? step1_obligations(p, q, c) : symbolic_obligations(ram, split);
        const std::string next = split;
        first = next + ".1";
        second = next + ".2";
        plan.steps.push_back(std::move(step));
        ++index;
    }
    if (realize && !word.empty()) plan.realized_step1 = realize_step1(p, q, word.front());
    return plan;
}

RealizedStep realize_step1(OddPrime p, OddPrime q, StepChoice choice) {
    check_admissible(p, q);
    RealizedStep r;
    r.Kprime = choice == StepChoice::P ? find_K_prime(p, q) : find_K_prime(q, p);
    r.Lprime = make_field(std::vector<i64>{-checked_mul(p, q), r.Kprime.value()});
    r.verdict = is_2birational_multiquadratic(r.Lprime);
    if (!r.verdict.positive) {
        throw TheoremViolation("L' = <" + r.Lprime.to_string() + "> is not 2-birational (" + r.verdict.reason + ")");
    }
    return r;
}

}  // namespace tworat
