#include "verify.hpp"

#include <algorithm>
#include <functional>

#include "tworat/classify.hpp"
#include "tworat/quadforms.hpp"
#include "tworat/rayclass.hpp"
#include "tworat/tower.hpp"

namespace tworat::cli {

namespace {

constexpr std::size_t kMaxReported = 10;
constexpr i64 kRayClassPrimeCap = 300;
constexpr i64 kTowerPrimeCap = 200;

bool squarefree(i64 n) {
    try {
        SquarefreeInt s(n);
        return true;
    } catch (const InvalidArgument&) {
        return false;
    }
}

bool primitive_prime(i64 n) { return n > 2 && is_prime(n) && (mod(n, 8) == 3 || mod(n, 8) == 5); }

// Runs one check and books the outcome.
void record(SuiteResult& s, const std::function<std::string()>& check) {
    ++s.checked;
    try {
        std::string failure = check();
        if (failure.empty()) return;
        ++s.failed;
        if (s.failures.size() < kMaxReported) s.failures.push_back(std::move(failure));
    } catch (const EffortBoundExceeded&) {
        ++s.skipped;
    } catch (const std::exception& e) {
        ++s.failed;
        if (s.failures.size() < kMaxReported) s.failures.push_back(e.what());
    }
}

SuiteResult quad_birational_oracle(i64 bound) {
    SuiteResult s{"quad-birational-oracle", bound};
    for (i64 d = 1; d <= bound; ++d) {
        if (!squarefree(d) || !is_2birational_quadratic(d).positive) continue;
        record(s, [d] {
            const auto o = verify_2birational_quadratic_oracle(d);
            if (o.two_dyadic && o.class_condition.value_or(false)) return std::string();
            return "oracle rejects d = " + std::to_string(d);
        });
    }
    return s;
}

SuiteResult classifier_consistency(i64 bound) {
    SuiteResult s{"classifier-consistency", bound};
    for (i64 d = 1; d <= bound; ++d) {
        if (!squarefree(d)) continue;
        record(s, [d] {
            const Verdict multi = is_2birational_multiquadratic(make_field(std::vector<i64>{-d}));
            // Q(sqrt -2d') and Q(sqrt -d') agree after adjoining sqrt 2
            const Verdict quad = d == 2 ? Verdict{} : is_2birational_quadratic(d % 2 == 0 ? d / 2 : d);
            if (multi.positive == quad.positive && multi.tag == quad.tag) return std::string();
            return "d = " + std::to_string(d) + ": multiquadratic " + to_string(multi.tag) + ", quadratic " +
                   to_string(quad.tag);
        });
    }
    return s;
}

SuiteResult rational_oracle(i64 bound) {
    const ClassGroupBounds cg;
    SuiteResult s{"2-rational-oracle", bound};
    for (i64 a = 1; a <= bound; ++a) {
        for (i64 m : {a, -a}) {
            if (m == 1 || !squarefree(m)) continue;
            if (m > 0 && 4 * m > cg.max_positive) continue;
            record(s, [m] {
                const bool cls = is_2rational_multiquadratic(make_field(std::vector<i64>{m})).positive;
                const bool oracle = verify_2rational_quadratic(m);
                if (cls == oracle) return std::string();
                return "m = " + std::to_string(m) + ": classifier " + std::to_string(cls) + ", oracle " +
                       std::to_string(oracle);
            });
        }
    }
    return s;
}

bool is_square_mod(i64 a, i64 q) {
    a = mod(a, q);
    for (i64 x = 0; x < q; ++x) {
        if (mul_mod(x, x, q) == a) return true;
    }
    return false;
}

SuiteResult rayclass_law(i64 bound) {
    const i64 cap = std::min(bound, kRayClassPrimeCap);
    SuiteResult s{"rayclass-law", cap};
    for (i64 p = 3; p <= cap; p += 2) {
        if (!primitive_prime(p)) continue;
        for (i64 q = 3; q <= cap; q += 2) {
            if (q == p || !primitive_prime(q)) continue;
            record(s, [p, q] {
                const auto r = gal_N(OddPrime(p), OddPrime(q), 12);
                if (r.stabilization_level > 10) return "no stabilization by k = 10 at " + std::to_string(p) + "," + std::to_string(q);
                const auto ranks = reflection_identity(OddPrime(p), OddPrime(q));
                if (!(ranks == ReflectionRanks{1, 0})) return "reflection ranks differ at " + std::to_string(p);
                const i64 k = r.quadratic_character.value();
                if ((k != p && k != 2 * p) || !is_square_mod(k, q)) {
                    return "K' = " + std::to_string(k) + " wrong for " + std::to_string(p) + "," + std::to_string(q);
                }
                return std::string();
            });
        }
    }
    return s;
}

SuiteResult mirror(i64 bound) {
    SuiteResult s{"mirror", bound};
    for (i64 q = 3; q <= bound; q += 2) {
        if (!primitive_prime(q)) continue;
        record(s, [q] {
            const i64 p = q == 3 ? 5 : 3;
            const bool fast = verify_mirror(OddPrime(q), OddPrime(p));
            const bool brute = v2(multiplicative_order(2, q)) == v2(q - 1);
            if (fast && brute) return std::string();
            return "mirror fails at q = " + std::to_string(q);
        });
    }
    return s;
}

SuiteResult tower_step1(i64 bound) {
    const i64 cap = std::min(bound, kTowerPrimeCap);
    SuiteResult s{"tower-step1", cap};
    for (i64 p = 3; p <= cap; p += 8) {
        if (!is_prime(p)) continue;
        for (i64 q = 5; q <= cap; q += 8) {
            if (!is_prime(q)) continue;
            record(s, [p, q] {
                const auto a = realize_step1(OddPrime(p), OddPrime(q), StepChoice::P);
                const auto b = realize_step1(OddPrime(p), OddPrime(q), StepChoice::Q);
                if (a.verdict.positive && b.verdict.positive && !(a.Kprime == b.Kprime)) return std::string();
                return "tower step 1 fails at " + std::to_string(p) + "," + std::to_string(q);
            });
        }
    }
    return s;
}

}  // namespace

std::vector<SuiteResult> run_verify(i64 bound) {
    if (bound < 1 || bound > kMaxVerifyBound) {
        throw InvalidArgument("verify bound must lie in [1, " + std::to_string(kMaxVerifyBound) + "], got " +
                              std::to_string(bound));
    }
    return {quad_birational_oracle(bound), classifier_consistency(bound), rational_oracle(bound),
            rayclass_law(bound),           mirror(bound),                 tower_step1(bound)};
}

}  // namespace tworat::cli
