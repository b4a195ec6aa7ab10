#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tworat/arith.hpp"
#include "tworat/group.hpp"

namespace tworat {

// Binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
    i64 a = 0, b = 0, c = 0;

    i64 discriminant() const;
    bool is_primitive() const { return gcd(gcd(a, b), c) == 1; }
    std::string to_string() const;

    friend bool operator==(const QuadForm&, const QuadForm&) = default;
    friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

bool is_fundamental_discriminant(i64 D);

// Effort bounds on |D| for the exhaustive form enumeration.
struct ClassGroupBounds {
    i64 max_negative = 4'000'000;
    i64 max_positive = 100'000;
};

// Narrow class group of the quadratic field of fundamental discriminant D,
// realized as proper equivalence classes of primitive forms of discriminant D
// (positive definite ones when D < 0). Element 0 is the principal class.
//
// D < 0: classes are the reduced forms.
// D > 0: classes are the cycles of reduced indefinite forms under the
//        reduction operator rho.
class ClassGroup {
public:
    i64 discriminant() const { return D_; }
    std::size_t size() const { return reps_.size(); }
    const std::vector<QuadForm>& elements() const { return reps_; }
    const AbelianGroupStructure& structure() const { return structure_; }
    const AbelianGroupStructure& two_sylow() const { return two_sylow_; }
    // Classes of the prime ideals above 2: two when 2 splits (mutually
    // inverse, possibly equal), one when 2 ramifies, none when 2 is inert.
    const std::vector<std::size_t>& dyadic_classes() const { return dyadic_; }
    std::vector<i64> dyadic_class_orders() const;

    static constexpr std::size_t identity() { return 0; }
    std::size_t compose(std::size_t x, std::size_t y) const;
    std::size_t inverse(std::size_t x) const;
    std::size_t power(std::size_t x, i64 e) const;
    i64 order(std::size_t x) const;
    // Class of an arbitrary primitive form of discriminant D.
    std::size_t class_of(const QuadForm& f) const;

    // D > 0: number of classes in the wide sense (forms f and -f identified).
    std::size_t wide_class_count() const;
    // D > 0: cycle of reduced forms representing class x.
    const std::vector<QuadForm>& cycle(std::size_t x) const;

private:
    friend ClassGroup narrow_class_group(i64 D, ClassGroupBounds bounds);
    using Key = std::tuple<i64, i64, i64>;

    QuadForm reduce_to_reduced(i128 a, i128 b, i128 c) const;
    void finish();

    i64 D_ = 0;
    i64 sqrt_floor_ = 0;
    std::vector<QuadForm> reps_;
    std::vector<std::vector<QuadForm>> cycles_;
    std::map<Key, std::size_t> index_;
    std::vector<std::size_t> dyadic_;
    std::vector<i64> orders_;
    AbelianGroupStructure structure_;
    AbelianGroupStructure two_sylow_;
};

// Throws InvalidArgument (with the fundamental discriminant of the same
// field as a hint) for non-fundamental D, EffortBoundExceeded beyond bounds.
ClassGroup narrow_class_group(i64 D, ClassGroupBounds bounds = {});

// x + y sqrt(m) over 2, with x^2 - m y^2 = 4 * norm_sign.
struct FundamentalUnit {
    i64 m = 0;
    i128 x = 0, y = 0;
    int norm_sign = 0;
    std::string to_string() const;
};

struct UnitBounds {
    i64 max_steps = 1'000'000;
};

// Minimal unit of Q(sqrt m) from the continued fraction of sqrt m (m = 2, 3 mod 4)
// or (1 + sqrt m)/2 (m = 1 mod 4). Throws EffortBoundExceeded when the expansion
// is longer than the bound or the coefficients leave 128 bits.
FundamentalUnit fundamental_unit(i64 m, UnitBounds bounds = {});

struct RestrictedQuotient {
    AbelianGroupStructure group;  // Cl': 2-Sylow of the narrow group mod the 2-parts of the dyadic classes
    bool unique_dyadic_place = false;
};

RestrictedQuotient restricted_2class_quotient(i64 D, ClassGroupBounds bounds = {});

// Q(sqrt m) has a unique dyadic place and trivial Cl'.
bool verify_2rational_quadratic(i64 m, ClassGroupBounds bounds = {});

// The two computable conditions for Q(sqrt -d) being 2-birational: exactly two
// dyadic places, and the 2-Sylow of the class group generated by their classes.
// The third (local units) condition is not checked, so this is a necessary test.
struct BirationalOracleResult {
    bool two_dyadic = false;
    std::optional<bool> class_condition;  // only evaluated when two_dyadic
};

BirationalOracleResult verify_2birational_quadratic_oracle(i64 d, ClassGroupBounds bounds = {});

// t - 1 where t is the number of prime discriminants dividing D.
int genus_2rank(i64 D);

}  // namespace tworat
