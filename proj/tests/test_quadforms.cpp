#include <doctest.h>

#include "oracles.hpp"
#include "tworat/quadforms.hpp"

using namespace tworat;

namespace {

std::vector<i64> fundamental_discriminants(i64 lo, i64 hi) {
    std::vector<i64> out;
    for (i64 D = lo; D <= hi; ++D) {
        if (D != 1 && D != 0 && is_fundamental_discriminant(D)) out.push_back(D);
    }
    return out;
}

// distinct primes of D, by brute factoring
int prime_count(i64 D) {
    auto f = oracle::prime_factors(D);
    return static_cast<int>(std::set<i64>(f.begin(), f.end()).size());
}

}  // namespace

TEST_SUITE("quadforms") {

TEST_CASE("fundamental discriminants") {
    for (i64 D : {-3, -4, -7, -8, -15, -20, -24, 5, 8, 12, 13, 28, 60}) CHECK(is_fundamental_discriminant(D));
    for (i64 D : {-12, -16, 1, 0, 4, 9, 20, 25, 32, 45, 2, 3}) CHECK_FALSE(is_fundamental_discriminant(D));
}

TEST_CASE("class group examples") {
    const auto G23 = narrow_class_group(-23);
    CHECK(G23.structure().invariant_factors == std::vector<i64>{3});
    CHECK(G23.elements().front() == QuadForm{1, 1, 6});
    CHECK(narrow_class_group(-4).structure().is_trivial());
    CHECK(narrow_class_group(28).structure().invariant_factors == std::vector<i64>{2});
    CHECK(narrow_class_group(-84).structure().invariant_factors == std::vector<i64>{2, 2});
    CHECK(narrow_class_group(145).structure().invariant_factors == std::vector<i64>{4});
}

TEST_CASE("non-fundamental discriminants are rejected with a hint") {
    try {
        narrow_class_group(-12);
        FAIL("expected InvalidArgument");
    } catch (const InvalidArgument& e) {
        CHECK(std::string(e.what()).find("-3") != std::string::npos);
    }
    CHECK_THROWS_AS(narrow_class_group(4 * 7 * 4), InvalidArgument);
    CHECK_THROWS_AS(narrow_class_group(-(4'000'000 + 3)), EffortBoundExceeded);
    CHECK_THROWS_AS(narrow_class_group(100'001), EffortBoundExceeded);
}

TEST_CASE("class numbers for D < 0 agree with brute-force reduced forms") {
    for (i64 D : fundamental_discriminants(-5000, -3)) {
        REQUIRE(narrow_class_group(D).size() == static_cast<std::size_t>(oracle::class_number_negative(D)));
    }
}

TEST_CASE("group axioms on the full composition table") {
    for (i64 D : fundamental_discriminants(-1200, 1200)) {
        const auto G = narrow_class_group(D);
        const std::size_t h = G.size();
        i64 order_product = 1;
        for (i64 d : G.structure().invariant_factors) order_product *= d;
        REQUIRE(order_product == static_cast<i64>(h));
        for (std::size_t x = 0; x < h; ++x) {
            REQUIRE(G.compose(x, ClassGroup::identity()) == x);
            REQUIRE(G.compose(x, G.inverse(x)) == ClassGroup::identity());
            REQUIRE(G.power(x, G.order(x)) == ClassGroup::identity());
            for (std::size_t y = 0; y < h; ++y) {
                REQUIRE(G.compose(x, y) == G.compose(y, x));
                for (std::size_t z = 0; z < h; ++z) {
                    REQUIRE(G.compose(G.compose(x, y), z) == G.compose(x, G.compose(y, z)));
                }
            }
        }
        // class_of on representatives and their equivalent transforms
        for (std::size_t x = 0; x < h; ++x) {
            const QuadForm f = G.elements()[x];
            REQUIRE(G.class_of(f) == x);
            // (a, b, c) ~ (a, b + 2a, a + b + c) under x -> x + y
            REQUIRE(G.class_of({f.a, f.b + 2 * f.a, f.a + f.b + f.c}) == x);
            REQUIRE(G.class_of({f.c, -f.b, f.a}) == x);
        }
    }
}

TEST_CASE("composition table closure for |D| <= 10^4") {
    for (i64 D : fundamental_discriminants(-10'000, 10'000)) {
        const auto G = narrow_class_group(D);
        for (std::size_t x = 0; x < G.size(); ++x) {
            for (std::size_t y = 0; y < G.size(); ++y) REQUIRE(G.compose(x, y) < G.size());
        }
    }
}

TEST_CASE("genus 2-rank equals the 2-rank of the form group for |D| <= 10^4") {
    CHECK(genus_2rank(-15) == 1);
    CHECK(genus_2rank(-4) == 0);
    CHECK(genus_2rank(60) == 2);
    CHECK_THROWS_AS(genus_2rank(-12), InvalidArgument);
    for (i64 D : fundamental_discriminants(-10'000, 10'000)) {
        const auto G = narrow_class_group(D);
        REQUIRE(G.structure().rank_at(2) == genus_2rank(D));
        REQUIRE(genus_2rank(D) == prime_count(D) - 1);
    }
}

TEST_CASE("fundamental units") {
    const auto u2 = fundamental_unit(2);
    CHECK(u2.x == 2);
    CHECK(u2.y == 2);
    CHECK(u2.norm_sign == -1);
    const auto u7 = fundamental_unit(7);
    CHECK(u7.x == 16);
    CHECK(u7.y == 6);
    CHECK(u7.norm_sign == 1);
    const auto u5 = fundamental_unit(5);
    CHECK(u5.x == 1);
    CHECK(u5.y == 1);
    CHECK(u5.norm_sign == -1);
    CHECK(fundamental_unit(94).to_string() == "(4286590 + 442128 sqrt 94)/2");
    CHECK_THROWS_AS(fundamental_unit(1), InvalidArgument);
    CHECK_THROWS_AS(fundamental_unit(12), InvalidArgument);
    CHECK_THROWS_AS(fundamental_unit(94, UnitBounds{3}), EffortBoundExceeded);
}

TEST_CASE("fundamental units are minimal solutions of x^2 - m y^2 = +-4") {
    for (i64 m = 2; m <= 400; ++m) {
        if (!oracle::is_squarefree(m)) continue;
        const auto u = fundamental_unit(m);
        REQUIRE(u.x * u.x - static_cast<i128>(m) * u.y * u.y == 4 * u.norm_sign);
        if (u.y > 2000) continue;
        // no smaller y > 0 solves x^2 - m y^2 = +-4 (with x = y mod 2 when m = 1 mod 4)
        for (i64 y = 1; y < static_cast<i64>(u.y); ++y) {
            for (int s : {-4, 4}) {
                const i64 x2 = m * y * y + s;
                if (x2 < 0) continue;
                const i64 x = isqrt(x2);
                const bool integral_basis = oracle::md(m, 4) == 1 || (x % 2 == 0 && y % 2 == 0);
                REQUIRE_FALSE((x * x == x2 && integral_basis));
            }
        }
    }
}

TEST_CASE("narrow vs wide class numbers and the unit norm for m <= 1000") {
    for (i64 m = 2; m <= 1000; ++m) {
        if (!oracle::is_squarefree(m)) continue;
        const i64 D = oracle::md(m, 4) == 1 ? m : 4 * m;
        const auto G = narrow_class_group(D);
        const auto u = fundamental_unit(m);
        const std::size_t wide = G.wide_class_count();
        REQUIRE((G.size() == 2 * wide) == (u.norm_sign == 1));
        REQUIRE((G.size() == wide) == (u.norm_sign == -1));
        // cycles partition the reduced forms
        std::size_t forms = 0;
        for (std::size_t x = 0; x < G.size(); ++x) forms += G.cycle(x).size();
        REQUIRE(forms > 0);
    }
}

TEST_CASE("restricted 2-class quotient") {
    const auto a = restricted_2class_quotient(28);
    CHECK(a.group.invariant_factors == std::vector<i64>{2});
    CHECK(a.unique_dyadic_place);
    CHECK(restricted_2class_quotient(5).group.is_trivial());
    CHECK(restricted_2class_quotient(8).group.is_trivial());
    CHECK_FALSE(restricted_2class_quotient(-15).unique_dyadic_place);
    // 2 inert: no dyadic classes
    CHECK(narrow_class_group(-3).dyadic_classes().empty());
    CHECK(narrow_class_group(-20).dyadic_classes().size() == 1);
    CHECK(narrow_class_group(-15).dyadic_classes().size() == 2);
    CHECK(narrow_class_group(-15).dyadic_class_orders() == std::vector<i64>{2, 2});
}

TEST_CASE("2-rationality oracle") {
    CHECK(verify_2rational_quadratic(5));
    CHECK_FALSE(verify_2rational_quadratic(7));
    CHECK(verify_2rational_quadratic(-1));
    CHECK(verify_2rational_quadratic(2));
    CHECK(verify_2rational_quadratic(-2));
    CHECK_FALSE(verify_2rational_quadratic(15));
    CHECK_THROWS_AS(verify_2rational_quadratic(1), InvalidArgument);
}

TEST_CASE("2-birationality oracle") {
    auto a = verify_2birational_quadratic_oracle(15);
    CHECK(a.two_dyadic);
    CHECK(a.class_condition == true);
    auto b = verify_2birational_quadratic_oracle(7);
    CHECK(b.two_dyadic);
    CHECK(b.class_condition == true);
    auto c = verify_2birational_quadratic_oracle(5);
    CHECK_FALSE(c.two_dyadic);
    CHECK_FALSE(c.class_condition.has_value());
    // 2 splits but the dyadic classes miss the 2-Sylow (h = 10)
    auto d = verify_2birational_quadratic_oracle(119);
    CHECK(d.two_dyadic);
    CHECK(d.class_condition == false);
    CHECK_THROWS_AS(verify_2birational_quadratic_oracle(0), InvalidArgument);
}

}  // TEST_SUITE
