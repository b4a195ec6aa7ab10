#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "tworat/fields.hpp"

using namespace tworat;

namespace {

std::vector<i64> vals(const std::vector<SquarefreeInt>& xs) {
    std::vector<i64> out;
    for (const auto& x : xs) out.push_back(x.value());
    return out;
}

// All nontrivial square classes generated by gens, by brute multiplication.
std::set<i64> span(const std::vector<i64>& gens) {
    std::set<i64> out{1};
    for (i64 g : gens) {
        std::set<i64> next = out;
        for (i64 x : out) {
            i64 y = x * g;
            // reduce modulo squares
            const int sign = y < 0 ? -1 : 1;
            i64 r = sign;
            auto f = oracle::prime_factors(y);
            for (std::size_t i = 0; i < f.size();) {
                std::size_t j = i;
                while (j < f.size() && f[j] == f[i]) ++j;
                if ((j - i) % 2 == 1) r *= f[i];
                i = j;
            }
            next.insert(r);
        }
        out = std::move(next);
    }
    out.erase(1);
    return out;
}

}  // namespace

TEST_SUITE("fields") {

TEST_CASE("make_field examples") {
    const auto a = make_field({12, 3});
    CHECK(a.basis_values() == std::vector<i64>{3});
    CHECK(a.dim() == 1);
    CHECK(a.signature() == Signature::TotallyReal);

    const auto b = make_field({5, -3});
    CHECK(b.basis_values() == std::vector<i64>{5, -3});
    CHECK(b.is_imaginary());
    CHECK(vals(b.real_subfield_basis()) == std::vector<i64>{5});

    const auto c = make_field({6, -15});
    CHECK(c.basis_values() == std::vector<i64>{6, -15});
    CHECK(c.dim() == 2);
    CHECK(c.degree() == 4);
    CHECK(vals(c.real_subfield_basis()) == std::vector<i64>{6});
    CHECK(c.to_string() == "6,-15");
    CHECK(MultiquadField().to_string() == "Q");
}

TEST_CASE("make_field rejects zero and squares") {
    CHECK_THROWS_AS(make_field({0}), InvalidArgument);
    CHECK_THROWS_AS(make_field({4}), InvalidArgument);
    CHECK_THROWS_AS(make_field({1}), InvalidArgument);
    CHECK_THROWS_AS(make_field({3, 9}), InvalidArgument);
    // dependent generators are absorbed
    CHECK(make_field({2, 3, 6}).dim() == 2);
}

TEST_CASE("parse_field") {
    CHECK(parse_field("6,-15") == make_field({6, -15}));
    CHECK(parse_field(" -7 ") == make_field({-7}));
    CHECK_THROWS_AS(parse_field("abc"), InvalidArgument);
    CHECK_THROWS_AS(parse_field(""), InvalidArgument);
    CHECK_THROWS_AS(parse_field("3,,5"), InvalidArgument);
    CHECK_THROWS_AS(parse_field("99999999999999999999"), InvalidArgument);
}

TEST_CASE("adjoin_sqrt2") {
    CHECK(adjoin_sqrt2(make_field({3})) == make_field({2, 3}));
    CHECK(adjoin_sqrt2(make_field({2, -7})) == make_field({2, -7}));
    CHECK(adjoin_sqrt2(make_field({6, -15})) == make_field({2, 3, -15}));
    CHECK(adjoin_sqrt2(MultiquadField()) == make_field({2}));
}

TEST_CASE("quadratic_subfields") {
    CHECK(vals(quadratic_subfields(make_field({6, -15}))) == std::vector<i64>{6, -10, -15});
    CHECK(vals(quadratic_subfields(make_field({5}))) == std::vector<i64>{5});
    CHECK(vals(quadratic_subfields(make_field({2, 3}))) == std::vector<i64>{2, 3, 6});
    CHECK(vals(quadratic_subfields(make_field({-1, 2}))) == std::vector<i64>{-1, 2, -2});
}

TEST_CASE("canonical form properties on random fields") {
    std::mt19937_64 rng(20261014);
    const std::vector<i64> pool{-1, 2, 3, 5, 7, 11, 13, -3, 6, -15, 10, 21, -2, 35, 33};
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<i64> gens;
        const int n = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) gens.push_back(pool[rng() % pool.size()]);
        const auto F = make_field(gens);
        const auto S = span(gens);

        // same subgroup as the generators, independent basis
        auto subs = vals(quadratic_subfields(F));
        REQUIRE(std::set<i64>(subs.begin(), subs.end()) == S);
        REQUIRE(subs.size() == (std::size_t{1} << F.dim()) - 1);

        // idempotent, order-independent, square-invariant
        REQUIRE(make_field(F.basis_values()) == F);
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        REQUIRE(make_field(shuffled) == F);
        auto scaled = gens;
        scaled[0] *= 4;
        REQUIRE(make_field(scaled) == F);

        // signature and real subfield
        const bool any_negative = std::any_of(S.begin(), S.end(), [](i64 x) { return x < 0; });
        REQUIRE(F.is_imaginary() == any_negative);
        if (F.is_imaginary()) {
            const auto R = F.real_subfield();
            REQUIRE(R.dim() + 1 == F.dim());
            const auto positives = std::count_if(S.begin(), S.end(), [](i64 x) { return x > 0; });
            REQUIRE(static_cast<std::size_t>(positives) == (std::size_t{1} << (F.dim() - 1)) - 1);
            for (i64 v : R.basis_values()) REQUIRE(v > 0);
        }
        for (i64 x : S) REQUIRE(F.contains(x));

        const auto F2 = adjoin_sqrt2(F);
        REQUIRE(adjoin_sqrt2(F2) == F2);
        REQUIRE(F2.dim() <= F.dim() + 1);
        REQUIRE(F2.contains(2));
        REQUIRE(std::hash<MultiquadField>{}(make_field(shuffled)) == std::hash<MultiquadField>{}(F));
    }
}

}  // TEST_SUITE
