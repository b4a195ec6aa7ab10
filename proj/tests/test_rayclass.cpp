#include <doctest.h>

#include "oracles.hpp"
#include "tworat/rayclass.hpp"

using namespace tworat;

namespace {

std::vector<i64> primitive_primes(i64 bound) {
    std::vector<i64> out;
    for (i64 p = 3; p <= bound; p += 2) {
        if (oracle::is_prime(p) && (p % 8 == 3 || p % 8 == 5)) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_SUITE("rayclass") {

TEST_CASE("units_mod examples") {
    const auto u8 = units_mod(8);
    REQUIRE(u8.generators.size() == 2);
    CHECK(u8.generators[0] == UnitGenerator{7, 2});
    CHECK(u8.generators[1] == UnitGenerator{5, 2});
    const auto u9 = units_mod(9);
    REQUIRE(u9.generators.size() == 1);
    CHECK(u9.generators[0] == UnitGenerator{2, 6});
    const auto u24 = units_mod(24);
    CHECK(u24.order() == 8);
    CHECK(u24.generators.size() == 3);
    CHECK(units_mod(4).generators == std::vector<UnitGenerator>{{3, 2}});
    CHECK_THROWS_AS(units_mod(2), InvalidArgument);
    CHECK_THROWS_AS(units_mod(15), InvalidArgument);
    CHECK_THROWS_AS(units_mod(0), InvalidArgument);
}

TEST_CASE("units_mod generators have the stated orders and generate the group") {
    for (i64 M = 3; M <= 2000; ++M) {
        const i64 odd = M >> v2(M);
        if (odd > 1 && factorize(odd).size() > 1) continue;
        const auto U = units_mod(M);
        i64 phi = 0;
        for (i64 x = 1; x < M; ++x) phi += oracle::gcd(x, M) == 1;
        REQUIRE(U.order() == phi);
        std::vector<i64> gens;
        for (const auto& g : U.generators) {
            REQUIRE(oracle::order(g.residue, M) == g.order);
            gens.push_back(g.residue);
        }
        // gens generate everything: the quotient by them is trivial
        REQUIRE(oracle::quotient_two_sylow(M, gens).order == 1);
    }
}

TEST_CASE("gal_N examples") {
    const auto a = gal_N(OddPrime(3), OddPrime(5), 8);
    CHECK(a.structure.invariant_factors == std::vector<i64>{2});
    CHECK(a.stabilized_order == 2);
    CHECK(a.quadratic_character.value() == 6);
    CHECK(a.per_level.size() == 6);
    const auto b = gal_N(OddPrime(5), OddPrime(3), 8);
    CHECK(b.structure.invariant_factors == std::vector<i64>{4});
    CHECK(b.stabilized_order == 4);
    const auto c = gal_N(OddPrime(11), OddPrime(3), 8);
    CHECK(c.stabilized_order == 2);
    CHECK_THROWS_AS(gal_N(OddPrime(7), OddPrime(3), 8), HypothesisViolation);
    CHECK_THROWS_AS(gal_N(OddPrime(3), OddPrime(17), 8), HypothesisViolation);
    CHECK_THROWS_AS(gal_N(OddPrime(3), OddPrime(3), 8), InvalidArgument);
    CHECK_THROWS_AS(gal_N(OddPrime(3), OddPrime(5), 4), InvalidArgument);
}

TEST_CASE("gal_N agrees with brute-force coset enumeration") {
    const auto primes = primitive_primes(60);
    for (i64 p : primes) {
        for (i64 q : primes) {
            if (p == q) continue;
            const auto r = gal_N(OddPrime(p), OddPrime(q), 9);
            for (const auto& lvl : r.per_level) {
                const i64 M = (i64{1} << lvl.k) * p;
                const auto brute = oracle::quotient_two_sylow(M, {M - 1, q});
                REQUIRE(lvl.structure.order() == brute.order);
                REQUIRE(lvl.structure.is_cyclic() == brute.cyclic());
            }
        }
    }
}

TEST_CASE("stabilization, order law and cyclicity for primitive pairs up to 200") {
    const auto primes = primitive_primes(200);
    for (i64 p : primes) {
        for (i64 q : primes) {
            if (p == q) continue;
            const auto r = gal_N(OddPrime(p), OddPrime(q), 12);
            auto at = [&](int k) { return r.per_level[static_cast<std::size_t>(k - 3)].structure; };
            REQUIRE(at(8) == at(10));
            REQUIRE(at(10) == at(12));
            REQUIRE(r.stabilized_order == i64{1} << v2(p - 1));
            REQUIRE(r.structure.is_cyclic());
            REQUIRE(r.stabilization_level <= 10);
        }
    }
}

TEST_CASE("find_K_prime examples") {
    CHECK(find_K_prime(OddPrime(3), OddPrime(5)).value() == 6);
    CHECK(find_K_prime(OddPrime(5), OddPrime(3)).value() == 10);
    CHECK(find_K_prime(OddPrime(3), OddPrime(11)).value() == 3);
    CHECK(find_K_prime(OddPrime(11), OddPrime(5)).value() == 11);
    CHECK(find_K_prime(OddPrime(5), OddPrime(11)).value() == 5);
    CHECK_THROWS_AS(find_K_prime(OddPrime(7), OddPrime(5)), HypothesisViolation);
}

TEST_CASE("find_K_prime matches character enumeration") {
    const auto primes = primitive_primes(200);
    for (i64 p : primes) {
        for (i64 q : primes) {
            if (p == q) continue;
            const i64 k = find_K_prime(OddPrime(p), OddPrime(q)).value();
            REQUIRE(k == oracle::kprime_by_characters(p, q));
            // uniqueness: the other candidate does not split q
            const i64 other = k == p ? 2 * p : p;
            REQUIRE(oracle::legendre(k, q) == 1);
            REQUIRE(oracle::legendre(other, q) == -1);
        }
    }
}

TEST_CASE("mirror") {
    CHECK(verify_mirror(OddPrime(5), OddPrime(3)));
    CHECK(verify_mirror(OddPrime(3), OddPrime(5)));
    CHECK(verify_mirror(OddPrime(13), OddPrime(3)));
    CHECK(mirror_2rank(OddPrime(13), OddPrime(3)) == 0);
    CHECK_THROWS_AS(verify_mirror(OddPrime(17), OddPrime(3)), HypothesisViolation);
    for (i64 q : primitive_primes(3000)) {
        const i64 p = q == 3 ? 5 : 3;
        const bool brute = oracle::quotient_two_sylow(q, {2}).order == 1;
        REQUIRE(verify_mirror(OddPrime(q), OddPrime(p)) == brute);
        REQUIRE(brute);
    }
}

TEST_CASE("reflection identity") {
    CHECK(reflection_identity(OddPrime(3), OddPrime(5)) == ReflectionRanks{1, 0});
    CHECK(reflection_identity(OddPrime(5), OddPrime(3)) == ReflectionRanks{1, 0});
    CHECK(reflection_identity(OddPrime(11), OddPrime(13)) == ReflectionRanks{1, 0});
}

}  // TEST_SUITE
