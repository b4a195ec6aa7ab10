#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tworat/errors.hpp"

namespace tworat {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// Overflow-checked arithmetic on i64. Throws OverflowError.
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 checked_pow(i64 base, unsigned exp);
i64 narrow_i128(i128 v);

i64 gcd(i64 a, i64 b);
// Non-negative residue of a modulo m (m > 0).
i64 mod(i64 a, i64 m);
i64 mul_mod(i64 a, i64 b, i64 m);
i64 pow_mod(i64 base, u64 exp, i64 m);
// Inverse of a modulo m; throws InvalidArgument when gcd(a, m) != 1.
i64 inv_mod(i64 a, i64 m);
// floor(sqrt(n)) for n >= 0.
i64 isqrt(i64 n);

// 2-adic valuation of n != 0.
int v2(i64 n);

// Jacobi symbol (a|n) for odd n >= 1. Throws InvalidArgument for even or nonpositive n.
int jacobi(i64 a, i64 n);

// Kronecker symbol (D|m) for m >= 1. At 2: (D|2) = 0 if D is even, +1 if
// D = +-1 mod 8, -1 if D = +-3 mod 8; (D|1) = 1.
int kronecker(i64 D, i64 m);

// Deterministic Miller-Rabin over all of [1, 2^63 - 1]. Throws InvalidArgument for n < 1.
bool is_prime(i64 n);

// Multiplicative order of a modulo m (gcd(a, m) = 1, m >= 2).
i64 multiplicative_order(i64 a, i64 m);

// An odd prime p >= 3.
class OddPrime {
public:
    explicit OddPrime(i64 value);
    i64 value() const { return value_; }
    operator i64() const { return value_; }
    friend bool operator==(OddPrime, OddPrime) = default;
    friend auto operator<=>(OddPrime, OddPrime) = default;

private:
    i64 value_;
};

// A squarefree integer with its factorization: value == sign * prod(primes).
class SquarefreeInt {
public:
    // Throws InvalidArgument when value is 0 or has a repeated prime factor.
    explicit SquarefreeInt(i64 value);

    i64 value() const { return value_; }
    int sign() const { return value_ < 0 ? -1 : 1; }
    // Distinct prime factors in ascending order (2 included when even).
    const std::vector<i64>& primes() const { return primes_; }
    std::vector<i64> odd_primes() const;
    bool is_even() const { return !primes_.empty() && primes_.front() == 2; }

    // Fundamental discriminant of Q(sqrt(value)); requires value != 1.
    i64 discriminant() const;

    friend bool operator==(const SquarefreeInt& a, const SquarefreeInt& b) { return a.value_ == b.value_; }

private:
    SquarefreeInt(i64 value, std::vector<i64> primes) : value_(value), primes_(std::move(primes)) {}
    friend struct FactorizationAccess;
    i64 value_;
    std::vector<i64> primes_;
};

// Trial-division factorization settings. Trial division runs up to
// trial_limit; a cofactor left over is accepted when it is prime or the
// square of a prime, otherwise EffortBoundExceeded is thrown. Every
// |n| < trial_limit^2 factors completely (|n| < 10^12 with the default).
struct FactorizationBound {
    i64 trial_limit = 1'000'000;
};

struct PrimePower {
    i64 prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Factorization of |n|, n != 0, ascending primes. Throws EffortBoundExceeded.
std::vector<PrimePower> factorize(i64 n, FactorizationBound bound = {});

// n = s * f^2 with s squarefree. Throws InvalidArgument for n == 0.
std::pair<SquarefreeInt, i64> squarefree_decompose(i64 n, FactorizationBound bound = {});

// Product of two squarefree labels reduced modulo squares.
SquarefreeInt squarefree_product(const SquarefreeInt& a, const SquarefreeInt& b);

}  // namespace tworat
