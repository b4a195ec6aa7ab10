#include "tworat/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <limits>
#include <string>

namespace tworat {

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    }
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    }
    return r;
}

i64 checked_pow(i64 base, unsigned exp) {
    i64 r = 1;
    while (exp-- > 0) r = checked_mul(r, base);
    return r;
}

i64 narrow_i128(i128 v) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min()) {
        throw OverflowError("128-bit intermediate does not fit in 64 bits");
    }
    return static_cast<i64>(v);
}

i64 gcd(i64 a, i64 b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>((static_cast<i128>(mod(a, m)) * mod(b, m)) % m);
}

i64 pow_mod(i64 base, u64 exp, i64 m) {
    if (m == 1) return 0;
    i64 r = 1;
    base = mod(base, m);
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

i64 inv_mod(i64 a, i64 m) {
    i64 old_r = mod(a, m), r = m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        throw InvalidArgument(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    }
    return mod(old_s, m);
}

i64 isqrt(i64 n) {
    if (n < 0) throw InvalidArgument("isqrt of a negative number");
    auto r = static_cast<i64>(__builtin_sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<i128>(r) * r > n) --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

int v2(i64 n) {
    if (n == 0) throw InvalidArgument("2-adic valuation of 0");
    return __builtin_ctzll(static_cast<u64>(n));
}

int jacobi(i64 a, i64 n) {
    if (n <= 0 || n % 2 == 0) {
        throw InvalidArgument("jacobi symbol needs an odd positive modulus, got " + std::to_string(n));
    }
    a = mod(a, n);
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

int kronecker(i64 D, i64 m) {
    if (m < 1) throw InvalidArgument("kronecker symbol needs m >= 1, got " + std::to_string(m));
    int result = 1;
    while (m % 2 == 0) {
        m /= 2;
        if (D % 2 == 0) return 0;
        i64 r = mod(D, 8);
        if (r == 3 || r == 5) result = -result;
    }
    return result * jacobi(D, m);
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    auto mm = [n](u64 x, u64 y) { return static_cast<u64>((static_cast<unsigned __int128>(x) * y) % n); };
    u64 x = 1, b = a % n, e = d;
    while (e > 0) {
        if (e & 1) x = mm(x, b);
        b = mm(b, b);
        e >>= 1;
    }
    if (x == 1 || x == n - 1) return false;
    for (int r = 1; r < s; ++r) {
        x = mm(x, x);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(i64 n) {
    if (n < 1) throw InvalidArgument("is_prime needs n >= 1, got " + std::to_string(n));
    if (n < 2) return false;
    static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : small) {
        if (static_cast<u64>(n) == p) return true;
        if (static_cast<u64>(n) % p == 0) return false;
    }
    u64 d = static_cast<u64>(n) - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // These twelve bases are a deterministic witness set below 3.3 * 10^24.
    for (u64 a : small) {
        if (miller_rabin_witness(static_cast<u64>(n), a, d, s)) return false;
    }
    return true;
}

i64 multiplicative_order(i64 a, i64 m) {
    if (m < 2 || gcd(a, m) != 1) {
        throw InvalidArgument("multiplicative order needs gcd(a, m) = 1 and m >= 2");
    }
    if (m == 2) return 1;
    // Order divides the exponent of the group, which divides phi(m).
    i64 phi = m;
    for (const auto& pp : factorize(m)) phi = phi / pp.prime * (pp.prime - 1);
    i64 order = phi;
    for (const auto& pp : factorize(phi)) {
        for (int e = 0; e < pp.exponent; ++e) {
            if (pow_mod(a, static_cast<u64>(order / pp.prime), m) == 1) {
                order /= pp.prime;
            } else {
                break;
            }
        }
    }
    return order;
}

OddPrime::OddPrime(i64 value) : value_(value) {
    if (value < 3 || value % 2 == 0 || !is_prime(value)) {
        throw InvalidArgument(std::to_string(value) + " is not an odd prime");
    }
}

std::vector<PrimePower> factorize(i64 n, FactorizationBound bound) {
    if (n == 0) throw InvalidArgument("cannot factor 0");
    if (n == std::numeric_limits<i64>::min()) throw OverflowError("cannot factor -2^63");
    u64 m = static_cast<u64>(n < 0 ? -n : n);
    std::vector<PrimePower> out;
    auto strip = [&](u64 p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) out.push_back({static_cast<i64>(p), e});
    };
    strip(2);
    const u64 limit = static_cast<u64>(std::max<i64>(bound.trial_limit, 3));
    for (u64 p = 3; p <= limit && p * p <= m; p += 2) strip(p);
    if (m > 1) {
        auto c = static_cast<i64>(m);
        if (is_prime(c)) {
            out.push_back({c, 1});
        } else {
            i64 r = isqrt(c);
            if (static_cast<i128>(r) * r == c && is_prime(r)) {
                out.push_back({r, 2});
            } else {
                throw EffortBoundExceeded("factorization of " + std::to_string(n) +
                                          " needs trial division beyond " + std::to_string(limit));
            }
        }
    }
    return out;
}

struct FactorizationAccess {
    static SquarefreeInt make(i64 value, std::vector<i64> primes) {
        return SquarefreeInt(value, std::move(primes));
    }
};

SquarefreeInt::SquarefreeInt(i64 value) : value_(value) {
    if (value == 0) throw InvalidArgument("0 is not squarefree");
    for (const auto& pp : factorize(value)) {
        if (pp.exponent > 1) {
            throw InvalidArgument(std::to_string(value) + " is not squarefree (divisible by " +
                                  std::to_string(pp.prime) + "^2)");
        }
        primes_.push_back(pp.prime);
    }
}

std::vector<i64> SquarefreeInt::odd_primes() const {
    std::vector<i64> out;
    for (i64 p : primes_) {
        if (p != 2) out.push_back(p);
    }
    return out;
}

i64 SquarefreeInt::discriminant() const {
    if (value_ == 1) throw InvalidArgument("Q(sqrt(1)) is not a quadratic field");
    return mod(value_, 4) == 1 ? value_ : checked_mul(4, value_);
}

std::pair<SquarefreeInt, i64> squarefree_decompose(i64 n, FactorizationBound bound) {
    std::vector<i64> primes;
    i64 s = n < 0 ? -1 : 1;
    i64 f = 1;
    for (const auto& pp : factorize(n, bound)) {
        if (pp.exponent % 2 == 1) {
            primes.push_back(pp.prime);
            s *= pp.prime;
        }
        for (int e = 0; e < pp.exponent / 2; ++e) f *= pp.prime;
    }
    return {FactorizationAccess::make(s, std::move(primes)), f};
}

SquarefreeInt squarefree_product(const SquarefreeInt& a, const SquarefreeInt& b) {
    std::vector<i64> primes;
    std::set_symmetric_difference(a.primes().begin(), a.primes().end(), b.primes().begin(),
                                  b.primes().end(), std::back_inserter(primes));
    i64 value = a.sign() * b.sign();
    for (i64 p : primes) value = checked_mul(value, p);
    return FactorizationAccess::make(value, std::move(primes));
}

}  // namespace tworat
