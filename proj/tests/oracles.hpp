// Brute-force reference implementations. Deliberately naive and independent
// of the library algorithms they check.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline i64 md(i64 a, i64 m) { return ((a % m) + m) % m; }

inline i64 gcd(i64 a, i64 b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> out;
    n = n < 0 ? -n : n;
    for (i64 d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline bool is_squarefree(i64 n) {
    if (n == 0) return false;
    auto f = prime_factors(n);
    return std::set<i64>(f.begin(), f.end()).size() == f.size();
}

// Legendre symbol by listing the squares modulo p.
inline int legendre(i64 a, i64 p) {
    a = md(a, p);
    if (a == 0) return 0;
    for (i64 x = 1; x < p; ++x) {
        if (x * x % p == a) return 1;
    }
    return -1;
}

inline int jacobi(i64 a, i64 n) {
    int r = 1;
    for (i64 p : prime_factors(n)) r *= legendre(a, p);
    return r;
}

// Order of a in (Z/m)^* by repeated multiplication.
inline i64 order(i64 a, i64 m) {
    a = md(a, m);
    i64 x = a;
    for (i64 k = 1;; ++k) {
        if (x == 1 % m) return k;
        x = x * a % m;
    }
}

// 2-Sylow of (Z/M)^* modulo the subgroup generated by gens, by listing cosets.
struct QuotientSylow {
    i64 order;     // size of the 2-Sylow of the quotient
    i64 involutions;  // elements of order exactly 2 in it
    bool cyclic() const { return order == 1 || involutions == 1; }
};

inline QuotientSylow quotient_two_sylow(i64 M, const std::vector<i64>& gens) {
    std::set<i64> H{1 % M};
    std::vector<i64> frontier{1 % M};
    while (!frontier.empty()) {
        std::vector<i64> next;
        for (i64 h : frontier) {
            for (i64 g : gens) {
                i64 x = h * md(g, M) % M;
                if (H.insert(x).second) next.push_back(x);
            }
        }
        frontier = std::move(next);
    }
    // a coset xH has 2-power order iff x^(2^j) lies in H for some j
    std::set<i64> seen;
    QuotientSylow out{0, 0};
    for (i64 x = 1; x < M; ++x) {
        if (gcd(x, M) != 1 || seen.count(x)) continue;
        std::vector<i64> coset;
        for (i64 h : H) coset.push_back(x * h % M);
        for (i64 c : coset) seen.insert(c);
        i64 y = x;
        int j = 0;
        while (!H.count(y) && j < 64) {
            y = y * y % M;
            ++j;
        }
        if (!H.count(y)) continue;  // odd part nontrivial, not in the 2-Sylow
        ++out.order;
        if (j == 1) ++out.involutions;
    }
    return out;
}

// K': the field of the unique even quadratic character of conductor dividing
// 8p that is ramified at p and trivial at q. Characters mod 8 are listed by
// their values on 3, 5, 7; the field is identified by comparing values at
// primes l against Legendre symbols of the candidate labels.
inline i64 kprime_by_characters(i64 p, i64 q) {
    struct Char8 {
        int v3, v5, v7;
    };
    const Char8 chars8[] = {{1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {1, -1, -1}};
    auto chi8 = [](const Char8& c, i64 n) {
        switch (md(n, 8)) {
            case 1: return 1;
            case 3: return c.v3;
            case 5: return c.v5;
            default: return c.v7;
        }
    };
    std::vector<i64> found;
    for (const auto& c : chars8) {
        auto chi = [&](i64 n) { return chi8(c, n) * legendre(n, p); };
        if (chi(-1) != 1 || chi(q) != 1) continue;
        for (i64 label : {p, -p, 2 * p, -2 * p}) {
            bool match = true;
            for (i64 l = 3; l < 400 && match; l += 2) {
                if (!is_prime(l) || l == p) continue;
                match = chi(l) == legendre(label, l);
            }
            if (match) found.push_back(label);
        }
    }
    return found.size() == 1 ? found.front() : 0;
}

// Forms a x^2 + b xy + c y^2 of discriminant D < 0 in reduced position.
inline i64 class_number_negative(i64 D) {
    i64 h = 0;
    for (i64 a = 1; 3 * a * a <= -D; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            const i64 num = b * b - D;
            if (num % (4 * a) != 0) continue;
            const i64 c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (gcd(gcd(a, b), c) != 1) continue;
            ++h;
        }
    }
    return h;
}

}  // namespace oracle
