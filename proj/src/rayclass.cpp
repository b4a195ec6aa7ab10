#include "tworat/rayclass.hpp"

#include "tworat/towerdec.hpp"

namespace tworat {

i64 UnitGroup::order() const {
    i64 n = 1;
    for (const auto& g : generators) n = checked_mul(n, g.order);
    return n;
}

namespace {

// Smallest generator of (Z/p^a)^*, p odd.
i64 primitive_root(i64 p, i64 pa) {
    const i64 phi = pa / p * (p - 1);
    const auto factors = factorize(phi);
    for (i64 g = 2; g < pa; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (const auto& f : factors) {
            if (pow_mod(g, static_cast<u64>(phi / f.prime), pa) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw TheoremViolation("no primitive root modulo " + std::to_string(pa));
}

// x = r mod m1, x = 1 mod m2, with gcd(m1, m2) = 1.
i64 crt_lift(i64 r, i64 m1, i64 m2) {
    if (m2 == 1) return mod(r, m1);
    const i64 M = m1 * m2;
    // x = 1 + m2 * t with m2 * t = r - 1 mod m1
    const i64 t = mul_mod(mod(r - 1, m1), inv_mod(m2, m1), m1);
    return mod(1 + m2 * t, M);
}

void check_primitive(OddPrime x, const char* which) {
    if (!primitivity_over_Q(x).is_primitive()) {
        throw HypothesisViolation(std::string(which) + " = " + std::to_string(x.value()) +
                                  " is not primitive (need " + which + " = +-3 mod 8)");
    }
}

void check_pair(OddPrime p, OddPrime q) {
    if (p == q) throw InvalidArgument("p and q must be distinct");
    check_primitive(p, "p");
    check_primitive(q, "q");
}

// Coordinates of units modulo 2^k p in the 2-primary part
// Z/2 x Z/2^(k-2) x Z/2^v, v = v2(p - 1).
class TwoPrimaryLog {
public:
    TwoPrimaryLog(i64 p, int k) : p_(p), k_(k), two_k_(i64{1} << k) {
        v_ = v2(p - 1);
        odd_ = (p - 1) >> v_;
        gamma_ = pow_mod(primitive_root(p, p), static_cast<u64>(odd_), p);
    }

    std::vector<i64> orders() const { return {2, i64{1} << (k_ - 2), i64{1} << v_}; }

    std::vector<i64> log(i64 x) const {
        const i64 y = mod(x, two_k_);
        const i64 sign = mod(y, 4) == 3 ? 1 : 0;
        const i64 u = sign ? mod(-y, two_k_) : y;
        i64 e = 0;
        i64 five_e = 1;  // 5^e mod 2^k
        for (int i = 0; i + 2 < k_; ++i) {
            const i64 t = mul_mod(u, inv_mod(five_e, two_k_), two_k_);
            if (mod(t, i64{1} << (i + 3)) != 1) {
                e += i64{1} << i;
                five_e = pow_mod(5, static_cast<u64>(e), two_k_);
            }
        }
        const i64 h = pow_mod(mod(x, p_), static_cast<u64>(odd_), p_);
        i64 f = 0;
        for (int i = 0; i < v_; ++i) {
            const i64 t = mul_mod(h, inv_mod(pow_mod(gamma_, static_cast<u64>(f), p_), p_), p_);
            if (pow_mod(t, u64{1} << (v_ - 1 - i), p_) != 1) f += i64{1} << i;
        }
        return {sign, e, f};
    }

private:
    i64 p_;
    int k_;
    i64 two_k_;
    int v_;
    i64 odd_;
    i64 gamma_;
};

AbelianGroupStructure level_structure(i64 p, i64 q, int k) {
    const TwoPrimaryLog lg(p, k);
    const auto ord = lg.orders();
    std::vector<std::vector<i64>> rel;
    for (std::size_t i = 0; i < ord.size(); ++i) {
        std::vector<i64> row(ord.size(), 0);
        row[i] = ord[i];
        rel.push_back(row);
    }
    rel.push_back(lg.log(-1));
    rel.push_back(lg.log(q));
    return smith_quotient(std::move(rel), ord.size());
}

// Exponent of the class of x in the cyclic 2-Sylow of (Z/q)^*, modulo 2^v.
i64 two_sylow_log(i64 x, i64 q, i64 gamma, int v, i64 odd) {
    const i64 h = pow_mod(mod(x, q), static_cast<u64>(odd), q);
    i64 f = 0;
    for (int i = 0; i < v; ++i) {
        const i64 t = mul_mod(h, inv_mod(pow_mod(gamma, static_cast<u64>(f), q), q), q);
        if (pow_mod(t, u64{1} << (v - 1 - i), q) != 1) f += i64{1} << i;
    }
    return f;
}

}  // namespace

UnitGroup units_mod(i64 M) {
    if (M < 3) throw InvalidArgument("units_mod needs M >= 3, got " + std::to_string(M));
    const int k = v2(M);
    const i64 two_k = i64{1} << k;
    const i64 rest = M >> k;
    i64 p = 0;
    if (rest > 1) {
        const auto f = factorize(rest);
        if (f.size() != 1) {
            throw InvalidArgument("units_mod supports M = 2^k p^a only, got " + std::to_string(M));
        }
        p = f.front().prime;
    }
    UnitGroup G{M, {}};
    if (k >= 2) G.generators.push_back({crt_lift(-1, two_k, rest), 2});
    if (k >= 3) G.generators.push_back({crt_lift(5, two_k, rest), two_k / 4});
    if (p != 0) {
        const i64 g = primitive_root(p, rest);
        G.generators.push_back({crt_lift(g, rest, two_k), rest / p * (p - 1)});
    }
    return G;
}

RayClassReport gal_N(OddPrime p, OddPrime q, int k_max) {
    check_pair(p, q);
    if (k_max < 5 || k_max > 60) throw InvalidArgument("k_max must lie in [5, 60], got " + std::to_string(k_max));
    RayClassReport r{p, q, {}, 3, {}, 1, find_K_prime(p, q)};
    for (int k = 3; k <= k_max; ++k) {
        r.per_level.push_back({k, level_structure(p, q, k)});
        if (r.per_level.size() >= 2 && !(r.per_level.back().structure == r.per_level[r.per_level.size() - 2].structure)) {
            r.stabilization_level = k;
        }
    }
    r.structure = r.per_level.back().structure;
    r.stabilized_order = r.structure.order();
    const i64 expected = i64{1} << v2(p - 1);
    if (!r.structure.is_cyclic() || r.stabilized_order != expected) {
        throw TheoremViolation("quotient for (p, q) = (" + std::to_string(p.value()) + ", " +
                               std::to_string(q.value()) + ") is " + r.structure.to_string() +
                               ", expected cyclic of order " + std::to_string(expected));
    }
    return r;
}

SquarefreeInt find_K_prime(OddPrime p, OddPrime q) {
    check_pair(p, q);
    const SquarefreeInt a(p.value());
    const SquarefreeInt b(2 * p.value());
    const int ka = kronecker(a.discriminant(), q);
    const int kb = kronecker(b.discriminant(), q);
    if (ka * kb != -1) {
        throw TheoremViolation("candidates " + std::to_string(a.value()) + ", " + std::to_string(b.value()) +
                               " have symbols " + std::to_string(ka) + ", " + std::to_string(kb) + " at q = " +
                               std::to_string(q.value()));
    }
    const SquarefreeInt& found = ka == 1 ? a : b;
    if (kronecker(found.discriminant(), 2) == 1) {
        throw TheoremViolation("2 splits in Q(sqrt " + std::to_string(found.value()) + ")");
    }
    return found;
}

namespace {

struct MirrorRanks {
    int by_two;
    int by_all;
};

MirrorRanks mirror_ranks(i64 q, i64 p) {
    const int v = v2(q - 1);
    const i64 odd = (q - 1) >> v;
    const i64 gamma = pow_mod(primitive_root(q, q), static_cast<u64>(odd), q);
    // Z/2^v modulo the given exponents is cyclic of order gcd(2^v, exponents).
    auto rank_mod = [&](std::initializer_list<i64> xs) {
        i64 g = i64{1} << v;
        for (i64 x : xs) g = gcd(g, two_sylow_log(x, q, gamma, v, odd));
        return g > 1 ? 1 : 0;
    };
    return {rank_mod({2}), rank_mod({2, p, -1})};
}

}  // namespace

int mirror_2rank(OddPrime q, OddPrime p) {
    check_pair(q, p);
    const auto r = mirror_ranks(q, p);
    if (r.by_two != r.by_all) {
        throw TheoremViolation("mirror rank at q = " + std::to_string(q.value()) +
                               " changes when quotienting by p and -1");
    }
    return r.by_two;
}

bool verify_mirror(OddPrime q, OddPrime p) { return mirror_2rank(q, p) == 0; }

ReflectionRanks reflection_identity(OddPrime p, OddPrime q) {
    const auto report = gal_N(p, q);
    const ReflectionRanks r{report.structure.rank_at(2), mirror_2rank(q, p)};
    if (r.rank_T_S - r.rank_mirror != 1) {
        throw TheoremViolation("reflection identity fails at (" + std::to_string(p.value()) + ", " +
                               std::to_string(q.value()) + "): ranks " + std::to_string(r.rank_T_S) + ", " +
                               std::to_string(r.rank_mirror));
    }
    return r;
}

}  // namespace tworat
