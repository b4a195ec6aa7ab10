#include "tworat/quadforms.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace tworat {

namespace {

i128 abs128(i128 v) { return v < 0 ? -v : v; }

// floor division for i128 with positive divisor handled generally.
i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i128 mod128(i128 a, i128 m) {
    i128 r = a % m;
    return r < 0 ? r + m : r;
}

// u*a + v*b = g = gcd(a, b) >= 0
void ext_gcd(i128 a, i128 b, i128& u, i128& v, i128& g) {
    i128 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const i128 q = old_r / r;
        i128 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    u = old_s;
    v = old_t;
    g = old_r;
}

struct Form128 {
    i128 a, b, c;
};

// Positive definite reduction: |b| <= a <= c, b >= 0 when |b| = a or a = c.
QuadForm reduce_definite(Form128 f) {
    auto normalize = [](Form128& g) {
        if (-g.a < g.b && g.b <= g.a) return;
        // b' = b + 2ar in (-a, a]
        const i128 r = floor_div(g.a - g.b, 2 * g.a);
        const i128 nb = g.b + 2 * g.a * r;
        g.c = g.a * r * r + g.b * r + g.c;
        g.b = nb;
    };
    normalize(f);
    while (f.a > f.c) {
        std::swap(f.a, f.c);
        f.b = -f.b;
        normalize(f);
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return {narrow_i128(f.a), narrow_i128(f.b), narrow_i128(f.c)};
}

// Cohen, composition of primitive forms with a1, a2 > 0.
Form128 compose_forms(const QuadForm& f1, const QuadForm& f2, i64 D) {
    i128 a1 = f1.a, b1 = f1.b;
    i128 a2 = f2.a, b2 = f2.b, c2 = f2.c;
    if (a1 > a2) {
        std::swap(a1, a2);
        std::swap(b1, b2);
        c2 = f1.c;
    }
    const i128 s = (b1 + b2) / 2;
    const i128 n = b2 - s;
    i128 y1, d;
    if (a2 % a1 == 0) {
        y1 = 0;
        d = a1;
    } else {
        i128 u, v;
        ext_gcd(a2, a1, u, v, d);
        y1 = u;
    }
    i128 x2, y2, d1;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        ext_gcd(s, d, x2, y2, d1);
        y2 = -y2;
    }
    const i128 v1 = a1 / d1;
    const i128 v2 = a2 / d1;
    const i128 r = mod128(y1 * y2 * n - x2 * c2, v1);
    const i128 b3 = b2 + 2 * v2 * r;
    const i128 a3 = v1 * v2;
    const i128 num = b3 * b3 - D;
    if (num % (4 * a3) != 0) throw TheoremViolation("form composition produced a non-integral form");
    return {a3, b3, num / (4 * a3)};
}

}  // namespace

i64 QuadForm::discriminant() const { return narrow_i128(static_cast<i128>(b) * b - static_cast<i128>(4) * a * c); }

std::string QuadForm::to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

bool is_fundamental_discriminant(i64 D) {
    if (D == 0 || D == 1) return false;
    auto squarefree = [](i64 n) {
        for (const auto& pp : factorize(n)) {
            if (pp.exponent > 1) return false;
        }
        return true;
    };
    const i64 r = mod(D, 4);
    if (r == 1) return squarefree(D);
    if (r != 0) return false;
    const i64 m = D / 4;
    const i64 rm = mod(m, 4);
    return (rm == 2 || rm == 3) && squarefree(m);
}

QuadForm ClassGroup::reduce_to_reduced(i128 a, i128 b, i128 c) const {
    if (D_ < 0) {
        if (a < 0) throw InvalidArgument("negative definite form");
        return reduce_definite({a, b, c});
    }
    const i128 s = sqrt_floor_;
    auto is_reduced = [s](const Form128& f) {
        const i128 aa = abs128(f.a);
        return f.b > 0 && f.b <= s && 2 * aa - f.b <= s && 2 * aa + f.b >= s + 1;
    };
    // rho(a, b, c) = normalize(c, -b, a).
    auto normalize_b = [s](i128 a_abs, i128 b) {
        if (a_abs > s) {
            // -|a| < b' <= |a|
            return b - 2 * a_abs * floor_div(b + a_abs - 1, 2 * a_abs);
        }
        // s + 1 - 2|a| <= b' <= s
        return b + 2 * a_abs * floor_div(s - b, 2 * a_abs);
    };
    auto rho = [&](const Form128& f) {
        const i128 na = f.c;
        const i128 nb = normalize_b(abs128(na), -f.b);
        const i128 nc = (nb * nb - D_) / (4 * na);
        return Form128{na, nb, nc};
    };
    Form128 f{a, b, c};
    {
        const i128 nb = normalize_b(abs128(f.a), f.b);
        f = {f.a, nb, (nb * nb - D_) / (4 * f.a)};
    }
    for (int steps = 0; !is_reduced(f); ++steps) {
        if (steps > 100000) throw TheoremViolation("indefinite reduction did not terminate");
        f = rho(f);
    }
    return {narrow_i128(f.a), narrow_i128(f.b), narrow_i128(f.c)};
}

std::size_t ClassGroup::class_of(const QuadForm& f) const {
    if (f.discriminant() != D_) throw InvalidArgument("form " + f.to_string() + " has the wrong discriminant");
    const QuadForm r = reduce_to_reduced(f.a, f.b, f.c);
    auto it = index_.find({r.a, r.b, r.c});
    if (it == index_.end()) throw TheoremViolation("reduced form " + r.to_string() + " missing from the enumeration");
    return it->second;
}

std::size_t ClassGroup::compose(std::size_t x, std::size_t y) const {
    auto positive = [](QuadForm f) {
        // (a, b, c) is properly equivalent to (c, -b, a); reduced indefinite forms have ac < 0.
        if (f.a < 0) f = {f.c, -f.b, f.a};
        return f;
    };
    const Form128 h = compose_forms(positive(reps_.at(x)), positive(reps_.at(y)), D_);
    const QuadForm r = reduce_to_reduced(h.a, h.b, h.c);
    auto it = index_.find({r.a, r.b, r.c});
    if (it == index_.end()) throw TheoremViolation("composed form " + r.to_string() + " missing from the enumeration");
    return it->second;
}

std::size_t ClassGroup::inverse(std::size_t x) const {
    const QuadForm& f = reps_.at(x);
    return class_of({f.a, -f.b, f.c});
}

std::size_t ClassGroup::power(std::size_t x, i64 e) const {
    if (e < 0) return power(inverse(x), -e);
    std::size_t result = identity();
    std::size_t base = x;
    while (e > 0) {
        if (e & 1) result = compose(result, base);
        e >>= 1;
        if (e > 0) base = compose(base, base);
    }
    return result;
}

i64 ClassGroup::order(std::size_t x) const {
    if (!orders_.empty()) return orders_.at(x);
    i64 n = static_cast<i64>(size());
    i64 ord = n;
    for (const auto& pp : factorize(n)) {
        for (int e = 0; e < pp.exponent && power(x, ord / pp.prime) == identity(); ++e) ord /= pp.prime;
    }
    return ord;
}

std::vector<i64> ClassGroup::dyadic_class_orders() const {
    std::vector<i64> out;
    for (auto x : dyadic_) out.push_back(order(x));
    return out;
}

std::size_t ClassGroup::wide_class_count() const {
    if (D_ < 0) return size();
    std::set<std::size_t> seen;
    std::size_t orbits = 0;
    for (std::size_t x = 0; x < size(); ++x) {
        if (seen.count(x)) continue;
        const QuadForm& f = reps_[x];
        seen.insert(x);
        seen.insert(index_.at({-f.a, f.b, -f.c}));
        ++orbits;
    }
    return orbits;
}

const std::vector<QuadForm>& ClassGroup::cycle(std::size_t x) const {
    if (D_ < 0) throw InvalidArgument("cycles exist only for positive discriminants");
    return cycles_.at(x);
}

void ClassGroup::finish() {
    std::vector<i64> orders;
    orders.reserve(size());
    for (std::size_t x = 0; x < size(); ++x) orders.push_back(order(x));
    orders_ = orders;
    structure_ = structure_from_orders(orders_);
    two_sylow_ = structure_.two_part();

    const i64 r8 = mod(D_, 8);
    if (r8 == 1) {
        dyadic_.push_back(class_of({2, 1, (1 - D_) / 8}));
        dyadic_.push_back(class_of({2, -1, (1 - D_) / 8}));
    } else if (mod(D_, 4) == 0) {
        const i64 m = D_ / 4;
        if (mod(m, 4) == 2) {
            dyadic_.push_back(class_of({2, 0, -m / 2}));
        } else {
            dyadic_.push_back(class_of({2, 2, (1 - m) / 2}));
        }
    }
}

ClassGroup narrow_class_group(i64 D, ClassGroupBounds bounds) {
    if (!is_fundamental_discriminant(D)) {
        std::string hint;
        if (D != 0) {
            auto [s, f] = squarefree_decompose(D);
            if (s.value() != 1) hint = "; the field Q(sqrt " + std::to_string(s.value()) + ") has discriminant " +
                                       std::to_string(s.discriminant());
        }
        throw InvalidArgument(std::to_string(D) + " is not a fundamental discriminant" + hint);
    }
    if ((D < 0 && -D > bounds.max_negative) || (D > 0 && D > bounds.max_positive)) {
        throw EffortBoundExceeded("|D| = " + std::to_string(D < 0 ? -D : D) +
                                  " exceeds the class group enumeration bound");
    }
    ClassGroup G;
    G.D_ = D;
    if (D < 0) {
        const i64 absD = -D;
        for (i64 a = 1; 3 * a * a <= absD; ++a) {
            for (i64 b = -a + 1; b <= a; ++b) {
                if (mod(b - D, 2) != 0) continue;
                const i64 num = b * b - D;
                if (num % (4 * a) != 0) continue;
                const i64 c = num / (4 * a);
                if (c < a || (c == a && b < 0)) continue;
                if (gcd(gcd(a, b), c) != 1) continue;
                G.index_[{a, b, c}] = G.reps_.size();
                G.reps_.push_back({a, b, c});
            }
        }
    } else {
        const i64 s = isqrt(D);
        G.sqrt_floor_ = s;
        std::vector<QuadForm> reduced;
        for (i64 b = 1; b <= s; ++b) {
            if (mod(b - D, 2) != 0) continue;
            const i64 N = (D - b * b) / 4;  // = -ac > 0
            for (i64 aa = std::max<i64>(1, (s + 2 - b) / 2); 2 * aa - b <= s; ++aa) {
                if (2 * aa + b < s + 1 || N % aa != 0) continue;
                for (i64 a : {aa, -aa}) {
                    const i64 c = -N / a;
                    if (gcd(gcd(a, b), c) == 1) reduced.push_back({a, b, c});
                }
            }
        }
        // Orbits of rho; rho permutes the reduced forms.
        std::map<std::tuple<i64, i64, i64>, std::size_t> reduced_index;
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            reduced_index[{reduced[i].a, reduced[i].b, reduced[i].c}] = i;
        }
        std::vector<int> cycle_of(reduced.size(), -1);
        std::vector<std::vector<QuadForm>> cycles;
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            if (cycle_of[i] >= 0) continue;
            std::vector<QuadForm> cyc;
            std::size_t j = i;
            while (cycle_of[j] < 0) {
                cycle_of[j] = static_cast<int>(cycles.size());
                cyc.push_back(reduced[j]);
                const QuadForm& f = reduced[j];
                // one rho step on a reduced form yields a reduced form
                const i64 na = f.c;
                const i64 aa = na < 0 ? -na : na;
                i64 nb = -f.b;
                if (aa > s) {
                    nb = nb - 2 * aa * static_cast<i64>(floor_div(nb + aa - 1, 2 * aa));
                } else {
                    nb = nb + 2 * aa * static_cast<i64>(floor_div(s - nb, 2 * aa));
                }
                const i64 nc = (nb * nb - D) / (4 * na);
                auto it = reduced_index.find({na, nb, nc});
                if (it == reduced_index.end()) throw TheoremViolation("rho left the set of reduced forms");
                j = it->second;
            }
            if (cycle_of[j] != static_cast<int>(cycles.size())) throw TheoremViolation("rho is not a permutation");
            cycles.push_back(std::move(cyc));
        }
        // Representative: the form with least (a < 0, |a|, b); principal cycle first.
        auto key = [](const QuadForm& f) { return std::tuple(f.a < 0, f.a < 0 ? -f.a : f.a, f.b); };
        std::vector<QuadForm> reps;
        for (const auto& cyc : cycles) {
            reps.push_back(*std::min_element(cyc.begin(), cyc.end(),
                                             [&](const QuadForm& x, const QuadForm& y) { return key(x) < key(y); }));
        }
        std::vector<std::size_t> perm(cycles.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return key(reps[x]) < key(reps[y]); });
        for (std::size_t pos = 0; pos < perm.size(); ++pos) {
            const std::size_t ci = perm[pos];
            G.reps_.push_back(reps[ci]);
            for (const auto& f : cycles[ci]) G.index_[{f.a, f.b, f.c}] = pos;
            G.cycles_.push_back(cycles[ci]);
        }
        if (G.reps_.empty() || G.reps_[0].a != 1) throw TheoremViolation("principal cycle not found");
    }
    G.finish();
    return G;
}

std::string FundamentalUnit::to_string() const {
    auto str = [](i128 v) {
        if (v == 0) return std::string("0");
        bool neg = v < 0;
        std::string s;
        while (v != 0) {
            const int digit = static_cast<int>(v % 10);
            s.push_back(static_cast<char>('0' + (digit < 0 ? -digit : digit)));
            v /= 10;
        }
        if (neg) s.push_back('-');
        return std::string(s.rbegin(), s.rend());
    };
    return "(" + str(x) + " + " + str(y) + " sqrt " + std::to_string(m) + ")/2";
}

FundamentalUnit fundamental_unit(i64 m, UnitBounds bounds) {
    if (m < 2) throw InvalidArgument("fundamental unit needs a real quadratic field, got m = " + std::to_string(m));
    SquarefreeInt label(m);
    const bool one_mod_4 = mod(m, 4) == 1;
    const i64 s = isqrt(m);
    // Complete quotients (P + sqrt m)/Q.
    i128 P = one_mod_4 ? 1 : 0;
    i128 Q = one_mod_4 ? 2 : 1;
    // p, q hold the previous convergent, p_prev, q_prev the one before.
    i128 p = 1, q = 0, p_prev = 0, q_prev = 1;
    constexpr i128 limit = static_cast<i128>(1) << 120;
    for (i64 step = 0; step < bounds.max_steps; ++step) {
        const i128 a = (P + s) / Q;
        const i128 np = a * p + p_prev;
        const i128 nq = a * q + q_prev;
        if (abs128(np) > limit || abs128(nq) > limit) {
            throw EffortBoundExceeded("fundamental unit of Q(sqrt " + std::to_string(m) + ") exceeds 120 bits");
        }
        p_prev = p;
        q_prev = q;
        p = np;
        q = nq;
        i128 norm;
        if (one_mod_4) {
            norm = p * p - p * q - q * q * ((m - 1) / 4);
        } else {
            norm = p * p - static_cast<i128>(m) * q * q;
        }
        if (norm == 1 || norm == -1) {
            FundamentalUnit u;
            u.m = m;
            u.norm_sign = static_cast<int>(norm);
            if (one_mod_4) {
                u.x = 2 * p - q;
                u.y = q;
            } else {
                u.x = 2 * p;
                u.y = 2 * q;
            }
            return u;
        }
        P = a * Q - P;
        Q = (m - P * P) / Q;
    }
    throw EffortBoundExceeded("continued fraction of Q(sqrt " + std::to_string(m) + ") exceeds the step bound");
}

RestrictedQuotient restricted_2class_quotient(i64 D, ClassGroupBounds bounds) {
    const ClassGroup G = narrow_class_group(D, bounds);
    RestrictedQuotient out;
    out.unique_dyadic_place = kronecker(D, 2) != 1;

    std::vector<std::size_t> sylow;
    for (std::size_t x = 0; x < G.size(); ++x) {
        const i64 o = G.order(x);
        if ((o & (o - 1)) == 0) sylow.push_back(x);
    }
    // H = <2-parts of the dyadic classes>
    std::vector<std::size_t> gens;
    for (auto x : G.dyadic_classes()) {
        i64 o = G.order(x);
        while (o % 2 == 0) o /= 2;
        gens.push_back(G.power(x, o));
    }
    std::set<std::size_t> H{ClassGroup::identity()};
    std::vector<std::size_t> frontier{ClassGroup::identity()};
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (auto h : frontier) {
            for (auto g : gens) {
                const auto y = G.compose(h, g);
                if (H.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    std::set<std::size_t> covered;
    std::vector<i64> coset_orders;
    for (auto x : sylow) {
        if (covered.count(x)) continue;
        for (auto h : H) covered.insert(G.compose(x, h));
        i64 ord = 1;
        std::size_t y = x;
        while (!H.count(y)) {
            y = G.compose(y, y);
            ord *= 2;
        }
        coset_orders.push_back(ord);
    }
    out.group = structure_from_orders(coset_orders);
    return out;
}

bool verify_2rational_quadratic(i64 m, ClassGroupBounds bounds) {
    if (m == 0 || m == 1) throw InvalidArgument("Q(sqrt " + std::to_string(m) + ") is not a quadratic field");
    const SquarefreeInt label(m);
    const auto r = restricted_2class_quotient(label.discriminant(), bounds);
    return r.unique_dyadic_place && r.group.is_trivial();
}

BirationalOracleResult verify_2birational_quadratic_oracle(i64 d, ClassGroupBounds bounds) {
    if (d < 1) throw InvalidArgument("d must be a positive squarefree integer");
    const SquarefreeInt label(-d);
    BirationalOracleResult out;
    out.two_dyadic = mod(-d, 8) == 1;
    if (out.two_dyadic) {
        const auto r = restricted_2class_quotient(label.discriminant(), bounds);
        out.class_condition = r.group.is_trivial();
    }
    return out;
}

int genus_2rank(i64 D) {
    if (!is_fundamental_discriminant(D)) throw InvalidArgument(std::to_string(D) + " is not a fundamental discriminant");
    return static_cast<int>(factorize(D).size()) - 1;
}

}  // namespace tworat
