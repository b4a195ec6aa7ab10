#include "tworat/towerdec.hpp"

#include <numeric>

namespace tworat {

std::string PrimitivityClass::name() const {
    switch (kind_) {
        case Kind::Primitive: return "Primitive";
        case Kind::SemiPrimitive: return "SemiPrimitive";
        case Kind::Imprimitive: return "Imprimitive(" + std::to_string(split_depth_) + ")";
    }
    return "?";
}

std::string to_string(Splitting s) {
    switch (s) {
        case Splitting::Split: return "split";
        case Splitting::Inert: return "inert";
        case Splitting::Ramified: return "ramified";
    }
    return "?";
}

namespace {

// Order of q in (Z/2^(n+2))^* / {+-1}.
i64 order_mod_pm1(i64 q, int n) {
    const i64 modulus = i64{1} << (n + 2);
    i64 x = mod(q, modulus);
    i64 f = 1;
    while (x != 1 && x != modulus - 1) {
        x = mul_mod(x, x, modulus);
        f *= 2;
    }
    return f;
}

void check_depth(int depth) {
    if (depth < 1 || depth > kMaxTowerDepth) {
        throw InvalidArgument("tower depth must lie in [1, " + std::to_string(kMaxTowerDepth) + "], got " +
                              std::to_string(depth));
    }
}

}  // namespace

TowerProfile decomposition_profile(OddPrime q, int depth) {
    check_depth(depth);
    TowerProfile profile{q.value(), {}};
    for (int n = 1; n <= depth; ++n) {
        const i64 f = order_mod_pm1(q.value(), n);
        profile.levels.push_back({n, f, (i64{1} << n) / f});
    }
    return profile;
}

PrimitivityClass classify_profile(const TowerProfile& profile) {
    if (profile.levels.empty()) throw InvalidArgument("empty tower profile");
    int split_depth = 0;
    bool rigid = false;
    i64 prev_g = 1;
    for (const auto& lvl : profile.levels) {
        const i64 degree = i64{1} << lvl.n;
        if (lvl.f * lvl.g != degree || lvl.g < prev_g || lvl.g > 2 * prev_g) {
            throw TheoremViolation("inconsistent tower profile for " + std::to_string(profile.prime));
        }
        if (rigid && lvl.g != prev_g) {
            throw TheoremViolation("tower profile of " + std::to_string(profile.prime) +
                                   " splits again after inertia set in");
        }
        if (lvl.g == degree) {
            split_depth = lvl.n;
        } else {
            rigid = true;
        }
        prev_g = lvl.g;
    }
    if (split_depth == 0) return PrimitivityClass::primitive();
    if (split_depth == 1 && profile.levels.back().g == 2) return PrimitivityClass::semi_primitive();
    return PrimitivityClass::imprimitive(split_depth);
}

PrimitivityClass primitivity_over_Q(OddPrime q) {
    const i64 r8 = q.value() % 8;
    if (r8 == 3 || r8 == 5) return PrimitivityClass::primitive();
    const i64 r16 = q.value() % 16;
    if (r16 == 7 || r16 == 9) return PrimitivityClass::semi_primitive();
    // q = +-1 mod 16: completely split up to the level n with q = +-1 mod 2^(n+2).
    const int depth = std::max(v2(q.value() - 1), v2(q.value() + 1)) - 2;
    return PrimitivityClass::imprimitive(depth);
}

PrimePlace PrimePlace::over_Q(OddPrime q) {
    return {std::to_string(q.value()), q.value(), primitivity_over_Q(q)};
}

QuadraticPlaceInfo place_primitivity_in_quadratic(i64 m, OddPrime q, int depth) {
    if (m == 0 || m == 1) throw InvalidArgument("Q(sqrt " + std::to_string(m) + ") is not a quadratic field");
    check_depth(depth);
    const SquarefreeInt label(m);
    const int chi = kronecker(label.discriminant(), q.value());
    QuadraticPlaceInfo info{chi == 0 ? Splitting::Ramified : (chi == 1 ? Splitting::Split : Splitting::Inert),
                            std::nullopt,
                            {}};
    if (info.splitting == Splitting::Ramified) return info;

    const i64 places_in_K = info.splitting == Splitting::Split ? 2 : 1;
    TowerProfile per_place{q.value(), {}};
    if (m == 2) {
        // Q(sqrt 2) is the first layer of Q^c, so level n over K is level n+1 over Q.
        const auto over_q = decomposition_profile(q, depth + 1);
        for (int n = 1; n <= depth; ++n) {
            const i64 g = over_q.levels[n].g / places_in_K;
            per_place.levels.push_back({n, (i64{1} << n) / g, g});
        }
    } else {
        // K_n = K Q_n has group {+-1} x (Z/2^(n+2))^*/{+-1}; Frobenius is (chi(q), q).
        const i64 chi_order = chi == 1 ? 1 : 2;
        for (int n = 1; n <= depth; ++n) {
            const i64 frob_order = std::lcm(chi_order, order_mod_pm1(q.value(), n));
            const i64 places = (i64{2} << n) / frob_order;
            const i64 g = places / places_in_K;
            per_place.levels.push_back({n, (i64{1} << n) / g, g});
        }
    }
    info.place_class = classify_profile(per_place);
    info.levels = std::move(per_place.levels);
    return info;
}

}  // namespace tworat
