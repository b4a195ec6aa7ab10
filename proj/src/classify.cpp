#include "tworat/classify.hpp"

#include <algorithm>

namespace tworat {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::CMQ2R_i: return "CMQ2R_i";
        case CaseTag::CMQ2R_ii: return "CMQ2R_ii";
        case CaseTag::CMQ2R_iii: return "CMQ2R_iii";
        case CaseTag::CMQ2R_iv: return "CMQ2R_iv";
        case CaseTag::CMQ2R_v: return "CMQ2R_v";
        case CaseTag::CMQ2R_vi: return "CMQ2R_vi";
        case CaseTag::BIR_a_i: return "BIR_a_i";
        case CaseTag::BIR_a_ii: return "BIR_a_ii";
        case CaseTag::BIR_b_i: return "BIR_b_i";
        case CaseTag::BIR_b_ii: return "BIR_b_ii";
        case CaseTag::PROP_b1: return "PROP_b1";
        case CaseTag::PROP_b2: return "PROP_b2";
        case CaseTag::NotApplicable: return "NotApplicable";
    }
    return "?";
}

namespace {

// Accumulates evidence; the first failing check fixes the reason code.
class VerdictBuilder {
public:
    bool check(std::string condition, std::string values, bool ok, const char* reason_if_failed) {
        v_.evidence.push_back({std::move(condition), std::move(values), ok});
        if (!ok && v_.reason.empty()) v_.reason = reason_if_failed;
        return ok;
    }

    Verdict negative(const char* reason = nullptr) && {
        if (reason != nullptr && v_.reason.empty()) v_.reason = reason;
        v_.positive = false;
        v_.tag = CaseTag::NotApplicable;
        return std::move(v_);
    }

    Verdict positive(CaseTag tag) && {
        const bool all_ok = std::all_of(v_.evidence.begin(), v_.evidence.end(), [](const Evidence& e) { return e.ok; });
        if (!all_ok) return std::move(*this).negative();
        v_.positive = true;
        v_.tag = tag;
        v_.reason.clear();
        return std::move(v_);
    }

private:
    Verdict v_;
};

std::string mod_str(i64 x, i64 m) {
    return std::to_string(x) + " mod " + std::to_string(m) + " = " + std::to_string(mod(x, m));
}

bool is_pm3_mod8(i64 p) {
    const i64 r = mod(p, 8);
    return r == 3 || r == 5;
}

std::string join(const std::vector<i64>& xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

Verdict is_2rational_multiquadratic(const MultiquadField& F) {
    VerdictBuilder vb;
    const auto primes = F.odd_primes();
    if (!vb.check("at_most_one_odd_ramified_prime", "{" + join(primes) + "}", primes.size() <= 1,
                  "TooManyRamifiedPrimes")) {
        return std::move(vb).negative();
    }
    if (primes.size() == 1) {
        const i64 p = primes.front();
        if (!vb.check("ramified_prime_primitive", "p = " + mod_str(p, 8), is_pm3_mod8(p), "ImprimitivePrime")) {
            return std::move(vb).negative();
        }
        vb.check("contained_in_<-1,2,p>", "p = " + std::to_string(p), true, "");
    } else {
        vb.check("contained_in_<-1,2>", "no odd ramified prime", true, "");
    }
    static constexpr CaseTag real_tags[] = {CaseTag::CMQ2R_i, CaseTag::CMQ2R_ii, CaseTag::CMQ2R_iii};
    static constexpr CaseTag imaginary_tags[] = {CaseTag::CMQ2R_iv, CaseTag::CMQ2R_v, CaseTag::CMQ2R_vi};
    // dim <= 3 because the group sits inside <-1, 2, p>
    const std::size_t dim = F.dim();
    return std::move(vb).positive(F.is_imaginary() ? imaginary_tags[dim - 1] : real_tags[dim]);
}

Verdict is_2birational_quadratic(i64 d) {
    if (d < 1) throw InvalidArgument("d must be a positive squarefree integer, got " + std::to_string(d));
    const SquarefreeInt label(d);
    VerdictBuilder vb;
    const auto& primes = label.primes();
    const bool shape_ok = primes.size() == 1 || primes.size() == 2;
    if (!vb.check("d_prime_or_two_primes", "d = " + join(primes, "*"), shape_ok, "ShapeMismatch")) {
        return std::move(vb).negative();
    }
    CaseTag tag = CaseTag::BIR_a_i;
    if (primes.size() == 1) {
        if (!vb.check("q = 7 mod 16", "q = " + mod_str(d, 16), mod(d, 16) == 7, "CongruenceFailure")) {
            return std::move(vb).negative();
        }
    } else {
        std::vector<i64> residues{mod(primes[0], 8), mod(primes[1], 8)};
        std::sort(residues.begin(), residues.end());
        tag = CaseTag::BIR_a_ii;
        if (!vb.check("p = -q = 3 mod 8", "residues mod 8 = {" + join({mod(primes[0], 8), mod(primes[1], 8)}) + "}",
                      residues == std::vector<i64>{3, 5}, "CongruenceFailure")) {
            return std::move(vb).negative();
        }
    }
    vb.check("2_splits", "-d = " + mod_str(-d, 8), mod(-d, 8) == 1, "DyadicNotSplit");
    return std::move(vb).positive(tag);
}

Verdict is_2birational_multiquadratic(const MultiquadField& F) {
    if (!F.is_imaginary()) throw InvalidArgument("2-birationality needs an imaginary field, got <" + F.to_string() + ">");
    VerdictBuilder vb;
    const MultiquadField K = F.real_subfield();
    const Verdict kv = is_2rational_multiquadratic(K);
    if (!vb.check("real_subfield_2_rational", "K = <" + K.to_string() + "> " + to_string(kv.tag), kv.positive,
                  "RealSubfieldNot2Rational")) {
        return std::move(vb).negative();
    }
    const MultiquadField Fn = adjoin_sqrt2(F);
    vb.check("adjoin_sqrt2", "F(sqrt 2) = <" + Fn.to_string() + ">", true, "");

    const auto real_primes = Fn.real_subfield().odd_primes();
    const i64 p = real_primes.empty() ? 0 : real_primes.front();
    // Odd representative -d of the imaginary labels, prime to p: multiply by 2 and by p.
    const SquarefreeInt n = Fn.basis().back();
    i64 d = n.value() < 0 ? -n.value() : n.value();
    if (d % 2 == 0) d /= 2;
    if (p != 0 && d % p == 0) d /= p;
    if (!vb.check("imaginary_label_not_-1", "-d = " + std::to_string(-d), d != 1, "ContainsSqrtMinus1")) {
        return std::move(vb).negative();
    }
    const SquarefreeInt dl(d);
    const auto& dp = dl.primes();

    if (p == 0) {
        // K(sqrt 2) = Q(sqrt 2)
        if (dp.size() == 1) {
            vb.check("q = 7 mod 16", "q = " + mod_str(d, 16), mod(d, 16) == 7, "CongruenceFailure");
            return std::move(vb).positive(CaseTag::BIR_a_i);
        }
        if (dp.size() == 2) {
            std::vector<i64> residues{mod(dp[0], 8), mod(dp[1], 8)};
            std::sort(residues.begin(), residues.end());
            vb.check("q = -q' = +-3 mod 8", "residues mod 8 = {" + join({mod(dp[0], 8), mod(dp[1], 8)}) + "}",
                     residues == std::vector<i64>{3, 5}, "CongruenceFailure");
            return std::move(vb).positive(CaseTag::BIR_a_ii);
        }
        vb.check("d_prime_or_two_primes", "d = " + join(dp, "*"), false, "ShapeMismatch");
        return std::move(vb).negative();
    }

    // K(sqrt 2) = Q(sqrt 2, sqrt p)
    if (!vb.check("d_prime", "d = " + join(dp, "*"), dp.size() == 1, "ShapeMismatch")) {
        return std::move(vb).negative();
    }
    const i64 q = d;
    if (!vb.check("-q = p = +-3 mod 8", "p mod 8 = " + std::to_string(mod(p, 8)) + ", -q mod 8 = " +
                      std::to_string(mod(-q, 8)),
                  is_pm3_mod8(p) && mod(-q, 8) == mod(p, 8), "CongruenceFailure")) {
        return std::move(vb).negative();
    }
    const int symbol = jacobi(p, q);
    vb.check("legendre(p|q)", "(" + std::to_string(p) + "|" + std::to_string(q) + ") = " + std::to_string(symbol),
             symbol != 0, "CongruenceFailure");
    return std::move(vb).positive(symbol == -1 ? CaseTag::BIR_b_i : CaseTag::BIR_b_ii);
}

Verdict check_propagation(const std::vector<PrimePlace>& ramified, int kprime_degree,
                          const PrimePlace& kprime_ramified, Splitting other_behavior) {
    if (ramified.empty()) throw InvalidArgument("L/K must be tamely ramified somewhere");
    if (kprime_degree < 2 || (kprime_degree & (kprime_degree - 1)) != 0) {
        throw InvalidArgument("K'/K must be a nontrivial 2-extension, got degree " + std::to_string(kprime_degree));
    }
    if (other_behavior == Splitting::Ramified) {
        throw InvalidArgument("the other place must be split or inert in K'/K");
    }
    VerdictBuilder vb;
    if (!vb.check("degree_two", "[K':K] = " + std::to_string(kprime_degree), kprime_degree == 2, "QuadraticOnly")) {
        return std::move(vb).negative();
    }
    vb.check("kprime_place_primitive", kprime_ramified.name + " " + kprime_ramified.cls.name(),
             kprime_ramified.cls.is_primitive(), "KprimeNotPrimitive");

    std::string names;
    bool two_primitive = ramified.size() == 2;
    for (const auto& pl : ramified) {
        if (!names.empty()) names += ",";
        names += pl.name + " " + pl.cls.name();
        two_primitive &= pl.cls.is_primitive();
    }
    if (!vb.check("L_ramified_at_two_primitive_places", "{" + names + "}", two_primitive, "NotBiramified")) {
        return std::move(vb).negative();
    }
    const auto hit = std::find_if(ramified.begin(), ramified.end(),
                                  [&](const PrimePlace& pl) { return pl.name == kprime_ramified.name; });
    if (!vb.check("kprime_ramified_at_one_of_them", kprime_ramified.name, hit != ramified.end(),
                  "KprimeRamificationMismatch")) {
        return std::move(vb).negative();
    }
    const PrimePlace& other = hit == ramified.begin() ? ramified[1] : ramified[0];
    vb.check("other_place_behaviour", other.name + " " + to_string(other_behavior), true, "");
    return std::move(vb).positive(other_behavior == Splitting::Inert ? CaseTag::PROP_b1 : CaseTag::PROP_b2);
}

}  // namespace tworat
