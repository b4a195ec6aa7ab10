#include "tworat/group.hpp"

#include <algorithm>
#include <map>

namespace tworat {

i64 AbelianGroupStructure::order() const {
    i64 n = 1;
    for (i64 d : invariant_factors) n = checked_mul(n, d);
    return n;
}

int AbelianGroupStructure::rank_at(i64 ell) const {
    int r = 0;
    for (i64 d : invariant_factors) r += d % ell == 0;
    return r;
}

AbelianGroupStructure AbelianGroupStructure::two_part() const {
    std::vector<i64> parts;
    for (i64 d : invariant_factors) {
        if (d % 2 == 0) parts.push_back(i64{1} << v2(d));
    }
    return structure_from_cyclic(parts);
}

std::string AbelianGroupStructure::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(invariant_factors[i]);
    }
    return out + "]";
}

AbelianGroupStructure structure_from_cyclic(const std::vector<i64>& cyclic_orders) {
    // Primary decomposition, then recombine largest-with-largest.
    std::map<i64, std::vector<i64>> primary;
    for (i64 c : cyclic_orders) {
        if (c < 1) throw InvalidArgument("cyclic factor order must be positive");
        for (const auto& pp : factorize(c)) primary[pp.prime].push_back(checked_pow(pp.prime, pp.exponent));
    }
    std::size_t len = 0;
    for (auto& [p, powers] : primary) {
        std::sort(powers.begin(), powers.end(), std::greater<>());
        len = std::max(len, powers.size());
    }
    std::vector<i64> factors(len, 1);
    for (const auto& [p, powers] : primary) {
        for (std::size_t i = 0; i < powers.size(); ++i) factors[len - 1 - i] = checked_mul(factors[len - 1 - i], powers[i]);
    }
    return {factors};
}

AbelianGroupStructure structure_from_orders(const std::vector<i64>& orders) {
    const auto n = static_cast<i64>(orders.size());
    if (n == 0) throw InvalidArgument("a group has at least one element");
    std::vector<i64> cyclic;
    for (const auto& pp : factorize(n)) {
        const i64 ell = pp.prime;
        // s[k] = log_ell #{x : x^(ell^k) = 1}
        std::vector<int> s{0};
        for (int k = 1;; ++k) {
            i64 count = 0;
            for (i64 o : orders) {
                // x^(ell^k) = 1 iff ord(x) divides ell^k
                i64 t = o;
                int e = 0;
                while (t % ell == 0) {
                    t /= ell;
                    ++e;
                }
                count += t == 1 && e <= k;
            }
            int log = 0;
            while (count % ell == 0 && count > 1) {
                count /= ell;
                ++log;
            }
            if (count != 1 || log == s.back()) throw InvalidArgument("element orders are not those of an abelian group");
            s.push_back(log);
            if (log == pp.exponent) break;
        }
        // factors of order >= ell^k: s[k] - s[k-1]
        for (std::size_t k = 1; k < s.size(); ++k) {
            const int at_least_k = s[k] - s[k - 1];
            const int at_least_next = k + 1 < s.size() ? s[k + 1] - s[k] : 0;
            for (int j = 0; j < at_least_k - at_least_next; ++j) cyclic.push_back(checked_pow(ell, static_cast<unsigned>(k)));
        }
    }
    return structure_from_cyclic(cyclic);
}

AbelianGroupStructure smith_quotient(std::vector<std::vector<i64>> a, std::size_t n) {
    for (auto& row : a) {
        if (row.size() != n) throw InvalidArgument("relation row has the wrong length");
    }
    const std::size_t m = a.size();
    std::vector<i64> diag;
    std::size_t t = 0;
    for (; t < n && t < m; ++t) {
        // Bring a nonzero entry of smallest |value| in the remaining block to (t, t),
        // reduce its row and column, repeat until both are clear.
        for (;;) {
            std::size_t pr = m, pc = n;
            i64 best = 0;
            for (std::size_t i = t; i < m; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    const i64 v = a[i][j] < 0 ? -a[i][j] : a[i][j];
                    if (v != 0 && (best == 0 || v < best)) {
                        best = v;
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (best == 0) break;
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                const i64 q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < n; ++j) a[i][j] = checked_add(a[i][j], -checked_mul(q, a[t][j]));
                clean &= a[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                const i64 q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < m; ++i) a[i][j] = checked_add(a[i][j], -checked_mul(q, a[i][t]));
                clean &= a[t][j] == 0;
            }
            if (!clean) continue;
            // Divisibility: if a[t][t] does not divide the rest, fold a row in.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t jj = t; jj < n; ++jj) a[t][jj] = checked_add(a[t][jj], a[i][jj]);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        if (a[t][t] == 0) break;
        diag.push_back(a[t][t] < 0 ? -a[t][t] : a[t][t]);
    }
    if (diag.size() < n) throw InvalidArgument("relations do not span a full-rank lattice");
    std::vector<i64> factors;
    for (i64 d : diag) {
        if (d > 1) factors.push_back(d);
    }
    std::sort(factors.begin(), factors.end());
    return {factors};
}

}  // namespace tworat
