#include "tworat/fields.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>

namespace tworat {

namespace {

// Coordinate index: 0 = sign, then primes ascending (2 first when present).
struct Coordinates {
    std::vector<i64> primes;

    std::size_t size() const { return primes.size() + 1; }
    std::size_t index_of(i64 p) const {
        return 1 + static_cast<std::size_t>(std::lower_bound(primes.begin(), primes.end(), p) - primes.begin());
    }
};

using Vec = std::vector<std::uint8_t>;

Vec to_vec(const SquarefreeInt& s, const Coordinates& coords) {
    Vec v(coords.size(), 0);
    v[0] = s.sign() < 0;
    for (i64 p : s.primes()) v[coords.index_of(p)] = 1;
    return v;
}

SquarefreeInt from_vec(const Vec& v, const Coordinates& coords) {
    i64 value = v[0] ? -1 : 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i]) value = checked_mul(value, coords.primes[i - 1]);
    }
    return SquarefreeInt(value);
}

// Reduced row echelon form over F2; returns rows with their pivot columns ascending.
std::vector<Vec> rref(std::vector<Vec> rows) {
    std::vector<Vec> out;
    if (rows.empty()) return out;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i][c]) {
                for (std::size_t j = c; j < cols; ++j) rows[i][j] ^= rows[r][j];
            }
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

}  // namespace

MultiquadField make_field(const std::vector<SquarefreeInt>& gens) {
    Coordinates coords;
    for (const auto& g : gens) {
        if (g.value() == 1) throw InvalidArgument("generator reduces to a square");
        coords.primes.insert(coords.primes.end(), g.primes().begin(), g.primes().end());
    }
    std::sort(coords.primes.begin(), coords.primes.end());
    coords.primes.erase(std::unique(coords.primes.begin(), coords.primes.end()), coords.primes.end());

    std::vector<Vec> rows;
    for (const auto& g : gens) rows.push_back(to_vec(g, coords));
    rows = rref(std::move(rows));

    MultiquadField F;
    std::vector<SquarefreeInt> negative;
    for (const auto& row : rows) {
        auto s = from_vec(row, coords);
        if (s.sign() < 0) {
            negative.push_back(std::move(s));
        } else {
            F.basis_.push_back(std::move(s));
        }
    }
    F.imaginary_ = !negative.empty();
    F.basis_.insert(F.basis_.end(), negative.begin(), negative.end());
    return F;
}

MultiquadField make_field(const std::vector<i64>& gens) {
    std::vector<SquarefreeInt> labels;
    labels.reserve(gens.size());
    for (i64 g : gens) {
        if (g == 0) throw InvalidArgument("0 is not a valid generator");
        auto [s, f] = squarefree_decompose(g);
        if (s.value() == 1) throw InvalidArgument(std::to_string(g) + " is a perfect square");
        labels.push_back(std::move(s));
    }
    return make_field(labels);
}

std::vector<SquarefreeInt> MultiquadField::real_subfield_basis() const {
    std::vector<SquarefreeInt> out;
    for (const auto& s : basis_) {
        if (s.sign() > 0) out.push_back(s);
    }
    return out;
}

MultiquadField MultiquadField::real_subfield() const { return make_field(real_subfield_basis()); }

std::vector<i64> MultiquadField::odd_primes() const {
    std::vector<i64> out;
    for (const auto& s : basis_) {
        for (i64 p : s.odd_primes()) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool MultiquadField::contains(const SquarefreeInt& label) const {
    if (label.value() == 1) return true;
    auto gens = basis_;
    gens.push_back(label);
    return make_field(gens).dim() == dim();
}

bool MultiquadField::contains(i64 label) const { return contains(squarefree_decompose(label).first); }

std::vector<i64> MultiquadField::basis_values() const {
    std::vector<i64> out;
    for (const auto& s : basis_) out.push_back(s.value());
    return out;
}

std::string MultiquadField::to_string() const {
    if (basis_.empty()) return "Q";
    std::string out;
    for (const auto& s : basis_) {
        if (!out.empty()) out += ',';
        out += std::to_string(s.value());
    }
    return out;
}

MultiquadField parse_field(std::string_view text) {
    std::vector<i64> gens;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto tok = text.substr(start, end - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
        i64 v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw InvalidArgument("cannot parse field generator '" + std::string(tok) + "' in '" +
                                  std::string(text) + "'");
        }
        gens.push_back(v);
        start = end + 1;
    }
    return make_field(gens);
}

MultiquadField adjoin_sqrt2(const MultiquadField& F) {
    auto gens = F.basis();
    gens.emplace_back(2);
    return make_field(gens);
}

std::vector<SquarefreeInt> quadratic_subfields(const MultiquadField& F) {
    const auto& basis = F.basis();
    std::vector<SquarefreeInt> out;
    const std::size_t n = basis.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        SquarefreeInt acc(1);
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) acc = squarefree_product(acc, basis[i]);
        }
        out.push_back(std::move(acc));
    }
    std::sort(out.begin(), out.end(), [](const SquarefreeInt& a, const SquarefreeInt& b) {
        const i64 aa = a.value() < 0 ? -a.value() : a.value();
        const i64 bb = b.value() < 0 ? -b.value() : b.value();
        return aa != bb ? aa < bb : a.value() > b.value();
    });
    return out;
}

}  // namespace tworat
