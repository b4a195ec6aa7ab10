#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "tworat/arith.hpp"

namespace tworat {

enum class Signature { TotallyReal, Imaginary };

// A multiquadratic field Q(sqrt g_1, ..., sqrt g_k), stored as its subgroup of
// Q^* / Q^*2. Elements are F2-vectors over the coordinates (sign, 2, odd
// primes ascending); the canonical basis is the reduced row echelon form in
// that coordinate order. Because the sign is the leading coordinate, at most
// one basis vector is negative: the basis lists the positive vectors by pivot
// and then the negative one, and the positive vectors alone span the maximal
// real subfield.
class MultiquadField {
public:
    // Q itself.
    MultiquadField() = default;

    const std::vector<SquarefreeInt>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t degree() const { return std::size_t{1} << basis_.size(); }
    Signature signature() const { return imaginary_ ? Signature::Imaginary : Signature::TotallyReal; }
    bool is_imaginary() const { return imaginary_; }
    std::vector<SquarefreeInt> real_subfield_basis() const;
    MultiquadField real_subfield() const;

    // Odd primes dividing some label, ascending (these are the tamely ramified primes).
    std::vector<i64> odd_primes() const;
    bool contains(i64 label) const;
    bool contains(const SquarefreeInt& label) const;

    std::vector<i64> basis_values() const;
    std::string to_string() const;

    friend bool operator==(const MultiquadField& a, const MultiquadField& b) { return a.basis_ == b.basis_; }

private:
    friend MultiquadField make_field(const std::vector<i64>& gens);
    friend MultiquadField make_field(const std::vector<SquarefreeInt>& gens);
    std::vector<SquarefreeInt> basis_;
    bool imaginary_ = false;
};

// Canonical field generated by the square classes of gens. Throws
// InvalidArgument for 0 or for a generator that is a perfect square.
MultiquadField make_field(const std::vector<i64>& gens);
MultiquadField make_field(const std::vector<SquarefreeInt>& gens);
inline MultiquadField make_field(std::initializer_list<i64> gens) { return make_field(std::vector<i64>(gens)); }

// Parses "6,-15". Throws InvalidArgument on malformed text.
MultiquadField parse_field(std::string_view text);

// F(sqrt 2).
MultiquadField adjoin_sqrt2(const MultiquadField& F);

// The 2^dim - 1 quadratic subfield labels, sorted by |label| then sign.
std::vector<SquarefreeInt> quadratic_subfields(const MultiquadField& F);

}  // namespace tworat

template <>
struct std::hash<tworat::MultiquadField> {
    std::size_t operator()(const tworat::MultiquadField& F) const noexcept {
        std::size_t h = 0;
        for (auto v : F.basis_values()) h = h * 1000003u ^ std::hash<tworat::i64>{}(v);
        return h;
    }
};
