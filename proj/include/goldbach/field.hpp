#ifndef GOLDBACH_FIELD_HPP
#define GOLDBACH_FIELD_HPP

#include "goldbach/numeric.hpp"

#include <cstdint>
#include <string>

namespace goldbach {

enum class FieldKind { Rationals, PrimeField };

/// Coefficients are stored as exact rationals in every field. For a prime
/// field F_p the stored value is the canonical residue: an integer in [0, p).
using Coefficient = Rational;

/// Descriptor of the coefficient field: Q or F_p with p prime.
class FieldSpec {
public:
    static FieldSpec rationals();
    static FieldSpec prime_field(std::uint64_t p);

    /// Parses "QQ" or "F<p>", e.g. "F5".
    static FieldSpec from_name(const std::string& name);

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const;
    std::string name() const;

    bool operator==(const FieldSpec& other) const = default;

    Coefficient zero() const { return Coefficient(0); }
    Coefficient one() const { return Coefficient(1); }
    bool is_zero(const Coefficient& c) const { return c == 0; }

    /// Canonical form of an arbitrary rational in this field. Reduces mod p
    /// for prime fields (inverting the denominator).
    Coefficient canonical(const Rational& raw) const;

    Coefficient add(const Coefficient& a, const Coefficient& b) const;
    Coefficient sub(const Coefficient& a, const Coefficient& b) const;
    Coefficient mul(const Coefficient& a, const Coefficient& b) const;
    Coefficient neg(const Coefficient& a) const;
    Coefficient inv(const Coefficient& a) const;
    Coefficient div(const Coefficient& a, const Coefficient& b) const;

    std::string to_string(const Coefficient& c) const;

private:
    FieldSpec(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_;  // 0 for the rationals
};

}  // namespace goldbach

#endif
