#include "goldbach/field.hpp"

#include "goldbach/error.hpp"

#include <boost/multiprecision/integer.hpp>

namespace goldbach {

FieldSpec FieldSpec::rationals() { return FieldSpec(FieldKind::Rationals, 0); }

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) raise(ErrorKind::InvalidModulus, "modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::from_name(const std::string& name) {
    if (name == "QQ") return rationals();
    if (name.size() >= 2 && name[0] == 'F') {
        std::uint64_t p = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9')
                raise(ErrorKind::InvalidArgument, "bad field name '" + name + "'");
            p = p * 10 + static_cast<std::uint64_t>(name[i] - '0');
        }
        return prime_field(p);
    }
    raise(ErrorKind::InvalidArgument, "bad field name '" + name + "' (expected QQ or F<p>)");
}

std::uint64_t FieldSpec::modulus() const {
    if (kind_ != FieldKind::PrimeField) raise(ErrorKind::InvalidArgument, "field has no modulus");
    return p_;
}

std::string FieldSpec::name() const {
    if (kind_ == FieldKind::Rationals) return "QQ";
    return "F" + std::to_string(p_);
}

namespace {

Integer mod_nonneg(const Integer& a, const Integer& p) {
    Integer r = a % p;
    if (r < 0) r += p;
    return r;
}

}  // namespace

Coefficient FieldSpec::canonical(const Rational& raw) const {
    if (kind_ == FieldKind::Rationals) return raw;  // cpp_rational keeps gcd 1, positive denominator
    Integer p(p_);
    Integer num = mod_nonneg(boost::multiprecision::numerator(raw), p);
    Integer den = mod_nonneg(boost::multiprecision::denominator(raw), p);
    if (den == 0) raise(ErrorKind::DivisionByZero, "denominator divisible by the field modulus");
    Integer den_inv = boost::multiprecision::powm(den, p - 2, p);
    return Coefficient(mod_nonneg(num * den_inv, p));
}

Coefficient FieldSpec::add(const Coefficient& a, const Coefficient& b) const {
    if (kind_ == FieldKind::Rationals) return a + b;
    return canonical(a + b);
}

Coefficient FieldSpec::sub(const Coefficient& a, const Coefficient& b) const {
    if (kind_ == FieldKind::Rationals) return a - b;
    return canonical(a - b);
}

Coefficient FieldSpec::mul(const Coefficient& a, const Coefficient& b) const {
    if (kind_ == FieldKind::Rationals) return a * b;
    return canonical(a * b);
}

Coefficient FieldSpec::neg(const Coefficient& a) const {
    if (kind_ == FieldKind::Rationals) return -a;
    return canonical(-a);
}

Coefficient FieldSpec::inv(const Coefficient& a) const {
    if (is_zero(a)) raise(ErrorKind::DivisionByZero, "inverse of zero");
    if (kind_ == FieldKind::Rationals) return Coefficient(1) / a;
    Integer p(p_);
    Integer v = boost::multiprecision::numerator(a);
    return Coefficient(boost::multiprecision::powm(v, p - 2, p));
}

Coefficient FieldSpec::div(const Coefficient& a, const Coefficient& b) const { return mul(a, inv(b)); }

std::string FieldSpec::to_string(const Coefficient& c) const {
    if (kind_ == FieldKind::Rationals) return rational_to_string(c);
    return boost::multiprecision::numerator(c).str();
}

}  // namespace goldbach
