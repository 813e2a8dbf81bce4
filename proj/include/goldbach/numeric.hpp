#ifndef GOLDBACH_NUMERIC_HPP
#define GOLDBACH_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace goldbach {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer lattice vector. Doubles as a monomial exponent vector (entries
/// then non-negative) and as a point/direction in Z^n (entries arbitrary).
using IntVec = std::vector<Integer>;

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
IntVec vec_scale(const IntVec& a, const Integer& k);
bool vec_is_zero(const IntVec& a);
bool vec_is_nonnegative(const IntVec& a);
Integer vec_total(const IntVec& a);

/// true iff a < b coordinate-lexicographically.
bool lex_less(const IntVec& a, const IntVec& b);

/// Graded lexicographic order: total degree first, then lex.
bool grlex_less(const IntVec& a, const IntVec& b);

/// Map comparator putting the graded-lex largest key first.
struct GradedLexDesc {
    bool operator()(const IntVec& a, const IntVec& b) const { return grlex_less(b, a); }
};

Integer gcd_nonneg(Integer a, Integer b);

Rational rational_floor(const Rational& x);
Rational rational_ceil(const Rational& x);
Integer floor_to_integer(const Rational& x);
Integer ceil_to_integer(const Rational& x);
Rational rational_abs(const Rational& x);

bool is_prime_u64(std::uint64_t n);
bool is_prime(const Integer& n);

/// Least prime strictly greater than n (n >= 0).
std::uint64_t next_prime_after(std::uint64_t n);

/// Largest prime <= bound, excluding `exclude`; nullopt-style: returns 0 when
/// no such prime exists.
Integer largest_prime_leq(const Integer& bound, const Integer& exclude);

std::string integer_to_string(const Integer& v);
Integer integer_from_string(const std::string& s);

std::string rational_to_string(const Rational& v);
Rational rational_from_string(const std::string& s);

/// Truncated decimal expansion with the given number of fraction digits.
std::string rational_to_decimal(const Rational& v, unsigned digits);

}  // namespace goldbach

#endif
