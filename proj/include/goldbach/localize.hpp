#ifndef GOLDBACH_LOCALIZE_HPP
#define GOLDBACH_LOCALIZE_HPP

#include "goldbach/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace goldbach {

/// Multiplicative system S of Z given by finitely many prime generators:
/// S is the set of all finite products of the generators (including 1).
class MultiplicativeSet {
public:
    static MultiplicativeSet from_generators(std::vector<std::uint64_t> generators);

    const std::vector<std::uint64_t>& generators() const { return generators_; }

    /// Least generator, i.e. min{s in S : s > 1}.
    std::uint64_t least_generator() const { return generators_.front(); }

    /// Least positive prime not among the generators.
    std::uint64_t smallest_prime_outside() const;

    /// Is s a finite product of the generators? (s >= 1)
    bool contains(const Integer& s) const;

    std::string to_string() const;

private:
    explicit MultiplicativeSet(std::vector<std::uint64_t> generators)
        : generators_(std::move(generators)) {}

    std::vector<std::uint64_t> generators_;
};

/// Element of G strictly inside a requested interval: (n-1) copies of the
/// localized prime p/n0^e. The summand list is the (n-1)-fold repetition of
/// `summand`, kept implicit because n can be huge for thin intervals.
struct DenseApprox {
    Integer p;          // signed prime outside S
    unsigned e = 0;
    Integer n;          // the minimal k with k p / n0^e >= y0 (mirrored for negative intervals)
    Rational value;     // (n-1) p / n0^e
    Rational summand;   // p / n0^e, a prime of the localization
    Integer summand_count() const { return n - 1; }
};

/// Interval hit by the density construction: n0 = least generator,
/// p = smallest prime outside S, e minimal with p/n0^e < y0-x0, n minimal
/// with n p/n0^e >= y0; the value (n-1)p/n0^e lies strictly inside (x0,y0).
/// Intervals with y0 <= 0 are handled by mirroring and negating p.
DenseApprox dense_approx(const MultiplicativeSet& S, const Rational& x0, const Rational& y0);

struct PrimeSeriesTerm {
    Integer p;            // signed prime, never +-q
    long long exponent;   // strictly increasing across the series
    Rational partial_sum;
};

struct PrimeSeries {
    std::uint64_t q = 0;
    std::vector<PrimeSeriesTerm> terms;
    Rational remainder;
    bool tolerance_reached = false;
};

/// Greedy expansion x ~ sum p_i / q^(n_i): each step picks the minimal fresh
/// exponent n with |r| q^n large enough to contain a prime other than q,
/// then the largest such prime, signed to match the remainder. Stops at the
/// tolerance or after max_terms (flagged, not thrown).
PrimeSeries greedy_prime_series(const Rational& x, std::uint64_t q, const Rational& tolerance,
                                std::size_t max_terms);

/// One term s'_i p_i / s_i of a sum-of-primes representation in the
/// localization.
struct ScaledPrimeTerm {
    Integer s_num;  // member of S
    Integer p;      // signed prime outside S
    Integer s_den;  // member of S
};

enum class RescaleDirection { Multiply, Divide };

Rational scaled_terms_value(const std::vector<ScaledPrimeTerm>& terms);

/// Folds s^m into every numerator (Multiply) or every denominator (Divide):
/// the represented value scales by s^m or s^-m while the term count stays r.
std::vector<ScaledPrimeTerm> rescale_representation(std::vector<ScaledPrimeTerm> terms,
                                                    const MultiplicativeSet& S, const Integer& s,
                                                    unsigned m, RescaleDirection direction);

}  // namespace goldbach

#endif
