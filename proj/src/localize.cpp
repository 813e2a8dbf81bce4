#include "goldbach/localize.hpp"

#include "goldbach/error.hpp"

#include <algorithm>
#include <sstream>

namespace goldbach {

MultiplicativeSet MultiplicativeSet::from_generators(std::vector<std::uint64_t> generators) {
    if (generators.empty())
        raise(ErrorKind::InvalidArgument, "a non-trivial multiplicative system needs a generator");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (auto g : generators)
        if (!is_prime_u64(g))
            raise(ErrorKind::InvalidArgument, "generator " + std::to_string(g) + " is not prime");
    return MultiplicativeSet(std::move(generators));
}

std::uint64_t MultiplicativeSet::smallest_prime_outside() const {
    std::uint64_t candidate = 2;
    while (true) {
        if (std::find(generators_.begin(), generators_.end(), candidate) == generators_.end())
            return candidate;
        candidate = next_prime_after(candidate);
    }
}

bool MultiplicativeSet::contains(const Integer& s) const {
    if (s < 1) return false;
    Integer rest = s;
    for (auto g : generators_) {
        Integer gi(g);
        while (rest % gi == 0) rest /= gi;
    }
    return rest == 1;
}

std::string MultiplicativeSet::to_string() const {
    std::ostringstream out;
    out << "<";
    for (std::size_t j = 0; j < generators_.size(); ++j) {
        if (j) out << ",";
        out << generators_[j];
    }
    out << ">";
    return out.str();
}

namespace {

/// The proof-following construction for intervals with positive right end.
DenseApprox dense_approx_positive(const MultiplicativeSet& S, const Rational& x0, const Rational& y0) {
    const Integer n0(S.least_generator());
    const Integer p(S.smallest_prime_outside());
    const Rational width = y0 - x0;

    unsigned e = 0;
    Rational power(1);
    while (Rational(p) / power >= width) {
        power *= n0;
        ++e;
    }

    Rational step = Rational(p) / power;
    Integer n = ceil_to_integer(y0 / step);  // >= 1 because y0 > 0 here
    DenseApprox result;
    result.p = p;
    result.e = e;
    result.n = n;
    result.summand = step;
    result.value = Rational(n - 1) * step;
    return result;
}

}  // namespace

DenseApprox dense_approx(const MultiplicativeSet& S, const Rational& x0, const Rational& y0) {
    if (x0 >= y0) raise(ErrorKind::EmptyInterval, "need x0 < y0");
    if (y0 > 0) return dense_approx_positive(S, x0, y0);
    // mirror (x0,y0) to (-y0,-x0) and negate, carrying the sign on p
    DenseApprox mirrored = dense_approx_positive(S, -y0, -x0);
    mirrored.p = -mirrored.p;
    mirrored.value = -mirrored.value;
    mirrored.summand = -mirrored.summand;
    return mirrored;
}

namespace {

Rational signed_power(const Integer& base, long long exponent) {
    Integer mag = 1;
    for (long long j = 0; j < (exponent < 0 ? -exponent : exponent); ++j) mag *= base;
    return exponent < 0 ? Rational(1) / Rational(mag) : Rational(mag);
}

}  // namespace

PrimeSeries greedy_prime_series(const Rational& x, std::uint64_t q, const Rational& tolerance,
                                std::size_t max_terms) {
    if (!is_prime_u64(q)) raise(ErrorKind::InvalidArgument, "q must be prime");
    if (tolerance <= 0) raise(ErrorKind::InvalidArgument, "tolerance must be positive");

    PrimeSeries series;
    series.q = q;
    series.remainder = x;

    Rational running(0);
    bool have_exponent = false;
    long long last_exponent = 0;
    const Integer qi(q);
    // smallest magnitude that still contains a prime different from q
    const Integer prime_floor = q == 2 ? 3 : 2;

    while (series.terms.size() < max_terms) {
        if (rational_abs(series.remainder) < tolerance) {
            series.tolerance_reached = true;
            break;
        }
        const Rational mag = rational_abs(series.remainder);
        long long n;
        Rational scale;
        if (have_exponent) {
            n = last_exponent + 1;
            scale = mag * signed_power(qi, n);
            while (scale < prime_floor) {
                ++n;
                scale *= qi;
            }
        } else {
            // first term: the exponent may be any integer, take the minimal one
            n = 0;
            scale = mag;
            while (scale < prime_floor) {
                ++n;
                scale *= qi;
            }
            while (scale / qi >= prime_floor) {
                --n;
                scale /= qi;
            }
        }

        Integer prime = largest_prime_leq(floor_to_integer(scale), qi);
        const bool negative = series.remainder < 0;
        Rational term_value = Rational(prime) / signed_power(qi, n);
        if (negative) term_value = -term_value;

        series.remainder -= term_value;
        running += term_value;
        series.terms.push_back(PrimeSeriesTerm{negative ? Integer(-prime) : prime, n, running});
        last_exponent = n;
        have_exponent = true;
    }
    if (!series.tolerance_reached && rational_abs(series.remainder) < tolerance)
        series.tolerance_reached = true;
    return series;
}

Rational scaled_terms_value(const std::vector<ScaledPrimeTerm>& terms) {
    Rational total(0);
    for (const auto& t : terms) total += Rational(t.s_num * t.p) / Rational(t.s_den);
    return total;
}

std::vector<ScaledPrimeTerm> rescale_representation(std::vector<ScaledPrimeTerm> terms,
                                                    const MultiplicativeSet& S, const Integer& s,
                                                    unsigned m, RescaleDirection direction) {
    if (!S.contains(s)) raise(ErrorKind::NotInSystem, "scale factor " + s.str() + " is not in S");
    for (const auto& t : terms) {
        if (!S.contains(t.s_num) || !S.contains(t.s_den))
            raise(ErrorKind::NotInSystem, "term scale factors must be members of S");
        Integer abs_p = t.p < 0 ? Integer(-t.p) : t.p;
        if (!is_prime(abs_p) || S.contains(abs_p))
            raise(ErrorKind::InvalidArgument, "term primes must be primes outside S");
    }
    Integer factor = 1;
    for (unsigned j = 0; j < m; ++j) factor *= s;
    for (auto& t : terms) {
        if (direction == RescaleDirection::Multiply)
            t.s_num *= factor;
        else
            t.s_den *= factor;
    }
    return terms;
}

}  // namespace goldbach
