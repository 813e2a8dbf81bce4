#include "goldbach/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>

namespace goldbach {

IntVec vec_add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec vec_neg(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

IntVec vec_scale(const IntVec& a, const Integer& k) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
    return r;
}

bool vec_is_zero(const IntVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

bool vec_is_nonnegative(const IntVec& a) {
    for (const auto& x : a)
        if (x < 0) return false;
    return true;
}

Integer vec_total(const IntVec& a) {
    Integer s = 0;
    for (const auto& x : a) s += x;
    return s;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

bool grlex_less(const IntVec& a, const IntVec& b) {
    Integer da = vec_total(a), db = vec_total(b);
    if (da != db) return da < db;
    return lex_less(a, b);
}

Integer gcd_nonneg(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

Rational rational_floor(const Rational& x) { return Rational(floor_to_integer(x)); }

Rational rational_ceil(const Rational& x) { return Rational(ceil_to_integer(x)); }

Integer floor_to_integer(const Rational& x) {
    Integer num = boost::multiprecision::numerator(x);
    Integer den = boost::multiprecision::denominator(x);
    Integer q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

Integer ceil_to_integer(const Rational& x) {
    Integer num = boost::multiprecision::numerator(x);
    Integer den = boost::multiprecision::denominator(x);
    Integer q = num / den;
    if (num > 0 && q * den != num) q += 1;
    return q;
}

Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin base set for the full 64-bit range
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n <= Integer(std::numeric_limits<std::uint64_t>::max()))
        return is_prime_u64(static_cast<std::uint64_t>(n));
    // values this large never arise from the supported constructions
    throw std::overflow_error("primality test limited to 64-bit integers");
}

std::uint64_t next_prime_after(std::uint64_t n) {
    std::uint64_t c = n + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) ++c;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

Integer largest_prime_leq(const Integer& bound, const Integer& exclude) {
    Integer c = bound;
    while (c >= 2) {
        if (c != exclude && is_prime(c)) return c;
        --c;
    }
    return 0;
}

std::string integer_to_string(const Integer& v) { return v.str(); }

Integer integer_from_string(const std::string& s) { return Integer(s); }

std::string rational_to_string(const Rational& v) {
    Integer num = boost::multiprecision::numerator(v);
    Integer den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
    return Rational(num) / Rational(den);
}

std::string rational_to_decimal(const Rational& v, unsigned digits) {
    Integer num = boost::multiprecision::numerator(v);
    Integer den = boost::multiprecision::denominator(v);
    std::string sign = num < 0 ? "-" : "";
    if (num < 0) num = -num;
    std::string out = sign + Integer(num / den).str();
    if (digits == 0) return out;
    out += ".";
    Integer rest = num % den;
    for (unsigned j = 0; j < digits; ++j) {
        rest *= 10;
        out += static_cast<char>('0' + static_cast<int>(rest / den));
        rest %= den;
    }
    return out;
}

}  // namespace goldbach
