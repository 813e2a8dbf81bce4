#include "goldbach/oracle.hpp"

#include "goldbach/error.hpp"

#include <algorithm>
#include <map>

namespace goldbach {

namespace {

void collect_monomials(std::size_t arity, unsigned remaining, IntVec& current, std::vector<IntVec>& out,
                       std::size_t index) {
    if (index == arity) {
        out.push_back(current);
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        current[index] = e;
        collect_monomials(arity, remaining - e, current, out, index + 1);
    }
    current[index] = 0;
}

std::vector<IntVec> monomials_up_to_degree(std::size_t arity, unsigned max_total_degree) {
    std::vector<IntVec> out;
    IntVec current(arity, Integer(0));
    collect_monomials(arity, max_total_degree, current, out, 0);
    std::sort(out.begin(), out.end(), grlex_less);
    return out;
}

}  // namespace

PolynomialEnumerator::PolynomialEnumerator(FieldSpec field, std::vector<std::string> vars,
                                           unsigned max_total_degree, const EnumerationBudget& budget)
    : field_(field), vars_(std::move(vars)) {
    if (field.kind() != FieldKind::PrimeField)
        raise(ErrorKind::NotApplicable, "enumeration requires a prime field");
    monomials_ = monomials_up_to_degree(vars_.size(), max_total_degree);
    digits_.assign(monomials_.size(), 0);

    const std::uint64_t q = field.modulus();
    Integer count = 1;
    for (std::size_t j = 0; j < monomials_.size(); ++j) {
        count *= q;
        if (count > budget.max_candidates)
            raise(ErrorKind::BudgetExceeded, "q^(monomial count) exceeds the enumeration budget");
    }
    total_ = static_cast<std::uint64_t>(count);
}

std::optional<Polynomial> PolynomialEnumerator::next() {
    if (exhausted_) return std::nullopt;
    if (!first_) {
        const std::uint64_t q = field_.modulus();
        std::size_t pos = 0;
        while (pos < digits_.size()) {
            if (digits_[pos] + 1 < q) {
                ++digits_[pos];
                for (std::size_t j = 0; j < pos; ++j) digits_[j] = 0;
                break;
            }
            ++pos;
        }
        if (pos == digits_.size()) {
            exhausted_ = true;
            return std::nullopt;
        }
    }
    first_ = false;
    std::vector<std::pair<IntVec, Rational>> terms;
    for (std::size_t j = 0; j < digits_.size(); ++j)
        if (digits_[j] != 0) terms.emplace_back(monomials_[j], Rational(digits_[j]));
    return Polynomial::from_terms(field_, vars_, terms);
}

bool is_irreducible_bruteforce(const Polynomial& f, const EnumerationBudget& budget) {
    if (f.field().kind() != FieldKind::PrimeField)
        raise(ErrorKind::NotApplicable, "brute-force irreducibility requires a prime field");
    if (f.is_zero()) raise(ErrorKind::NotApplicable, "the zero polynomial");
    if (f.is_constant()) raise(ErrorKind::NotApplicable, "units are not considered");

    Integer degree = f.total_degree();
    if (degree > 1024) raise(ErrorKind::BudgetExceeded, "degree too large for exhaustive search");
    unsigned half = static_cast<unsigned>(degree / 2);
    if (half == 0) return true;  // total degree 1

    // one factor of any nontrivial factorization has degree <= deg/2 and can
    // be scaled monic, so this sweep is exhaustive
    PolynomialEnumerator candidates(f.field(), f.vars(), half, budget);
    while (auto g = candidates.next()) {
        if (g->total_degree() < 1) continue;
        if (g->terms().begin()->second != 1) continue;  // monic representatives only
        if (try_exact_divide(f, *g)) return false;
    }
    return true;
}

std::optional<std::vector<Polynomial>> check_sum_of_irreducibles(const Polynomial& target, std::size_t k,
                                                                 unsigned degree_bound,
                                                                 const EnumerationBudget& budget) {
    if (target.field().kind() != FieldKind::PrimeField)
        raise(ErrorKind::NotApplicable, "sum search requires a prime field");
    if (k == 0) return target.is_zero() ? std::make_optional(std::vector<Polynomial>{}) : std::nullopt;

    std::vector<Polynomial> irreducibles;
    {
        PolynomialEnumerator all(target.field(), target.vars(), degree_bound, budget);
        while (auto g = all.next()) {
            if (g->is_zero() || g->is_constant()) continue;
            if (is_irreducible_bruteforce(*g, budget)) irreducibles.push_back(*g);
        }
    }

    Integer combos = 1;  // C(m + k - 1, k)
    for (std::size_t j = 0; j < k; ++j) combos = combos * (irreducibles.size() + j) / (j + 1);
    if (combos > budget.max_candidates)
        raise(ErrorKind::BudgetExceeded, "too many candidate sums");

    std::vector<std::size_t> pick;
    std::vector<Polynomial> partial{target};  // partial[d] = target - sum of the first d picks

    // depth-first over non-decreasing index tuples
    auto search = [&](auto&& self, std::size_t depth, std::size_t start) -> bool {
        if (depth == k) return partial.back().is_zero();
        for (std::size_t j = start; j < irreducibles.size(); ++j) {
            pick.push_back(j);
            partial.push_back(partial.back() - irreducibles[j]);
            if (self(self, depth + 1, j)) return true;
            partial.pop_back();
            pick.pop_back();
        }
        return false;
    };
    if (!search(search, 0, 0)) return std::nullopt;

    std::vector<Polynomial> witness;
    for (std::size_t j : pick) witness.push_back(irreducibles[j]);
    return witness;
}

bool verify_quotient_identity(unsigned p, unsigned i) {
    if (p < 1 || i < 1) raise(ErrorKind::InvalidArgument, "parameters must be positive");
    FieldSpec field = FieldSpec::rationals();
    const std::vector<std::string> vars{"w", "x", "y"};
    auto mono = [&](unsigned ew, unsigned ex, unsigned ey) {
        return Polynomial::monomial(field, vars, IntVec{Integer(ew), Integer(ex), Integer(ey)}, 1);
    };
    Polynomial one = Polynomial::constant(field, vars, 1);

    Polynomial wx = mono(p, p + 1, 0);                       // w^p x^(p+1)
    Polynomial g = wx + mono(0, 0, 2 * p * i);               // + y^(2pi)
    Polynomial a = mono(p, p + 1, 2 * p * i) + one;          // w^p x^(p+1) y^(2pi) + 1
    Polynomial square = mono(2 * p, 2 * (p + 1), 0);         // w^(2p) x^(2(p+1))

    bool reduction_identity = (a - wx * g - (one - square)).is_zero();
    bool product_congruence = try_exact_divide(a - (wx + one) * (mono(0, 0, 2 * p * i) + one), g).has_value();
    return reduction_identity && product_congruence;
}

namespace {

// --- arithmetic in F_{p^k} = F_p[t]/(mu), elements as little-endian coefficient vectors ---

using ExtElem = std::vector<std::uint64_t>;

struct ExtField {
    std::uint64_t p = 0;
    unsigned k = 0;
    std::vector<std::uint64_t> mu;  // monic modulus, degree k, little-endian, size k+1

    ExtElem zero() const { return ExtElem(k, 0); }
    ExtElem one() const {
        ExtElem e(k, 0);
        e[0] = 1 % p;
        return e;
    }
    bool is_zero(const ExtElem& a) const {
        for (auto c : a)
            if (c) return false;
        return true;
    }
    ExtElem add(const ExtElem& a, const ExtElem& b) const {
        ExtElem r(k);
        for (unsigned j = 0; j < k; ++j) r[j] = (a[j] + b[j]) % p;
        return r;
    }
    ExtElem sub(const ExtElem& a, const ExtElem& b) const {
        ExtElem r(k);
        for (unsigned j = 0; j < k; ++j) r[j] = (a[j] + p - b[j]) % p;
        return r;
    }
    ExtElem neg(const ExtElem& a) const { return sub(zero(), a); }
    ExtElem mul(const ExtElem& a, const ExtElem& b) const {
        std::vector<std::uint64_t> prod(2 * k - 1, 0);
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        for (unsigned d = 2 * k - 2; d + 1 > k; --d) {
            std::uint64_t c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (unsigned j = 0; j < k; ++j)
                prod[d - k + j] = (prod[d - k + j] + c * (p - mu[j])) % p;
        }
        prod.resize(k);
        return prod;
    }
    ExtElem pow(ExtElem base, std::uint64_t e) const {
        ExtElem r = one();
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    ExtElem inv(const ExtElem& a) const {
        std::uint64_t order = 1;
        for (unsigned j = 0; j < k; ++j) order *= p;
        return pow(a, order - 2);
    }
};

using ExtPoly = std::map<IntVec, ExtElem, GradedLexDesc>;

void ext_add_term(ExtPoly& poly, const ExtField& F, const IntVec& e, const ExtElem& c) {
    auto it = poly.find(e);
    if (it == poly.end()) {
        if (!F.is_zero(c)) poly.emplace(e, c);
        return;
    }
    ExtElem merged = F.add(it->second, c);
    if (F.is_zero(merged))
        poly.erase(it);
    else
        it->second = merged;
}

bool ext_divides(const ExtPoly& f, const ExtPoly& g, const ExtField& F) {
    const auto& lead_g = *g.begin();
    ExtElem lead_inv = F.inv(lead_g.second);
    ExtPoly work = f;
    while (!work.empty()) {
        const auto lead_w = *work.begin();
        IntVec diff(lead_w.first.size());
        for (std::size_t j = 0; j < diff.size(); ++j) {
            diff[j] = lead_w.first[j] - lead_g.first[j];
            if (diff[j] < 0) return false;
        }
        ExtElem c = F.mul(lead_w.second, lead_inv);
        for (const auto& [e, ce] : g)
            ext_add_term(work, F, vec_add(diff, e), F.neg(F.mul(c, ce)));
    }
    return true;
}

std::vector<std::uint64_t> first_irreducible_modulus(std::uint64_t p, unsigned k,
                                                     const EnumerationBudget& budget) {
    FieldSpec fp = FieldSpec::prime_field(p);
    const std::vector<std::string> tvar{"t"};
    std::vector<std::uint64_t> low(k, 0);
    while (true) {
        std::vector<std::pair<IntVec, Rational>> terms;
        terms.emplace_back(IntVec{Integer(k)}, Rational(1));
        for (unsigned j = 0; j < k; ++j)
            if (low[j]) terms.emplace_back(IntVec{Integer(j)}, Rational(low[j]));
        Polynomial mu = Polynomial::from_terms(fp, tvar, terms);
        if (is_irreducible_bruteforce(mu, budget)) {
            std::vector<std::uint64_t> out(low);
            out.push_back(1);
            return out;
        }
        unsigned pos = 0;
        while (pos < k) {
            if (low[pos] + 1 < p) {
                ++low[pos];
                for (unsigned j = 0; j < pos; ++j) low[j] = 0;
                break;
            }
            ++pos;
        }
        if (pos == k) raise(ErrorKind::InvalidArgument, "no irreducible modulus found");
    }
}

}  // namespace

bool is_irreducible_over_extension(const Polynomial& f, unsigned extension_degree,
                                   const EnumerationBudget& budget) {
    if (f.field().kind() != FieldKind::PrimeField)
        raise(ErrorKind::NotApplicable, "extension check requires a prime-field polynomial");
    if (extension_degree < 2 || extension_degree > 3)
        raise(ErrorKind::InvalidArgument, "extension degree must be 2 or 3");
    if (f.is_zero() || f.is_constant()) raise(ErrorKind::NotApplicable, "zero or unit");

    ExtField F;
    F.p = f.field().modulus();
    F.k = extension_degree;
    F.mu = first_irreducible_modulus(F.p, F.k, budget);
    std::uint64_t q = 1;
    for (unsigned j = 0; j < F.k; ++j) q *= F.p;

    ExtPoly fx;
    for (const auto& [e, c] : f.terms()) {
        ExtElem v = F.zero();
        v[0] = static_cast<std::uint64_t>(boost::multiprecision::numerator(c));
        ext_add_term(fx, F, e, v);
    }

    Integer degree = f.total_degree();
    unsigned half = static_cast<unsigned>(degree / 2);
    if (half == 0) return true;

    std::vector<IntVec> monomials = monomials_up_to_degree(f.arity(), half);
    Integer count = 1;
    for (std::size_t j = 0; j < monomials.size(); ++j) {
        count *= q;
        if (count > budget.max_candidates)
            raise(ErrorKind::BudgetExceeded, "extension candidate count exceeds the budget");
    }

    std::vector<std::uint64_t> digits(monomials.size(), 0);
    while (true) {
        std::size_t pos = 0;
        while (pos < digits.size()) {
            if (digits[pos] + 1 < q) {
                ++digits[pos];
                for (std::size_t j = 0; j < pos; ++j) digits[j] = 0;
                break;
            }
            ++pos;
        }
        if (pos == digits.size()) break;

        ExtPoly g;
        for (std::size_t j = 0; j < digits.size(); ++j) {
            if (!digits[j]) continue;
            ExtElem v(F.k, 0);
            std::uint64_t idx = digits[j];
            for (unsigned c = 0; c < F.k; ++c) {
                v[c] = idx % F.p;
                idx /= F.p;
            }
            g.emplace(monomials[j], v);
        }
        if (g.empty()) continue;
        if (vec_total(g.begin()->first) < 1) continue;  // constants are units
        // monic representatives only
        const ExtElem& lead = g.begin()->second;
        bool monic = lead[0] == 1;
        for (unsigned c = 1; monic && c < F.k; ++c) monic = lead[c] == 0;
        if (!monic) continue;
        if (ext_divides(fx, g, F)) return false;
    }
    return true;
}

}  // namespace goldbach
