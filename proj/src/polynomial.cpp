#include "goldbach/polynomial.hpp"

#include "goldbach/error.hpp"

#include <sstream>

namespace goldbach {

Polynomial::Polynomial(FieldSpec field, std::vector<std::string> vars)
    : field_(field), vars_(std::move(vars)) {
    if (vars_.empty()) raise(ErrorKind::ArityMismatch, "a polynomial ring needs at least one variable");
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                raise(ErrorKind::InvalidArgument, "duplicate variable name '" + vars_[i] + "'");
}

void Polynomial::insert_term(const IntVec& exponent, const Rational& coefficient) {
    if (exponent.size() != arity())
        raise(ErrorKind::ArityMismatch, "exponent arity does not match the variable list");
    if (!vec_is_nonnegative(exponent))
        raise(ErrorKind::InvalidArgument, "negative exponent");
    Coefficient c = field_.canonical(coefficient);
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        if (!field_.is_zero(c)) terms_.emplace(exponent, c);
        return;
    }
    Coefficient merged = field_.add(it->second, c);
    if (field_.is_zero(merged))
        terms_.erase(it);
    else
        it->second = merged;
}

Polynomial Polynomial::from_terms(FieldSpec field, std::vector<std::string> vars,
                                  const std::vector<std::pair<IntVec, Rational>>& raw_terms) {
    Polynomial p(field, std::move(vars));
    for (const auto& [e, c] : raw_terms) p.insert_term(e, c);
    return p;
}

Polynomial Polynomial::constant(FieldSpec field, std::vector<std::string> vars, const Rational& value) {
    Polynomial p(field, std::move(vars));
    p.insert_term(IntVec(p.arity(), 0), value);
    return p;
}

Polynomial Polynomial::monomial(FieldSpec field, std::vector<std::string> vars, const IntVec& exponent,
                                const Rational& coefficient) {
    Polynomial p(field, std::move(vars));
    p.insert_term(exponent, coefficient);
    return p;
}

Polynomial Polynomial::variable(FieldSpec field, std::vector<std::string> vars, std::size_t index) {
    Polynomial p(field, std::move(vars));
    if (index >= p.arity()) raise(ErrorKind::PivotOutOfRange, "variable index out of range");
    IntVec e(p.arity(), 0);
    e[index] = 1;
    p.insert_term(e, Rational(1));
    return p;
}

std::vector<IntVec> Polynomial::support() const {
    std::vector<IntVec> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

Coefficient Polynomial::coefficient(const IntVec& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? field_.zero() : it->second;
}

Coefficient Polynomial::constant_coefficient() const { return coefficient(IntVec(arity(), 0)); }

Integer Polynomial::total_degree() const {
    if (terms_.empty()) return Integer(-1);
    return vec_total(terms_.begin()->first);  // leading term has the maximal degree
}

bool Polynomial::divisible_by_variable(std::size_t index) const {
    if (terms_.empty()) return false;
    for (const auto& [e, c] : terms_)
        if (e[index] == 0) return false;
    return true;
}

bool Polynomial::divisible_by_any_variable() const {
    for (std::size_t j = 0; j < arity(); ++j)
        if (divisible_by_variable(j)) return true;
    return false;
}

bool Polynomial::is_constant() const { return total_degree() <= 0; }

void Polynomial::require_compatible(const Polynomial& other) const {
    if (!(field_ == other.field_)) raise(ErrorKind::FieldMismatch, "operands live over different fields");
    if (vars_ != other.vars_) raise(ErrorKind::ArityMismatch, "operands live over different variable lists");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(field_, vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, field_.neg(c));
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_compatible(other);
    Polynomial r = *this;
    for (const auto& [e, c] : other.terms_) r.insert_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    require_compatible(other);
    Polynomial r = *this;
    for (const auto& [e, c] : other.terms_) r.insert_term(e, other.field_.neg(c));
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_compatible(other);
    Polynomial r(field_, vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) r.insert_term(vec_add(ea, eb), field_.mul(ca, cb));
    return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return field_ == other.field_ && vars_ == other.vars_ && terms_ == other.terms_;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool negative = c < 0;  // residues are kept in [0, p), so this only fires over Q
        Coefficient mag = negative ? field_.neg(c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string mon;
        for (std::size_t j = 0; j < arity(); ++j) {
            if (e[j] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += vars_[j];
            if (e[j] != 1) mon += "^" + e[j].str();
        }
        if (mon.empty()) {
            out << field_.to_string(mag);
        } else if (mag == 1) {
            out << mon;
        } else {
            out << field_.to_string(mag) << "*" << mon;
        }
    }
    return out.str();
}

std::optional<Polynomial> try_exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) raise(ErrorKind::DivisionByZero, "division by the zero polynomial");
    if (!(f.field() == g.field())) raise(ErrorKind::FieldMismatch, "operands live over different fields");
    if (f.vars() != g.vars()) raise(ErrorKind::ArityMismatch, "operands live over different variable lists");

    const FieldSpec& field = f.field();
    const auto& lead_g = *g.terms().begin();
    Polynomial quotient(field, f.vars());
    Polynomial work = f;
    while (!work.is_zero()) {
        const auto& lead_w = *work.terms().begin();
        IntVec diff(lead_w.first.size());
        for (std::size_t j = 0; j < diff.size(); ++j) {
            diff[j] = lead_w.first[j] - lead_g.first[j];
            if (diff[j] < 0) return std::nullopt;  // leading term not reducible: nonzero remainder
        }
        Coefficient c = field.div(lead_w.second, lead_g.second);
        Polynomial t = Polynomial::monomial(field, f.vars(), diff, c);
        quotient = quotient + t;
        work = work - t * g;
    }
    return quotient;
}

Polynomial power(const Polynomial& base, const Integer& exponent) {
    if (exponent < 0) raise(ErrorKind::InvalidArgument, "negative polynomial power");
    Polynomial result = Polynomial::constant(base.field(), base.vars(), 1);
    Polynomial sq = base;
    Integer e = exponent;
    while (e > 0) {
        if ((e & 1) != 0) result = result * sq;
        e >>= 1;
        if (e > 0) sq = sq * sq;
    }
    return result;
}

Polynomial substitute_linear(const Polynomial& f, std::size_t pivot, const Polynomial& replacement) {
    if (pivot >= f.arity()) raise(ErrorKind::PivotOutOfRange, "pivot index out of range");
    if (f.arity() < 2)
        raise(ErrorKind::ArityTooSmall, "substitution needs at least two variables");
    if (!(f.field() == replacement.field()))
        raise(ErrorKind::FieldMismatch, "replacement lives over a different field");
    if (f.vars() != replacement.vars())
        raise(ErrorKind::ArityMismatch, "replacement lives over a different variable list");
    for (const auto& [e, c] : replacement.terms())
        if (e[pivot] != 0) raise(ErrorKind::ReplacementUsesPivot, "replacement mentions the pivot variable");

    std::vector<std::string> new_vars;
    for (std::size_t j = 0; j < f.arity(); ++j)
        if (j != pivot) new_vars.push_back(f.vars()[j]);

    auto drop_pivot = [&](const IntVec& e) {
        IntVec r;
        r.reserve(e.size() - 1);
        for (std::size_t j = 0; j < e.size(); ++j)
            if (j != pivot) r.push_back(e[j]);
        return r;
    };

    Polynomial rep_small(f.field(), new_vars);
    {
        std::vector<std::pair<IntVec, Rational>> ts;
        for (const auto& [e, c] : replacement.terms()) ts.emplace_back(drop_pivot(e), c);
        rep_small = Polynomial::from_terms(f.field(), new_vars, ts);
    }

    Polynomial result(f.field(), new_vars);
    for (const auto& [e, c] : f.terms()) {
        Polynomial piece = Polynomial::monomial(f.field(), new_vars, drop_pivot(e), c);
        if (e[pivot] != 0) piece = piece * power(rep_small, e[pivot]);
        result = result + piece;
    }
    return result;
}

}  // namespace goldbach
