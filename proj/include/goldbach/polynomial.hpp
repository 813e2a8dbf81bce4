#ifndef GOLDBACH_POLYNOMIAL_HPP
#define GOLDBACH_POLYNOMIAL_HPP

#include "goldbach/field.hpp"
#include "goldbach/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace goldbach {

/// Exact multivariate polynomial: a canonical finite map from exponent
/// vectors to nonzero coefficients over a fixed field and variable list.
/// Terms are kept in graded-lex descending order, so iteration (and hence
/// printing) is deterministic. Immutable in use: every operation returns a
/// fresh value.
class Polynomial {
public:
    using TermMap = std::map<IntVec, Coefficient, GradedLexDesc>;

    /// The zero polynomial in the given ring.
    Polynomial(FieldSpec field, std::vector<std::string> vars);

    static Polynomial from_terms(FieldSpec field, std::vector<std::string> vars,
                                 const std::vector<std::pair<IntVec, Rational>>& raw_terms);
    static Polynomial constant(FieldSpec field, std::vector<std::string> vars, const Rational& value);
    static Polynomial monomial(FieldSpec field, std::vector<std::string> vars, const IntVec& exponent,
                               const Rational& coefficient);
    static Polynomial variable(FieldSpec field, std::vector<std::string> vars, std::size_t index);

    const FieldSpec& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t arity() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::vector<IntVec> support() const;
    Coefficient coefficient(const IntVec& exponent) const;
    Coefficient constant_coefficient() const;

    /// Total degree; -1 for the zero polynomial.
    Integer total_degree() const;

    bool divisible_by_variable(std::size_t index) const;
    bool divisible_by_any_variable() const;
    bool is_constant() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    bool operator==(const Polynomial& other) const;

    std::string to_string() const;

private:
    void insert_term(const IntVec& exponent, const Rational& coefficient);
    void require_compatible(const Polynomial& other) const;

    FieldSpec field_;
    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Exact quotient f/g when g divides f; std::nullopt otherwise. Single
/// divisor reduction under the graded-lex order; a singleton divisor set
/// generates a principal ideal, so zero remainder is equivalent to
/// divisibility.
std::optional<Polynomial> try_exact_divide(const Polynomial& f, const Polynomial& g);

Polynomial power(const Polynomial& base, const Integer& exponent);

/// Image of f under x_pivot -> replacement, in the ring with the pivot
/// variable removed. The replacement must not mention the pivot.
Polynomial substitute_linear(const Polynomial& f, std::size_t pivot, const Polynomial& replacement);

}  // namespace goldbach

#endif
