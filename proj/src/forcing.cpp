#include "goldbach/forcing.hpp"

#include "goldbach/error.hpp"

namespace goldbach {

ForcingData ForcingData::create(FieldSpec field, std::vector<std::string> vars,
                                std::vector<Rational> coefficients, const Rational& constant,
                                std::optional<std::size_t> pivot_override) {
    if (vars.size() < 2) raise(ErrorKind::UnsupportedArity, "forcing data needs at least two variables");
    if (coefficients.size() != vars.size())
        raise(ErrorKind::ArityMismatch, "coefficient count differs from the variable count");

    ForcingData data{field, std::move(vars), std::move(coefficients), constant, 0};
    for (auto& c : data.coefficients) c = field.canonical(c);
    data.constant = field.canonical(constant);

    if (pivot_override) {
        if (*pivot_override >= data.coefficients.size())
            raise(ErrorKind::PivotOutOfRange, "pivot index out of range");
        if (field.is_zero(data.coefficients[*pivot_override]))
            raise(ErrorKind::PivotCoefficientZero, "pivot coefficient is zero");
        data.pivot = *pivot_override;
        return data;
    }
    for (std::size_t j = 0; j < data.coefficients.size(); ++j) {
        if (!field.is_zero(data.coefficients[j])) {
            data.pivot = j;
            return data;
        }
    }
    raise(ErrorKind::PivotCoefficientZero, "all coefficients vanish");
}

Polynomial ForcingData::relation() const {
    Polynomial r = Polynomial::constant(field, vars, constant);
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        IntVec e(vars.size(), Integer(0));
        e[j] = 1;
        r = r + Polynomial::monomial(field, vars, e, coefficients[j]);
    }
    return r;
}

Polynomial forcing_normal_form(const ForcingData& data, const Polynomial& element) {
    if (!(element.field() == data.field))
        raise(ErrorKind::FieldMismatch, "element lives over a different field");
    if (element.vars() != data.vars)
        raise(ErrorKind::ArityMismatch, "element lives over a different variable list");

    const FieldSpec& field = data.field;
    const Coefficient lead = data.coefficients[data.pivot];
    Polynomial replacement =
        Polynomial::constant(field, data.vars, field.neg(field.div(data.constant, lead)));
    for (std::size_t j = 0; j < data.coefficients.size(); ++j) {
        if (j == data.pivot || field.is_zero(data.coefficients[j])) continue;
        IntVec e(data.vars.size(), Integer(0));
        e[j] = 1;
        replacement =
            replacement + Polynomial::monomial(field, data.vars, e,
                                               field.neg(field.div(data.coefficients[j], lead)));
    }
    return substitute_linear(element, data.pivot, replacement);
}

namespace {

/// Re-embeds a polynomial in the surviving variables into the full ring,
/// with exponent 0 at the pivot slot.
Polynomial lift_to_full_ring(const ForcingData& data, const Polynomial& reduced) {
    std::vector<std::pair<IntVec, Rational>> terms;
    for (const auto& [e, c] : reduced.terms()) {
        IntVec full(data.vars.size(), Integer(0));
        std::size_t k = 0;
        for (std::size_t j = 0; j < data.vars.size(); ++j) {
            if (j == data.pivot) continue;
            full[j] = e[k++];
        }
        terms.emplace_back(std::move(full), c);
    }
    return Polynomial::from_terms(data.field, data.vars, terms);
}

}  // namespace

ForcingDecomposition decompose_in_forcing(const ForcingData& data, const Polynomial& element,
                                          DecompositionMode mode) {
    if (data.vars.size() < 3)
        raise(ErrorKind::UnsupportedArity,
              "two-variable forcing algebras reduce to one surviving variable");

    Polynomial reduced = forcing_normal_form(data, element);
    ForcingDecomposition result{decompose(reduced, mode), element, false};

    Polynomial lifted_sum = lift_to_full_ring(data, result.decomposition.sum());
    result.residual_normal_form = forcing_normal_form(data, lifted_sum - element);
    result.congruent = result.residual_normal_form.is_zero();
    return result;
}

}  // namespace goldbach
