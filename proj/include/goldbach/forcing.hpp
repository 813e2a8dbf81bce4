#ifndef GOLDBACH_FORCING_HPP
#define GOLDBACH_FORCING_HPP

#include "goldbach/decompose.hpp"
#include "goldbach/polynomial.hpp"

#include <optional>
#include <vector>

namespace goldbach {

/// Linear forcing algebra A = K[x_1..x_n]/(f_1 x_1 + ... + f_n x_n + f) with
/// constant coefficients. The pivot is an index with nonzero coefficient;
/// by default the smallest such index.
struct ForcingData {
    FieldSpec field;
    std::vector<std::string> vars;
    std::vector<Rational> coefficients;  // f_1..f_n, canonicalized in the field
    Rational constant;                   // f
    std::size_t pivot = 0;

    static ForcingData create(FieldSpec field, std::vector<std::string> vars,
                              std::vector<Rational> coefficients, const Rational& constant,
                              std::optional<std::size_t> pivot_override = std::nullopt);

    /// The defining relation f_1 x_1 + ... + f_n x_n + f as a polynomial.
    Polynomial relation() const;
};

/// Canonical representative of an element of A in the polynomial ring on the
/// non-pivot variables: substitutes
/// x_pivot -> -sum_{j != pivot} (f_j/f_pivot) x_j - f/f_pivot.
/// Congruent elements have equal normal forms.
Polynomial forcing_normal_form(const ForcingData& data, const Polynomial& element);

struct ForcingDecomposition {
    Decomposition decomposition;       // in the n-1 surviving variables
    Polynomial residual_normal_form;   // normal form of (sum of summands) - element; zero iff congruent
    bool congruent = false;
};

/// Certified decomposition of an element of A: decomposes its normal form
/// and verifies that the difference with the input vanishes modulo the
/// relation. Needs n >= 3 so the image ring keeps at least two variables.
ForcingDecomposition decompose_in_forcing(const ForcingData& data, const Polynomial& element,
                                          DecompositionMode mode);

}  // namespace goldbach

#endif
