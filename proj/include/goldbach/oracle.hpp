#ifndef GOLDBACH_ORACLE_HPP
#define GOLDBACH_ORACLE_HPP

#include "goldbach/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace goldbach {

struct EnumerationBudget {
    std::uint64_t max_candidates = 10'000'000;
};

/// Streams every polynomial over a prime field with total degree <= bound,
/// each exactly once, in a fixed order (coefficient odometer over the
/// graded-lex ascending monomial list; the zero polynomial comes first).
class PolynomialEnumerator {
public:
    PolynomialEnumerator(FieldSpec field, std::vector<std::string> vars, unsigned max_total_degree,
                         const EnumerationBudget& budget = {});

    std::optional<Polynomial> next();

    /// Total number of polynomials the stream will yield.
    std::uint64_t candidate_count() const { return total_; }

private:
    FieldSpec field_;
    std::vector<std::string> vars_;
    std::vector<IntVec> monomials_;
    std::vector<std::uint64_t> digits_;
    std::uint64_t total_ = 0;
    bool exhausted_ = false;
    bool first_ = true;
};

/// Referee-grade irreducibility by exhaustive trial division: reducible iff
/// some monic factor of total degree in [1, deg(f)/2] divides f exactly.
/// Rejects zero and units (NotApplicable); prime fields only.
bool is_irreducible_bruteforce(const Polynomial& f, const EnumerationBudget& budget = {});

/// Searches k-element multisets of brute-force irreducibles of total degree
/// <= degree_bound summing to the target. Returns the first witness in
/// enumeration order, or nullopt.
std::optional<std::vector<Polynomial>> check_sum_of_irreducibles(const Polynomial& target, std::size_t k,
                                                                 unsigned degree_bound,
                                                                 const EnumerationBudget& budget = {});

/// Exactness check of the quotient-ring reduction behind the
/// non-extension remark: with g = w^p x^(p+1) + y^(2pi) and
/// A = w^p x^(p+1) y^(2pi) + 1 over Q[w,x,y], verifies
///   A = (w^p x^(p+1)) g + (1 - w^(2p) x^(2(p+1)))
/// and that A - (w^p x^(p+1) + 1)(y^(2pi) + 1) is exactly divisible by g.
bool verify_quotient_identity(unsigned p, unsigned i);

/// Evidence-grade absolute-irreducibility spot check: repeats the trial
/// division over the extension field F_{p^k} (k <= 3), modeled as
/// F_p[t]/(mu) for the first monic irreducible mu of degree k. Not a proof;
/// reported as evidence only.
bool is_irreducible_over_extension(const Polynomial& f, unsigned extension_degree,
                                   const EnumerationBudget& budget = {});

}  // namespace goldbach

#endif
