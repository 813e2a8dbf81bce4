#ifndef GOLDBACH_DECOMPOSE_HPP
#define GOLDBACH_DECOMPOSE_HPP

#include "goldbach/lattice.hpp"
#include "goldbach/polynomial.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace goldbach {

/// How monomials are turned into certified irreducible summands.
///  - Shortcut: monomials with gcd(i) = 1 become a_i x^i - 1 directly, the
///    borrowed +1 moves to the constant bucket; other monomials get the
///    pyramid pair.
///  - UniformPyramid: every monomial gets the pyramid pair
///    A1 = a_i x^i + x^w + 1, A2 = -x^w - 1, reproducing the two-variable
///    session output.
///  - LocalizationSafe: UniformPyramid with the non-monomial constant rule
///    (x1 + x2 + c, -x1 - x2), so no summand is a monomial and every summand
///    stays irreducible in a monomial localization.
enum class DecompositionMode { Shortcut, UniformPyramid, LocalizationSafe };

std::string mode_name(DecompositionMode mode);
DecompositionMode mode_from_name(const std::string& name);

/// The companion exponent chosen for one input monomial, together with the
/// bookkeeping of the deterministic rule that produced it.
struct WChoice {
    IntVec monomial;                       // exponent of the input monomial (all zero: constant bucket)
    IntVec w;                              // companion exponent
    Integer p;                             // the rule's p for three or more variables; 0 when unused
    std::vector<std::size_t> permutation;  // slot k of the permuted order holds variable permutation[k]
};

struct SummandCertificate {
    enum class Kind { SegmentGcd, PyramidGcd, Linear, WitnessSplit };
    Kind kind = Kind::Linear;
    IntVec endpoint;              // SegmentGcd: Newton polytope is the segment 0..endpoint
    IntVec pyramid_i;             // PyramidGcd: Newton polytope is the triangle conv{0, i, w}
    IntVec pyramid_w;
    std::vector<IntVec> witness;  // WitnessSplit: the verified witness points

    static SummandCertificate segment(IntVec endpoint);
    static SummandCertificate pyramid(IntVec i, IntVec w);
    static SummandCertificate linear();
    static SummandCertificate witness_split(std::vector<IntVec> witness);
};

const char* certificate_kind_name(SummandCertificate::Kind kind);

struct Decomposition {
    Polynomial input;
    DecompositionMode mode;
    std::vector<std::pair<Polynomial, SummandCertificate>> summands;
    std::vector<WChoice> w_choices;

    Polynomial sum() const;
};

/// Deterministic companion-exponent rule. Two variables: w = (i1, (i1+1)^(i2+1))
/// when i1 != 0, else w = ((i2+1)^(i1+1), i2). Three or more variables: pick
/// the largest slot s >= 3 with i_s != 0 (swapping the last slot with the
/// first nonzero one when no such s exists), set p = (prod of the nonzero
/// entries) + 2 and w = (p, p+1, 0, ..., 2*i_s*p at slot s, ..., 0) in the
/// permuted coordinates, mapped back. Free coordinates are fixed to 0. The
/// result always satisfies gcd(w) = 1, joint gcd {i, w} = 1, and i, w
/// linearly independent.
WChoice select_w(const IntVec& i, std::size_t arity);

/// Writes H as a sum of at most 2r certified absolutely irreducible
/// summands (r = number of nonzero terms; the zero polynomial gets two).
/// Needs at least two variables.
Decomposition decompose(const Polynomial& H, DecompositionMode mode);

struct SplitResult {
    Polynomial f1;
    Polynomial f2;
    SummandCertificate certificate;  // shared WitnessSplit certificate
};

/// Two-summand split f = f1 + f2 through a supplied Goldbach-condition
/// witness: f1 = f + sum x^w_i, f2 = -sum x^w_i. The witness conditions are
/// verified first and both parts are re-validated; any failure is reported
/// as WitnessRejected.
SplitResult split_by_witness(const Polynomial& f, const std::vector<IntVec>& witness,
                             const OracleConfig& config = {});

struct CertifyReport {
    bool ok = false;
    std::vector<std::string> failures;
};

/// Re-validates one summand against its certificate; nullopt when valid,
/// otherwise a description of the failure. Never throws.
std::optional<std::string> validate_certificate(const Polynomial& summand, const SummandCertificate& cert,
                                                const OracleConfig& config = {});

/// Re-checks a whole decomposition: exact re-sum, the 2r bound, and every
/// certificate. Failures are reported, not thrown.
CertifyReport certify(const Decomposition& d, const OracleConfig& config = {});

struct LocalizedDecomposition {
    Decomposition numerators;
    Polynomial denominator;
};

/// Decomposition of H/W in the localization at the monomial multiplicative
/// system: W must be a single term. Every numerator comes from the
/// LocalizationSafe mode, hence is a non-monomial certified irreducible, and
/// the fractions sum to H/W.
LocalizedDecomposition localize_decompose(const Polynomial& H, const Polynomial& W);

}  // namespace goldbach

#endif
