#include "goldbach/decompose.hpp"

#include "goldbach/error.hpp"

#include <algorithm>
#include <set>

namespace goldbach {

std::string mode_name(DecompositionMode mode) {
    switch (mode) {
        case DecompositionMode::Shortcut: return "shortcut";
        case DecompositionMode::UniformPyramid: return "pyramid";
        case DecompositionMode::LocalizationSafe: return "localization";
    }
    return "?";
}

DecompositionMode mode_from_name(const std::string& name) {
    if (name == "shortcut") return DecompositionMode::Shortcut;
    if (name == "pyramid") return DecompositionMode::UniformPyramid;
    if (name == "localization") return DecompositionMode::LocalizationSafe;
    raise(ErrorKind::InvalidArgument, "unknown mode '" + name + "'");
}

SummandCertificate SummandCertificate::segment(IntVec endpoint) {
    SummandCertificate c;
    c.kind = Kind::SegmentGcd;
    c.endpoint = std::move(endpoint);
    return c;
}

SummandCertificate SummandCertificate::pyramid(IntVec i, IntVec w) {
    SummandCertificate c;
    c.kind = Kind::PyramidGcd;
    c.pyramid_i = std::move(i);
    c.pyramid_w = std::move(w);
    return c;
}

SummandCertificate SummandCertificate::linear() {
    SummandCertificate c;
    c.kind = Kind::Linear;
    return c;
}

SummandCertificate SummandCertificate::witness_split(std::vector<IntVec> witness) {
    SummandCertificate c;
    c.kind = Kind::WitnessSplit;
    c.witness = std::move(witness);
    return c;
}

const char* certificate_kind_name(SummandCertificate::Kind kind) {
    switch (kind) {
        case SummandCertificate::Kind::SegmentGcd: return "segment-gcd";
        case SummandCertificate::Kind::PyramidGcd: return "pyramid-gcd";
        case SummandCertificate::Kind::Linear: return "linear";
        case SummandCertificate::Kind::WitnessSplit: return "witness-split";
    }
    return "?";
}

Polynomial Decomposition::sum() const {
    Polynomial total(input.field(), input.vars());
    for (const auto& [poly, cert] : summands) total = total + poly;
    return total;
}

namespace {

Integer int_pow(const Integer& base, const Integer& exponent) {
    if (exponent < 0) raise(ErrorKind::InvalidArgument, "negative exponent");
    if (exponent > Integer(1) << 32)
        raise(ErrorKind::BudgetExceeded, "companion exponent too large to materialize");
    Integer result = 1;
    Integer sq = base;
    Integer e = exponent;
    while (e > 0) {
        if ((e & 1) != 0) result *= sq;
        e >>= 1;
        if (e > 0) sq *= sq;
    }
    return result;
}

std::vector<std::size_t> identity_permutation(std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    return perm;
}

}  // namespace

WChoice select_w(const IntVec& i, std::size_t arity) {
    if (arity < 2) raise(ErrorKind::ArityTooSmall, "companion rule needs at least two variables");
    if (i.size() != arity) raise(ErrorKind::ArityMismatch, "exponent arity mismatch");
    if (!vec_is_nonnegative(i)) raise(ErrorKind::InvalidArgument, "negative exponent entry");
    if (vec_is_zero(i)) raise(ErrorKind::ZeroExponent, "the zero exponent has no companion");

    WChoice choice;
    choice.monomial = i;
    choice.permutation = identity_permutation(arity);
    choice.p = 0;

    if (arity == 2) {
        if (i[0] != 0)
            choice.w = IntVec{i[0], int_pow(i[0] + 1, i[1] + 1)};
        else
            choice.w = IntVec{int_pow(i[1] + 1, i[0] + 1), i[1]};
        return choice;
    }

    // three or more variables: work in permuted coordinates where some slot
    // s >= 3 carries a nonzero entry
    std::size_t s = arity;  // 0-based slot, valid values >= 2
    for (std::size_t k = arity; k-- > 2;) {
        if (i[k] != 0) {
            s = k;
            break;
        }
    }
    IntVec permuted = i;
    if (s == arity) {
        std::size_t first_nonzero = 0;
        while (i[first_nonzero] == 0) ++first_nonzero;
        std::swap(choice.permutation[first_nonzero], choice.permutation[arity - 1]);
        std::swap(permuted[first_nonzero], permuted[arity - 1]);
        s = arity - 1;
    }

    Integer p = 1;
    for (const auto& e : permuted)
        if (e != 0) p *= e;
    p += 2;
    choice.p = p;

    IntVec w_permuted(arity, Integer(0));
    w_permuted[0] = p;
    w_permuted[1] = p + 1;
    w_permuted[s] = 2 * permuted[s] * p;

    // the permutation is a swap (or identity), so it is its own inverse
    IntVec w(arity, Integer(0));
    for (std::size_t k = 0; k < arity; ++k) w[choice.permutation[k]] = w_permuted[k];
    choice.w = std::move(w);
    return choice;
}

Decomposition decompose(const Polynomial& H, DecompositionMode mode) {
    const std::size_t n = H.arity();
    if (n < 2) raise(ErrorKind::ArityTooSmall, "decomposition needs at least two variables");
    const FieldSpec& field = H.field();
    const auto& vars = H.vars();
    const IntVec zero(n, Integer(0));

    Decomposition result{H, mode, {}, {}};

    Coefficient bucket = H.constant_coefficient();
    const Coefficient original_constant = bucket;

    std::size_t gcd_one_count = 0;
    if (mode == DecompositionMode::Shortcut) {
        for (const auto& [e, a] : H.terms())
            if (!vec_is_zero(e) && gcd_of_vector(e) == 1) ++gcd_one_count;
    }
    // with a single gcd-1 monomial and no constant term the borrowed +1 would
    // cost an extra pair and break the 2r bound, so that monomial falls back
    // to the pyramid pair
    const bool shortcut_repair = mode == DecompositionMode::Shortcut && gcd_one_count == 1 &&
                                 field.is_zero(original_constant);

    for (const auto& [e, a] : H.terms()) {
        if (vec_is_zero(e)) continue;
        bool direct = mode == DecompositionMode::Shortcut && !shortcut_repair && gcd_of_vector(e) == 1;
        if (direct) {
            Polynomial s = Polynomial::monomial(field, vars, e, a) - Polynomial::constant(field, vars, 1);
            result.summands.emplace_back(std::move(s), SummandCertificate::segment(e));
            bucket = field.add(bucket, field.one());
            continue;
        }
        WChoice wc = select_w(e, n);
        Polynomial xw = Polynomial::monomial(field, vars, wc.w, 1);
        Polynomial one = Polynomial::constant(field, vars, 1);
        Polynomial a1 = Polynomial::monomial(field, vars, e, a) + xw + one;
        Polynomial a2 = -(xw + one);
        result.summands.emplace_back(std::move(a1), SummandCertificate::pyramid(e, wc.w));
        result.summands.emplace_back(std::move(a2), SummandCertificate::segment(wc.w));
        result.w_choices.push_back(std::move(wc));
    }

    if (!field.is_zero(bucket) || H.is_zero()) {
        Polynomial x1 = Polynomial::variable(field, vars, 0);
        WChoice constant_choice;
        constant_choice.monomial = zero;
        constant_choice.p = 0;
        constant_choice.permutation = identity_permutation(n);
        if (mode == DecompositionMode::LocalizationSafe) {
            Polynomial x2 = Polynomial::variable(field, vars, 1);
            Polynomial head = x1 + x2 + Polynomial::constant(field, vars, bucket);
            result.summands.emplace_back(std::move(head), SummandCertificate::linear());
            result.summands.emplace_back(-(x1 + x2), SummandCertificate::linear());
            IntVec e12(n, Integer(0));
            e12[0] = 1;
            e12[1] = 1;
            constant_choice.w = e12;
        } else {
            Polynomial head = x1 + Polynomial::constant(field, vars, bucket);
            result.summands.emplace_back(std::move(head), SummandCertificate::linear());
            result.summands.emplace_back(-x1, SummandCertificate::linear());
            IntVec e1(n, Integer(0));
            e1[0] = 1;
            constant_choice.w = e1;
        }
        result.w_choices.push_back(std::move(constant_choice));
    }
    return result;
}

namespace {

std::string describe_vec(const IntVec& v) {
    std::string s = "(";
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) s += ",";
        s += v[j].str();
    }
    return s + ")";
}

std::optional<std::string> validate_unchecked(const Polynomial& summand, const SummandCertificate& cert,
                                              const OracleConfig& config) {
    if (summand.is_zero()) return "summand is zero";
    const std::size_t n = summand.arity();
    const IntVec zero(n, Integer(0));

    switch (cert.kind) {
        case SummandCertificate::Kind::SegmentGcd: {
            if (cert.endpoint.size() != n) return "segment endpoint arity mismatch";
            if (summand.divisible_by_any_variable()) return "summand divisible by a variable";
            LatticePolytope hull = hull_vertices(summand.support());
            std::vector<IntVec> expected{zero, cert.endpoint};
            std::sort(expected.begin(), expected.end(), lex_less);
            if (hull.vertices != expected) return "Newton polytope is not the segment 0.." + describe_vec(cert.endpoint);
            if (gcd_of_vector(cert.endpoint) != 1)
                return "segment gcd is " + gcd_of_vector(cert.endpoint).str() + ", not 1";
            return std::nullopt;
        }
        case SummandCertificate::Kind::PyramidGcd: {
            if (cert.pyramid_i.size() != n || cert.pyramid_w.size() != n)
                return "pyramid point arity mismatch";
            if (summand.field().is_zero(summand.constant_coefficient())) return "missing constant term";
            if (summand.divisible_by_any_variable()) return "summand divisible by a variable";
            LatticePolytope hull = hull_vertices(summand.support());
            std::vector<IntVec> expected{zero, cert.pyramid_i, cert.pyramid_w};
            std::sort(expected.begin(), expected.end(), lex_less);
            expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
            if (hull.vertices != expected)
                return "Newton polytope is not conv{0, " + describe_vec(cert.pyramid_i) + ", " +
                       describe_vec(cert.pyramid_w) + "}";
            if (!pyramid_indecomposable({cert.pyramid_i, cert.pyramid_w}, zero))
                return "pyramid gcd differs from 1";
            return std::nullopt;
        }
        case SummandCertificate::Kind::Linear: {
            if (summand.total_degree() != 1) return "summand is not of total degree 1";
            return std::nullopt;
        }
        case SummandCertificate::Kind::WitnessSplit: {
            if (summand.divisible_by_any_variable()) return "summand divisible by a variable";
            DecomposabilityVerdict verdict = decide_indecomposable(hull_vertices(summand.support()), config);
            if (verdict.decomposable()) return "Newton polytope decomposable: " + verdict.reason;
            if (verdict.unknown()) return "Newton polytope indecomposability undecided: " + verdict.reason;
            return std::nullopt;
        }
    }
    return "unknown certificate kind";
}

}  // namespace

std::optional<std::string> validate_certificate(const Polynomial& summand, const SummandCertificate& cert,
                                                const OracleConfig& config) {
    try {
        return validate_unchecked(summand, cert, config);
    } catch (const Error& e) {
        return std::string(e.what());
    }
}

CertifyReport certify(const Decomposition& d, const OracleConfig& config) {
    CertifyReport report;
    bool compatible = true;
    for (std::size_t k = 0; k < d.summands.size(); ++k) {
        const Polynomial& s = d.summands[k].first;
        if (!(s.field() == d.input.field()) || s.vars() != d.input.vars()) {
            report.failures.push_back("summand " + std::to_string(k + 1) + ": ring mismatch");
            compatible = false;
        }
    }
    if (compatible && !(d.sum() == d.input)) report.failures.push_back("summands do not sum to the input");

    std::size_t bound = 2 * std::max<std::size_t>(d.input.term_count(), 1);
    if (d.summands.size() > bound)
        report.failures.push_back("summand count " + std::to_string(d.summands.size()) +
                                  " exceeds the bound " + std::to_string(bound));

    for (std::size_t k = 0; k < d.summands.size(); ++k) {
        if (auto failure = validate_certificate(d.summands[k].first, d.summands[k].second, config))
            report.failures.push_back("summand " + std::to_string(k + 1) + ": " + *failure);
    }
    report.ok = report.failures.empty();
    return report;
}

SplitResult split_by_witness(const Polynomial& f, const std::vector<IntVec>& witness,
                             const OracleConfig& config) {
    if (f.is_zero()) raise(ErrorKind::WitnessRejected, "the zero polynomial has no Newton polytope");
    if (f.divisible_by_any_variable())
        raise(ErrorKind::WitnessRejected, "input is divisible by a variable");
    std::set<IntVec> seen;
    for (const auto& w : witness) {
        if (!seen.insert(w).second) raise(ErrorKind::WitnessRejected, "duplicate witness point");
    }

    GoldbachConditionVerdict verdict = goldbach_condition_check(hull_vertices(f.support()), witness, config);
    if (!verdict.holds()) raise(ErrorKind::WitnessRejected, verdict.reason);

    Polynomial tail(f.field(), f.vars());
    for (const auto& w : witness) tail = tail + Polynomial::monomial(f.field(), f.vars(), w, 1);
    SplitResult result{f + tail, -tail, SummandCertificate::witness_split(witness)};

    // coefficient cancellation can shrink a Newton polytope below the verified
    // hull; re-validate both parts against the generic criterion
    if (auto failure = validate_certificate(result.f1, result.certificate, config))
        raise(ErrorKind::WitnessRejected, "f1 failed re-validation: " + *failure);
    if (auto failure = validate_certificate(result.f2, result.certificate, config))
        raise(ErrorKind::WitnessRejected, "f2 failed re-validation: " + *failure);
    return result;
}

LocalizedDecomposition localize_decompose(const Polynomial& H, const Polynomial& W) {
    if (!(H.field() == W.field())) raise(ErrorKind::FieldMismatch, "numerator and denominator fields differ");
    if (H.vars() != W.vars()) raise(ErrorKind::ArityMismatch, "numerator and denominator variables differ");
    if (W.term_count() != 1)
        raise(ErrorKind::DenominatorNotInSystem, "denominator is not a monomial");
    return LocalizedDecomposition{decompose(H, DecompositionMode::LocalizationSafe), W};
}

}  // namespace goldbach
