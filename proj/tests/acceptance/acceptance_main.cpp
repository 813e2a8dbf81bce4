// Acceptance suite: one timed pass/fail line per criterion, exit code equal
// to the number of failed criteria.

#include "goldbach/decompose.hpp"
#include "goldbach/error.hpp"
#include "goldbach/forcing.hpp"
#include "goldbach/localize.hpp"
#include "goldbach/oracle.hpp"
#include "goldbach/parse.hpp"
#include "goldbach/report.hpp"
#include "support/random_poly.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace goldbach;

namespace {

struct CheckFailure {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw CheckFailure{message};
}

struct Harness {
    int failures = 0;

    void run(int id, const std::string& label, double limit_seconds,
             const std::function<void()>& body) {
        auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            body();
        } catch (const CheckFailure& f) {
            failure = f.message;
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && elapsed > limit_seconds) failure = "time limit exceeded";
        if (failure.empty()) {
            std::printf("[PASS] criterion %2d: %s (%.3f s, limit %g s)\n", id, label.c_str(), elapsed,
                        limit_seconds);
        } else {
            std::printf("[FAIL] criterion %2d: %s (%.3f s, limit %g s) -- %s\n", id, label.c_str(),
                        elapsed, limit_seconds, failure.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
};

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

Polynomial qq(const std::string& text, const std::vector<std::string>& vars = XY) {
    return parse_polynomial(text, vars, FieldSpec::rationals());
}

IntVec v2(long long a, long long b) { return IntVec{Integer(a), Integer(b)}; }
IntVec v3(long long a, long long b, long long c) { return IntVec{Integer(a), Integer(b), Integer(c)}; }

void criterion_1_golden_session() {
    Decomposition d = decompose(qq("x*y + x + y + 1"), DecompositionMode::UniformPyramid);
    const std::vector<std::string> expected{"x*y^4 + x*y + 1", "-x*y^4 - 1", "x*y^2 + x + 1",
                                            "-x*y^2 - 1",      "x^2*y + y + 1", "-x^2*y - 1",
                                            "x + 1",           "-x"};
    require(d.summands.size() == 8, "expected exactly eight summands");
    for (std::size_t k = 0; k < 8; ++k)
        require(d.summands[k].first.to_string() == expected[k],
                "summand " + std::to_string(k + 1) + " is " + d.summands[k].first.to_string() +
                    ", expected " + expected[k]);
    const std::vector<IntVec> expected_w{v2(1, 4), v2(1, 2), v2(2, 1), v2(1, 0)};
    require(d.w_choices.size() == 4, "expected four companion points");
    for (std::size_t k = 0; k < 4; ++k)
        require(d.w_choices[k].w == expected_w[k], "companion point " + std::to_string(k + 1));
    require(d.sum() == d.input, "re-sum");
    require(certify(d).ok, "certificates");
}

Decomposition printed_example_2() {
    Polynomial g = qq("2*x^2 + 3*y^2 - 7*z^2 + 5", XYZ);
    Decomposition d{g, DecompositionMode::UniformPyramid, {}, {}};
    auto add = [&](const std::string& text, SummandCertificate cert) {
        d.summands.emplace_back(qq(text, XYZ), std::move(cert));
    };
    add("x^4*y^4*z^5 + 2*x^2 + 1", SummandCertificate::pyramid(v3(2, 0, 0), v3(4, 4, 5)));
    add("-x^4*y^4*z^5 - 1", SummandCertificate::segment(v3(4, 4, 5)));
    add("x^4*y^4*z^5 + 3*y^2 + 1", SummandCertificate::pyramid(v3(0, 2, 0), v3(4, 4, 5)));
    add("-x^4*y^4*z^5 - 1", SummandCertificate::segment(v3(4, 4, 5)));
    add("x^4*y^5*z^4 - 7*z^2 + 1", SummandCertificate::pyramid(v3(0, 0, 2), v3(4, 5, 4)));
    add("-x^4*y^5*z^4 - 1", SummandCertificate::segment(v3(4, 5, 4)));
    add("x + 5", SummandCertificate::linear());
    add("-x", SummandCertificate::linear());
    return d;
}

Decomposition printed_example_3() {
    Polynomial f = qq("x^3 + 3*x^2*y - 4*y^3 + 6*z^3", XYZ);
    Decomposition d{f, DecompositionMode::UniformPyramid, {}, {}};
    auto add = [&](const std::string& text, SummandCertificate cert) {
        d.summands.emplace_back(qq(text, XYZ), std::move(cert));
    };
    add("x^6*y^5*z^6 + x^3 + 1", SummandCertificate::pyramid(v3(3, 0, 0), v3(6, 5, 6)));
    add("-x^6*y^5*z^6 - 1", SummandCertificate::segment(v3(6, 5, 6)));
    add("x^4*y^4*z^5 + 3*x^2*y + 1", SummandCertificate::pyramid(v3(2, 1, 0), v3(4, 4, 5)));
    add("-x^4*y^4*z^5 - 1", SummandCertificate::segment(v3(4, 4, 5)));
    add("x^5*y^6*z^6 - 4*y^3 + 1", SummandCertificate::pyramid(v3(0, 3, 0), v3(5, 6, 6)));
    add("-x^5*y^6*z^6 - 1", SummandCertificate::segment(v3(5, 6, 6)));
    add("x^5*y^6*z^6 + 6*z^3 + 1", SummandCertificate::pyramid(v3(0, 0, 3), v3(5, 6, 6)));
    add("-x^5*y^6*z^6 - 1", SummandCertificate::segment(v3(5, 6, 6)));
    return d;
}

void criterion_2_printed_examples() {
    for (Decomposition d : {printed_example_2(), printed_example_3()}) {
        CertifyReport report = certify(d);
        std::string detail = report.failures.empty() ? "" : (": " + report.failures.front());
        require(report.ok, "printed summand list failed certification" + detail);
    }
    for (const char* text : {"2*x^2 + 3*y^2 - 7*z^2 + 5", "x^3 + 3*x^2*y - 4*y^3 + 6*z^3"}) {
        Polynomial input = qq(text, XYZ);
        Decomposition own = decompose(input, DecompositionMode::UniformPyramid);
        require(own.summands.size() <= 2 * input.term_count(), "own decomposition exceeds 2r");
        require(certify(own).ok, "own decomposition failed certification");
    }
}

void criterion_3_random_suite() {
    std::mt19937_64 rng(112358);
    const std::vector<DecompositionMode> modes{DecompositionMode::Shortcut,
                                               DecompositionMode::UniformPyramid,
                                               DecompositionMode::LocalizationSafe};
    int done = 0;
    for (FieldSpec field : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        for (int trial = 0; trial < 250; ++trial) {
            std::uniform_int_distribution<std::size_t> nvars(2, 4);
            auto vars = testsupport::var_names(nvars(rng));
            Polynomial H = testsupport::random_polynomial(rng, field, vars, 6, 8);
            for (auto mode : modes) {
                Decomposition d = decompose(H, mode);
                require(d.sum() == H, "re-sum mismatch");
                require(d.summands.size() <= 2 * std::max<std::size_t>(H.term_count(), 1),
                        "2r bound violated");
                require(certify(d).ok, "certificate failed");
                require(decomposition_to_json(d) == decomposition_to_json(decompose(H, mode)),
                        "nondeterministic output");
            }
            ++done;
        }
    }
    require(done == 500, "expected 500 random polynomials");
}

void criterion_4_criteria_vs_oracle() {
    for (int a = 0; a <= 10; ++a) {
        for (int b = 0; b <= 10; ++b) {
            if (a == 0 && b == 0) continue;
            bool criterion = segment_indecomposable(v2(0, 0), v2(a, b));
            auto verdict = polygon_summands_2d(hull_vertices({v2(0, 0), v2(a, b)}));
            require(!verdict.unknown(), "oracle undecided on a segment");
            require(criterion == verdict.indecomposable(),
                    "segment disagreement at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    for (int ux = 0; ux <= 6; ++ux)
        for (int uy = 0; uy <= 6; ++uy)
            for (int vx = 0; vx <= 6; ++vx)
                for (int vy = 0; vy <= 6; ++vy) {
                    Integer cross = Integer(ux) * vy - Integer(uy) * vx;
                    if (cross == 0) continue;
                    bool criterion = pyramid_indecomposable({v2(ux, uy), v2(vx, vy)}, v2(0, 0));
                    auto verdict =
                        polygon_summands_2d(hull_vertices({v2(0, 0), v2(ux, uy), v2(vx, vy)}));
                    require(!verdict.unknown(), "oracle undecided on a triangle");
                    require(criterion == verdict.indecomposable(),
                            "triangle disagreement at u=(" + std::to_string(ux) + "," +
                                std::to_string(uy) + ") v=(" + std::to_string(vx) + "," +
                                std::to_string(vy) + ")");
                }
}

void criterion_5_f2_sharpness() {
    Polynomial target = parse_polynomial("x^2 + x", {"x"}, FieldSpec::prime_field(2));
    require(!check_sum_of_irreducibles(target, 2, 2).has_value(),
            "x^2+x decomposed into two small irreducibles");
    auto witness = check_sum_of_irreducibles(target, 3, 2);
    require(witness.has_value(), "three-term witness not found");
    Polynomial total(target.field(), target.vars());
    std::vector<std::string> names;
    for (const auto& p : *witness) {
        total = total + p;
        names.push_back(p.to_string());
    }
    std::sort(names.begin(), names.end());
    require(total == target, "witness does not sum to the target");
    require(names == std::vector<std::string>{"x", "x + 1", "x^2 + x + 1"},
            "witness differs from {x^2+x+1, x+1, x}");
}

void criterion_6_oracle_soundness() {
    std::mt19937_64 rng(424242);
    int checked = 0;
    int inputs = 0;
    for (FieldSpec field : {FieldSpec::prime_field(2), FieldSpec::prime_field(3)}) {
        for (int trial = 0; trial < 50; ++trial) {
            Polynomial H = testsupport::random_polynomial(rng, field, XY, 4, 6);
            ++inputs;
            Decomposition d = decompose(H, DecompositionMode::UniformPyramid);
            for (const auto& [poly, cert] : d.summands) {
                if (poly.total_degree() < 1 || poly.total_degree() > 4) continue;
                require(is_irreducible_bruteforce(poly),
                        "reducible summand " + poly.to_string() + " over " + field.name());
                ++checked;
            }
        }
    }
    require(inputs >= 100, "fewer than 100 inputs");
    require(checked >= 100, "fewer than 100 summands within the degree window");
}

void criterion_7_quotient_identity() {
    for (unsigned p = 1; p <= 3; ++p)
        for (unsigned i = 1; i <= 3; ++i)
            require(verify_quotient_identity(p, i),
                    "identity failed at p=" + std::to_string(p) + " i=" + std::to_string(i));
}

void criterion_8_density() {
    auto S2 = MultiplicativeSet::from_generators({2});
    DenseApprox worked = dense_approx(S2, Rational(3), Rational(7) / 2);
    require(worked.value == Rational(27) / 8, "worked value is not 27/8");
    require(worked.p == 3 && worked.e == 3 && worked.n == 10, "worked parameters differ");

    std::mt19937_64 rng(271828);
    std::uniform_int_distribution<long long> num(-1000000, 1000000);
    std::uniform_int_distribution<long long> den(1000, 2000);
    std::uniform_int_distribution<int> which(0, 2);
    const std::vector<MultiplicativeSet> sets{MultiplicativeSet::from_generators({2}),
                                              MultiplicativeSet::from_generators({3}),
                                              MultiplicativeSet::from_generators({2, 5})};
    for (int trial = 0; trial < 1000; ++trial) {
        Rational a = Rational(num(rng)) / den(rng);
        Rational b = Rational(num(rng)) / den(rng);
        if (a > b) std::swap(a, b);
        if (b - a < Rational(1) / 1000000) b = a + Rational(1) / 1000000;
        DenseApprox hit = dense_approx(sets[which(rng)], a, b);
        require(a < hit.value && hit.value < b, "value not strictly inside the interval");
        require(hit.value == Rational(hit.summand_count()) * hit.summand,
                "value is not the stated repetition of one localized prime");
    }
}

void criterion_9_prime_series() {
    std::mt19937_64 rng(141421);
    std::uniform_int_distribution<long long> num(-99999, 99999);
    std::uniform_int_distribution<long long> den(10000, 20000);
    const Rational tolerance = Rational(1) / 1000000;
    const std::uint64_t qs[] = {2, 3, 5};
    for (int trial = 0; trial < 100; ++trial) {
        Rational x = Rational(num(rng)) / den(rng);  // lands in (-10, 10)
        std::uint64_t q = qs[trial % 3];
        PrimeSeries series = greedy_prime_series(x, q, tolerance, 64);
        require(series.tolerance_reached, "tolerance not reached within 64 terms");
        require(rational_abs(series.remainder) < tolerance, "remainder above tolerance");
        for (std::size_t j = 0; j < series.terms.size(); ++j) {
            Integer abs_p = series.terms[j].p < 0 ? Integer(-series.terms[j].p) : series.terms[j].p;
            require(abs_p != q, "series used the base prime");
            if (j > 0)
                require(series.terms[j].exponent > series.terms[j - 1].exponent,
                        "exponents not strictly increasing");
        }
    }
}

void criterion_10_forcing() {
    std::mt19937_64 rng(173205);
    const std::vector<std::string> V3{"x1", "x2", "x3"};
    const std::vector<std::string> V4{"x1", "x2", "x3", "x4"};
    for (FieldSpec field : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        for (int trial = 0; trial < 50; ++trial) {
            std::uniform_int_distribution<std::size_t> pick_n(3, 4);
            const auto& vars = pick_n(rng) == 3 ? V3 : V4;
            std::uniform_int_distribution<int> coeff(-4, 4);
            std::vector<Rational> coefficients(vars.size());
            bool any = false;
            for (auto& c : coefficients) {
                c = Rational(coeff(rng));
                any = any || !field.is_zero(field.canonical(c));
            }
            if (!any) coefficients[0] = 1;
            ForcingData data = ForcingData::create(field, vars, coefficients, Rational(coeff(rng)));
            Polynomial element = testsupport::random_polynomial(rng, field, vars, 4, 5);
            ForcingDecomposition r =
                decompose_in_forcing(data, element, DecompositionMode::UniformPyramid);
            require(r.congruent, "sum not congruent to the element");
            require(r.residual_normal_form.is_zero(), "nonzero residual normal form");
            require(certify(r.decomposition).ok, "forcing decomposition failed certification");
        }
    }
    ForcingData two_vars = ForcingData::create(FieldSpec::rationals(), {"x1", "x2"},
                                               {Rational(1), Rational(1)}, Rational(0));
    bool rejected = false;
    try {
        decompose_in_forcing(two_vars,
                             parse_polynomial("x1", {"x1", "x2"}, FieldSpec::rationals()),
                             DecompositionMode::UniformPyramid);
    } catch (const Error& e) {
        rejected = e.kind() == ErrorKind::UnsupportedArity;
    }
    require(rejected, "two-variable forcing data was not rejected with UnsupportedArity");
}

}  // namespace

int main() {
    Harness harness;
    harness.run(1, "golden two-variable session reproduced exactly", 1.0, criterion_1_golden_session);
    harness.run(2, "printed three-variable summand lists certify; own runs stay within 2r", 2.0,
                criterion_2_printed_examples);
    harness.run(3, "500 random polynomials: re-sum, 2r bound, certificates, determinism", 60.0,
                criterion_3_random_suite);
    harness.run(4, "segment/pyramid criteria agree with the exhaustive 2-D oracle", 120.0,
                criterion_4_criteria_vs_oracle);
    harness.run(5, "F2[x] sharpness: x^2+x needs three small irreducibles", 10.0,
                criterion_5_f2_sharpness);
    harness.run(6, "pyramid summands over F2/F3 survive the brute-force referee", 120.0,
                criterion_6_oracle_soundness);
    harness.run(7, "quotient-ring reduction identity for p,i in {1,2,3}", 5.0,
                criterion_7_quotient_identity);
    harness.run(8, "density construction hits 1000 random intervals strictly inside", 10.0,
                criterion_8_density);
    harness.run(9, "greedy prime series reach 1e-6 within 64 terms", 30.0, criterion_9_prime_series);
    harness.run(10, "forcing decompositions are congruent; two variables rejected", 30.0,
                criterion_10_forcing);
    if (harness.failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", harness.failures);
    return harness.failures;
}
