#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldbach/error.hpp"
#include "goldbach/forcing.hpp"
#include "goldbach/parse.hpp"
#include "support/expect_error.hpp"
#include "support/random_poly.hpp"

#include <random>

using namespace goldbach;

namespace {

const std::vector<std::string> V3{"x1", "x2", "x3"};
const std::vector<std::string> V4{"x1", "x2", "x3", "x4"};

Polynomial qq(const std::string& text, const std::vector<std::string>& vars) {
    return parse_polynomial(text, vars, FieldSpec::rationals());
}

}  // namespace

TEST_CASE("normal forms") {
    // relation x1 + x2 + x3 = 0, pivot x3
    ForcingData sum_zero =
        ForcingData::create(FieldSpec::rationals(), V3, {Rational(1), Rational(1), Rational(1)},
                            Rational(0), std::size_t{2});
    CHECK(forcing_normal_form(sum_zero, qq("x3", V3)).to_string() == "-x1 - x2");
    CHECK(forcing_normal_form(sum_zero, sum_zero.relation()).is_zero());

    // relation 2 x1 + x3 + 3 = 0, pivot defaults to the first nonzero coefficient
    ForcingData affine = ForcingData::create(FieldSpec::rationals(), V3,
                                             {Rational(2), Rational(0), Rational(1)}, Rational(3));
    CHECK(affine.pivot == 0);
    Polynomial image = forcing_normal_form(affine, qq("x1 + x2", V3));
    CHECK(image == parse_polynomial("x2 - 1/2*x3 - 3/2", {"x2", "x3"}, FieldSpec::rationals()));
}

TEST_CASE("construction guards") {
    using testsupport::thrown_kind;
    CHECK(thrown_kind([] {
              ForcingData::create(FieldSpec::rationals(), {"x"}, {Rational(1)}, Rational(0));
          }) == ErrorKind::UnsupportedArity);
    CHECK(thrown_kind([] {
              ForcingData::create(FieldSpec::rationals(), V3,
                                  {Rational(0), Rational(0), Rational(0)}, Rational(1));
          }) == ErrorKind::PivotCoefficientZero);
    CHECK(thrown_kind([] {
              ForcingData::create(FieldSpec::rationals(), V3,
                                  {Rational(1), Rational(0), Rational(1)}, Rational(0),
                                  std::size_t{1});
          }) == ErrorKind::PivotCoefficientZero);
    CHECK(thrown_kind([] {
              ForcingData::create(FieldSpec::rationals(), V3, {Rational(1), Rational(1)},
                                  Rational(0));
          }) == ErrorKind::ArityMismatch);
}

TEST_CASE("normal form is a congruence-respecting homomorphism") {
    std::mt19937_64 rng(8086);
    auto field = FieldSpec::rationals();
    ForcingData data = ForcingData::create(field, V3, {Rational(2), Rational(-1), Rational(3)},
                                           Rational(5));
    for (int trial = 0; trial < 80; ++trial) {
        Polynomial a = testsupport::random_polynomial(rng, field, V3, 4, 4);
        Polynomial b = testsupport::random_polynomial(rng, field, V3, 4, 4);
        CHECK(forcing_normal_form(data, a + b) ==
              forcing_normal_form(data, a) + forcing_normal_form(data, b));
        CHECK(forcing_normal_form(data, a * b) ==
              forcing_normal_form(data, a) * forcing_normal_form(data, b));
        // the relation ideal is the kernel
        CHECK(forcing_normal_form(data, data.relation() * a).is_zero());
        CHECK(forcing_normal_form(data, a + data.relation() * b) == forcing_normal_form(data, a));
    }
}

TEST_CASE("decomposition inside the algebra") {
    ForcingData data =
        ForcingData::create(FieldSpec::rationals(), V3, {Rational(1), Rational(1), Rational(1)},
                            Rational(0), std::size_t{0});

    // constants use the linear pair in the surviving variables
    ForcingDecomposition constant =
        decompose_in_forcing(data, qq("5", V3), DecompositionMode::UniformPyramid);
    REQUIRE(constant.decomposition.summands.size() == 2);
    CHECK(constant.decomposition.summands[0].first.to_string() == "x2 + 5");
    CHECK(constant.decomposition.summands[1].first.to_string() == "-x2");
    CHECK(constant.congruent);

    ForcingDecomposition generic =
        decompose_in_forcing(data, qq("x1^2*x2 + x3", V3), DecompositionMode::UniformPyramid);
    CHECK(generic.congruent);
    CHECK(certify(generic.decomposition).ok);

    ForcingData two_vars = ForcingData::create(FieldSpec::rationals(), {"x1", "x2"},
                                               {Rational(1), Rational(1)}, Rational(0));
    CHECK_THROWS_AS(
        decompose_in_forcing(two_vars, qq("x1", {"x1", "x2"}), DecompositionMode::UniformPyramid),
        Error);
    try {
        decompose_in_forcing(two_vars, qq("x1", {"x1", "x2"}), DecompositionMode::UniformPyramid);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedArity);
    }
}

TEST_CASE("random forcing data round trips") {
    std::mt19937_64 rng(31337);
    for (FieldSpec field : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::uniform_int_distribution<std::size_t> pick_n(3, 4);
            std::size_t n = pick_n(rng);
            const auto& vars = n == 3 ? V3 : V4;

            std::uniform_int_distribution<int> coeff(-4, 4);
            std::vector<Rational> coefficients(n);
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
            CHECK(r.congruent);
            CHECK(r.residual_normal_form.is_zero());
            CHECK(certify(r.decomposition).ok);
            CHECK(r.decomposition.summands.size() <=
                  2 * std::max<std::size_t>(forcing_normal_form(data, element).term_count(), 1));
        }
    }
}
