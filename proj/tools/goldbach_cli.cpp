// Command-line front end: constructive decomposition into certified
// absolutely irreducible summands, polytope criteria, brute-force
// irreducibility oracles, and the localization constructions.

#include "goldbach/decompose.hpp"
#include "goldbach/error.hpp"
#include "goldbach/forcing.hpp"
#include "goldbach/localize.hpp"
#include "goldbach/oracle.hpp"
#include "goldbach/parse.hpp"
#include "goldbach/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace goldbach;

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> names;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (!part.empty()) names.push_back(part);
    }
    if (names.empty()) raise(ErrorKind::InvalidArgument, "empty name list");
    return names;
}

std::vector<std::uint64_t> split_u64(const std::string& text) {
    std::vector<std::uint64_t> values;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) values.push_back(std::stoull(part));
    return values;
}

std::vector<Rational> split_rationals(const std::string& text) {
    std::vector<Rational> values;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) values.push_back(rational_from_string(part));
    return values;
}

Polynomial read_poly(const std::string& text, const std::string& vars, const std::string& field) {
    return parse_polynomial(text, split_names(vars), FieldSpec::from_name(field));
}

std::string read_document(const std::string& path) {
    std::ostringstream buffer;
    if (path.empty() || path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) raise(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
        buffer << in.rdbuf();
    }
    return buffer.str();
}

void print_verdict(const DecomposabilityVerdict& verdict) {
    switch (verdict.status) {
        case DecomposabilityVerdict::Status::Indecomposable:
            std::cout << "indecomposable (" << verdict.reason << ")\n";
            break;
        case DecomposabilityVerdict::Status::Decomposable:
            std::cout << "decomposable (" << verdict.reason << ")\n";
            if (verdict.witness) {
                std::cout << "summand A:\n" << format_point_matrix(verdict.witness->part_a);
                std::cout << "summand B:\n" << format_point_matrix(verdict.witness->part_b);
            }
            break;
        case DecomposabilityVerdict::Status::Unknown:
            std::cout << "unknown (" << verdict.reason << ")\n";
            break;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"goldbach: certified additive decompositions of multivariate polynomials"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed,
                   "seed for randomized operations (reserved; the current commands are deterministic)");

    int exit_code = 0;

    // ---- decompose ----
    {
        auto* cmd = app.add_subcommand("decompose", "split a polynomial into certified summands");
        auto poly = std::make_shared<std::string>();
        auto vars = std::make_shared<std::string>();
        auto field = std::make_shared<std::string>("QQ");
        auto mode = std::make_shared<std::string>("pyramid");
        auto denominator = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("--poly", *poly, "polynomial expression")->required();
        cmd->add_option("--vars", *vars, "comma-separated variable names")->required();
        cmd->add_option("--field", *field, "QQ or F<p>");
        cmd->add_option("--mode", *mode, "shortcut | pyramid | localization");
        cmd->add_option("--denominator", *denominator,
                        "monomial denominator: decompose poly/denominator in the monomial localization");
        cmd->add_flag("--json", *as_json, "machine-readable output");
        cmd->callback([=]() {
            Polynomial H = read_poly(*poly, *vars, *field);
            if (!denominator->empty()) {
                Polynomial W = read_poly(*denominator, *vars, *field);
                LocalizedDecomposition d = localize_decompose(H, W);
                std::cout << (*as_json ? localized_to_json(d) + "\n" : localized_report(d));
                return;
            }
            Decomposition d = decompose(H, mode_from_name(*mode));
            std::cout << (*as_json ? decomposition_to_json(d) + "\n" : session_report(d));
        });
    }

    // ---- certify ----
    {
        auto* cmd = app.add_subcommand("certify", "re-verify a decomposition document");
        auto path = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("--file", *path, "document path (default: stdin)");
        cmd->add_flag("--json", *as_json, "machine-readable output");
        cmd->callback([=, &exit_code]() {
            Decomposition d = decomposition_from_json(read_document(*path));
            CertifyReport report = certify(d);
            if (*as_json) {
                std::cout << certify_report_to_json(report) << "\n";
            } else if (report.ok) {
                std::cout << "ok: sum, bound, and all certificates verified\n";
            } else {
                std::cout << "FAILED:\n";
                for (const auto& f : report.failures) std::cout << "  - " << f << "\n";
            }
            if (!report.ok) exit_code = 1;
        });
    }

    // ---- polytope ----
    {
        auto* cmd = app.add_subcommand("polytope", "polytope criteria and the 2-D oracle");
        cmd->require_subcommand(1);

        auto* hull = cmd->add_subcommand("hull", "convex-hull vertices of integral points");
        auto hull_points = std::make_shared<std::string>();
        hull->add_option("--points", *hull_points, "points as 'a,b;c,d;...'")->required();
        hull->callback([=]() {
            std::cout << format_point_matrix(hull_vertices(parse_point_list(*hull_points)).vertices);
        });

        auto* seg = cmd->add_subcommand("segment", "segment indecomposability (gcd criterion)");
        auto seg_a = std::make_shared<std::string>();
        auto seg_b = std::make_shared<std::string>();
        seg->add_option("--a", *seg_a, "first endpoint 'a,b'")->required();
        seg->add_option("--b", *seg_b, "second endpoint")->required();
        seg->callback([=]() {
            bool r = segment_indecomposable(parse_point_list(*seg_a).front(),
                                            parse_point_list(*seg_b).front());
            std::cout << (r ? "indecomposable\n" : "decomposable\n");
        });

        auto* pyr = cmd->add_subcommand("pyramid", "pyramid indecomposability (gcd criterion)");
        auto pyr_base = std::make_shared<std::string>();
        auto pyr_apex = std::make_shared<std::string>();
        pyr->add_option("--base", *pyr_base, "base points 'a,b;c,d;...'")->required();
        pyr->add_option("--apex", *pyr_apex, "apex point")->required();
        pyr->callback([=]() {
            bool r = pyramid_indecomposable(parse_point_list(*pyr_base),
                                            parse_point_list(*pyr_apex).front());
            std::cout << (r ? "indecomposable\n" : "decomposable\n");
        });

        auto* oracle2d = cmd->add_subcommand("oracle", "exhaustive 2-D Minkowski summand search");
        auto oracle_points = std::make_shared<std::string>();
        oracle2d->add_option("--points", *oracle_points, "points as 'a,b;c,d;...'")->required();
        oracle2d->callback([=]() {
            print_verdict(polygon_summands_2d(hull_vertices(parse_point_list(*oracle_points))));
        });

        auto* cond = cmd->add_subcommand("goldbach", "verify a Goldbach-condition witness");
        auto cond_points = std::make_shared<std::string>();
        auto cond_witness = std::make_shared<std::string>();
        cond->add_option("--points", *cond_points, "polytope points")->required();
        cond->add_option("--witness", *cond_witness, "witness points")->required();
        cond->callback([=, &exit_code]() {
            auto verdict = goldbach_condition_check(hull_vertices(parse_point_list(*cond_points)),
                                                    parse_point_list(*cond_witness));
            switch (verdict.status) {
                case GoldbachConditionVerdict::Status::Holds: std::cout << "holds\n"; break;
                case GoldbachConditionVerdict::Status::Fails:
                    std::cout << "fails: " << verdict.reason << "\n";
                    exit_code = 1;
                    break;
                case GoldbachConditionVerdict::Status::Unknown:
                    std::cout << "unknown: " << verdict.reason << "\n";
                    exit_code = 1;
                    break;
            }
        });
    }

    // ---- witness-split ----
    {
        auto* cmd = app.add_subcommand("witness-split", "two-summand split through a verified witness");
        auto poly = std::make_shared<std::string>();
        auto vars = std::make_shared<std::string>();
        auto field = std::make_shared<std::string>("QQ");
        auto witness = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("--poly", *poly)->required();
        cmd->add_option("--vars", *vars)->required();
        cmd->add_option("--field", *field);
        cmd->add_option("--witness", *witness, "witness points 'a,b;c,d'")->required();
        cmd->add_flag("--json", *as_json);
        cmd->callback([=]() {
            Polynomial f = read_poly(*poly, *vars, *field);
            SplitResult r = split_by_witness(f, parse_point_list(*witness));
            if (*as_json) {
                Decomposition d{f, DecompositionMode::UniformPyramid, {}, {}};
                d.summands.emplace_back(r.f1, r.certificate);
                d.summands.emplace_back(r.f2, r.certificate);
                std::cout << decomposition_to_json(d) << "\n";
            } else {
                std::cout << "f1 = " << r.f1.to_string() << "\n";
                std::cout << "f2 = " << r.f2.to_string() << "\n";
            }
        });
    }

    // ---- oracle ----
    {
        auto* cmd = app.add_subcommand("oracle", "exhaustive irreducibility referees over F_p");
        cmd->require_subcommand(1);

        auto* irred = cmd->add_subcommand("irred", "brute-force irreducibility by trial division");
        auto i_poly = std::make_shared<std::string>();
        auto i_vars = std::make_shared<std::string>();
        auto i_field = std::make_shared<std::string>();
        irred->add_option("--poly", *i_poly)->required();
        irred->add_option("--vars", *i_vars)->required();
        irred->add_option("--field", *i_field, "F<p>")->required();
        irred->callback([=]() {
            bool r = is_irreducible_bruteforce(read_poly(*i_poly, *i_vars, *i_field));
            std::cout << (r ? "irreducible\n" : "reducible\n");
        });

        auto* sum = cmd->add_subcommand("sum", "search sums of k irreducibles matching a target");
        auto s_target = std::make_shared<std::string>();
        auto s_vars = std::make_shared<std::string>("x");
        auto s_field = std::make_shared<std::string>();
        auto s_k = std::make_shared<std::size_t>(2);
        auto s_deg = std::make_shared<unsigned>(2);
        sum->add_option("--target", *s_target)->required();
        sum->add_option("--vars", *s_vars);
        sum->add_option("--field", *s_field, "F<p>")->required();
        sum->add_option("--k", *s_k, "number of summands");
        sum->add_option("--deg", *s_deg, "total-degree bound for candidates");
        sum->callback([=]() {
            auto witness = check_sum_of_irreducibles(read_poly(*s_target, *s_vars, *s_field), *s_k, *s_deg);
            if (!witness) {
                std::cout << "None\n";
                return;
            }
            std::cout << "{";
            for (std::size_t j = 0; j < witness->size(); ++j) {
                if (j) std::cout << ", ";
                std::cout << (*witness)[j].to_string();
            }
            std::cout << "}\n";
        });

        auto* quot = cmd->add_subcommand("quotient", "verify the quotient-ring reduction identity");
        auto q_p = std::make_shared<unsigned>(1);
        auto q_i = std::make_shared<unsigned>(1);
        quot->add_option("--p", *q_p)->required();
        quot->add_option("--i", *q_i)->required();
        quot->callback([=]() {
            std::cout << (verify_quotient_identity(*q_p, *q_i) ? "true\n" : "false\n");
        });

        auto* ext = cmd->add_subcommand("extension",
                                        "evidence-grade irreducibility over F_{p^k} (k = 2 or 3)");
        auto e_poly = std::make_shared<std::string>();
        auto e_vars = std::make_shared<std::string>();
        auto e_field = std::make_shared<std::string>();
        auto e_k = std::make_shared<unsigned>(2);
        ext->add_option("--poly", *e_poly)->required();
        ext->add_option("--vars", *e_vars)->required();
        ext->add_option("--field", *e_field, "F<p>")->required();
        ext->add_option("--k", *e_k, "extension degree (2 or 3)");
        ext->callback([=]() {
            bool r = is_irreducible_over_extension(read_poly(*e_poly, *e_vars, *e_field), *e_k);
            std::cout << (r ? "irreducible over the extension (evidence only)\n"
                            : "reducible over the extension\n");
        });
    }

    // ---- localize ----
    {
        auto* cmd = app.add_subcommand("localize", "prime sums in localizations of the integers");
        cmd->require_subcommand(1);

        auto* approx = cmd->add_subcommand("approx", "interval hit by a finite sum of one localized prime");
        auto a_gens = std::make_shared<std::string>();
        auto a_interval = std::make_shared<std::vector<std::string>>();
        auto a_decimals = std::make_shared<int>(-1);
        approx->add_option("--gens", *a_gens, "prime generators of S, e.g. '2' or '2,5'")->required();
        approx->add_option("--interval", *a_interval, "interval endpoints x0 y0 (rationals)")
            ->expected(2)
            ->required();
        approx->add_option("--decimals", *a_decimals, "also print a decimal approximation");
        approx->callback([=]() {
            auto S = MultiplicativeSet::from_generators(split_u64(*a_gens));
            DenseApprox r = dense_approx(S, rational_from_string((*a_interval)[0]),
                                         rational_from_string((*a_interval)[1]));
            std::cout << rational_to_string(r.value) << "\n";
            std::cout << "p = " << r.p.str() << "  e = " << r.e << "  n = " << r.n.str()
                      << "  summand = " << rational_to_string(r.summand) << "  count = "
                      << r.summand_count().str() << "\n";
            if (*a_decimals >= 0)
                std::cout << "decimal = "
                          << rational_to_decimal(r.value, static_cast<unsigned>(*a_decimals)) << "\n";
        });

        auto* series = cmd->add_subcommand("series", "greedy prime-power series expansion");
        auto s_x = std::make_shared<std::string>();
        auto s_q = std::make_shared<std::uint64_t>(2);
        auto s_tol = std::make_shared<std::string>("1/1000000");
        auto s_max = std::make_shared<std::size_t>(64);
        auto s_decimals = std::make_shared<int>(-1);
        series->add_option("--x", *s_x, "target rational")->required();
        series->add_option("--q", *s_q, "base prime")->required();
        series->add_option("--tol", *s_tol, "tolerance (rational)");
        series->add_option("--max-terms", *s_max);
        series->add_option("--decimals", *s_decimals, "print partial sums as decimals too");
        series->callback([=, &exit_code]() {
            PrimeSeries r = greedy_prime_series(rational_from_string(*s_x), *s_q,
                                                rational_from_string(*s_tol), *s_max);
            for (const auto& t : r.terms) {
                std::cout << t.p.str() << " " << r.q << " " << t.exponent << " "
                          << rational_to_string(t.partial_sum);
                if (*s_decimals >= 0)
                    std::cout << " "
                              << rational_to_decimal(t.partial_sum, static_cast<unsigned>(*s_decimals));
                std::cout << "\n";
            }
            std::cout << "remainder = " << rational_to_string(r.remainder)
                      << (r.tolerance_reached ? "" : "  [tolerance not reached]") << "\n";
            if (!r.tolerance_reached) exit_code = 1;
        });

        auto* rescale = cmd->add_subcommand("rescale", "fold s^m into a sum-of-primes representation");
        auto r_terms = std::make_shared<std::string>();
        auto r_gens = std::make_shared<std::string>();
        auto r_s = std::make_shared<std::string>();
        auto r_m = std::make_shared<unsigned>(1);
        auto r_dir = std::make_shared<std::string>("multiply");
        rescale->add_option("--terms", *r_terms, "terms 's_num,p,s_den;...'")->required();
        rescale->add_option("--gens", *r_gens, "prime generators of S")->required();
        rescale->add_option("--s", *r_s, "member of S")->required();
        rescale->add_option("--m", *r_m, "power");
        rescale->add_option("--dir", *r_dir, "multiply | divide");
        rescale->callback([=]() {
            auto S = MultiplicativeSet::from_generators(split_u64(*r_gens));
            std::vector<ScaledPrimeTerm> terms;
            for (const auto& point : parse_point_list(*r_terms)) {
                if (point.size() != 3)
                    raise(ErrorKind::InvalidArgument, "each term needs exactly s_num,p,s_den");
                terms.push_back(ScaledPrimeTerm{point[0], point[1], point[2]});
            }
            RescaleDirection dir;
            if (*r_dir == "multiply")
                dir = RescaleDirection::Multiply;
            else if (*r_dir == "divide")
                dir = RescaleDirection::Divide;
            else
                raise(ErrorKind::InvalidArgument, "--dir must be multiply or divide");
            Rational before = scaled_terms_value(terms);
            auto rescaled = rescale_representation(terms, S, Integer(*r_s), *r_m, dir);
            for (const auto& t : rescaled)
                std::cout << t.s_num.str() << "," << t.p.str() << "," << t.s_den.str() << "\n";
            std::cout << "value: " << rational_to_string(before) << " -> "
                      << rational_to_string(scaled_terms_value(rescaled)) << "\n";
        });
    }

    // ---- forcing ----
    {
        auto* cmd = app.add_subcommand("forcing", "linear forcing algebras");
        cmd->require_subcommand(1);

        auto make_data = [](const std::string& field_name, const std::string& vars_text,
                            const std::string& coeffs_text, const std::string& constant_text,
                            int pivot_1based) {
            FieldSpec field = FieldSpec::from_name(field_name);
            auto vars = split_names(vars_text);
            auto coeffs = split_rationals(coeffs_text);
            std::optional<std::size_t> pivot;
            if (pivot_1based > 0) pivot = static_cast<std::size_t>(pivot_1based - 1);
            return ForcingData::create(field, vars, coeffs, rational_from_string(constant_text), pivot);
        };

        auto* nf = cmd->add_subcommand("normal-form", "canonical representative modulo the relation");
        auto n_vars = std::make_shared<std::string>();
        auto n_field = std::make_shared<std::string>("QQ");
        auto n_coeffs = std::make_shared<std::string>();
        auto n_const = std::make_shared<std::string>("0");
        auto n_pivot = std::make_shared<int>(0);
        auto n_element = std::make_shared<std::string>();
        nf->add_option("--vars", *n_vars)->required();
        nf->add_option("--field", *n_field);
        nf->add_option("--coeffs", *n_coeffs, "relation coefficients f_1,...,f_n")->required();
        nf->add_option("--constant", *n_const, "relation constant f");
        nf->add_option("--pivot", *n_pivot, "1-based pivot override (default: first nonzero)");
        nf->add_option("--element", *n_element)->required();
        nf->callback([=]() {
            ForcingData data = make_data(*n_field, *n_vars, *n_coeffs, *n_const, *n_pivot);
            Polynomial element = parse_polynomial(*n_element, data.vars, data.field);
            Polynomial reduced = forcing_normal_form(data, element);
            std::cout << reduced.to_string() << "\n";
        });

        auto* dec = cmd->add_subcommand("decompose", "certified decomposition inside the algebra");
        auto d_vars = std::make_shared<std::string>();
        auto d_field = std::make_shared<std::string>("QQ");
        auto d_coeffs = std::make_shared<std::string>();
        auto d_const = std::make_shared<std::string>("0");
        auto d_pivot = std::make_shared<int>(0);
        auto d_element = std::make_shared<std::string>();
        auto d_mode = std::make_shared<std::string>("pyramid");
        auto d_json = std::make_shared<bool>(false);
        dec->add_option("--vars", *d_vars)->required();
        dec->add_option("--field", *d_field);
        dec->add_option("--coeffs", *d_coeffs)->required();
        dec->add_option("--constant", *d_const);
        dec->add_option("--pivot", *d_pivot);
        dec->add_option("--element", *d_element)->required();
        dec->add_option("--mode", *d_mode);
        dec->add_flag("--json", *d_json);
        dec->callback([=, &exit_code]() {
            ForcingData data = make_data(*d_field, *d_vars, *d_coeffs, *d_const, *d_pivot);
            Polynomial element = parse_polynomial(*d_element, data.vars, data.field);
            ForcingDecomposition r = decompose_in_forcing(data, element, mode_from_name(*d_mode));
            if (*d_json) {
                std::cout << decomposition_to_json(r.decomposition) << "\n";
            } else {
                std::cout << session_report(r.decomposition);
                std::cout << "\ncongruence modulo the relation: " << (r.congruent ? "verified" : "FAILED")
                          << "\n";
            }
            if (!r.congruent) exit_code = 1;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit cleanly, usage errors exit 2
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
