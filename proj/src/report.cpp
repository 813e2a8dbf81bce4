#include "goldbach/report.hpp"

#include "goldbach/error.hpp"
#include "goldbach/parse.hpp"

#include <json.hpp>

#include <sstream>

namespace goldbach {

namespace {

using nlohmann::json;

std::string monomial_text(const Polynomial& reference, const IntVec& exponent) {
    return Polynomial::monomial(reference.field(), reference.vars(), exponent, 1).to_string();
}

std::string poly_list(const std::vector<std::string>& entries) {
    std::string out = "{";
    for (std::size_t j = 0; j < entries.size(); ++j) {
        if (j) out += ", ";
        out += entries[j];
    }
    return out + "}";
}

json vec_to_json(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

IntVec vec_from_json(const json& a) {
    IntVec v;
    for (const auto& x : a) v.push_back(Integer(x.get<std::string>()));
    return v;
}

json certificate_to_json(const SummandCertificate& cert) {
    json c;
    c["type"] = certificate_kind_name(cert.kind);
    switch (cert.kind) {
        case SummandCertificate::Kind::SegmentGcd: c["endpoint"] = vec_to_json(cert.endpoint); break;
        case SummandCertificate::Kind::PyramidGcd:
            c["i"] = vec_to_json(cert.pyramid_i);
            c["w"] = vec_to_json(cert.pyramid_w);
            break;
        case SummandCertificate::Kind::Linear: break;
        case SummandCertificate::Kind::WitnessSplit: {
            json w = json::array();
            for (const auto& point : cert.witness) w.push_back(vec_to_json(point));
            c["witness"] = w;
            break;
        }
    }
    return c;
}

SummandCertificate certificate_from_json(const json& c) {
    const std::string type = c.at("type").get<std::string>();
    if (type == "segment-gcd") return SummandCertificate::segment(vec_from_json(c.at("endpoint")));
    if (type == "pyramid-gcd")
        return SummandCertificate::pyramid(vec_from_json(c.at("i")), vec_from_json(c.at("w")));
    if (type == "linear") return SummandCertificate::linear();
    if (type == "witness-split") {
        std::vector<IntVec> witness;
        for (const auto& point : c.at("witness")) witness.push_back(vec_from_json(point));
        return SummandCertificate::witness_split(std::move(witness));
    }
    raise(ErrorKind::InvalidArgument, "unknown certificate type '" + type + "'");
}

std::string certificate_summary(const Polynomial& reference, const SummandCertificate& cert) {
    auto vec_text = [](const IntVec& v) {
        std::string s = "(";
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (j) s += ",";
            s += v[j].str();
        }
        return s + ")";
    };
    (void)reference;
    switch (cert.kind) {
        case SummandCertificate::Kind::SegmentGcd: return "segment-gcd " + vec_text(cert.endpoint);
        case SummandCertificate::Kind::PyramidGcd:
            return "pyramid-gcd i=" + vec_text(cert.pyramid_i) + " w=" + vec_text(cert.pyramid_w);
        case SummandCertificate::Kind::Linear: return "linear";
        case SummandCertificate::Kind::WitnessSplit: {
            std::string s = "witness-split";
            for (const auto& p : cert.witness) s += " " + vec_text(p);
            return s;
        }
    }
    return "?";
}

}  // namespace

std::string session_report(const Decomposition& d) {
    std::ostringstream out;
    out << "input:\n" << d.input.to_string() << "\n\n";
    out << "ring: " << d.input.field().name() << "[";
    for (std::size_t j = 0; j < d.input.vars().size(); ++j) {
        if (j) out << ",";
        out << d.input.vars()[j];
    }
    out << "]   mode: " << mode_name(d.mode) << "\n\n";

    std::vector<std::string> monos;
    for (const auto& [e, c] : d.input.terms()) monos.push_back(monomial_text(d.input, e));
    out << "monomials:\n" << poly_list(monos) << "\n\n";
    out << "exponent set:\n" << format_point_matrix(d.input.support());

    if (!d.w_choices.empty()) {
        std::vector<IntVec> w_points;
        std::vector<std::string> w_monos;
        for (const auto& wc : d.w_choices) {
            w_points.push_back(wc.w);
            w_monos.push_back(monomial_text(d.input, wc.w));
        }
        out << "\nw points:\n" << format_point_matrix(w_points);
        out << "\nw monomials:\n" << poly_list(w_monos) << "\n";
    }

    // the two summand lists of the session layout: pieces carrying the input
    // monomials, and their companions with the sign flipped back
    std::vector<std::string> companions, carriers;
    for (std::size_t k = 0; k < d.summands.size(); ++k) {
        const auto& [poly, cert] = d.summands[k];
        carriers.push_back(poly.to_string());
        const bool paired =
            (cert.kind == SummandCertificate::Kind::PyramidGcd &&
             k + 1 < d.summands.size()) ||
            (cert.kind == SummandCertificate::Kind::Linear && k + 1 < d.summands.size() &&
             d.summands[k + 1].second.kind == SummandCertificate::Kind::Linear);
        if (paired) {
            companions.push_back((-d.summands[k + 1].first).to_string());
            ++k;
        }
    }
    out << "\nirreducible companions:\n" << poly_list(companions) << "\n";
    out << "\ncertified summands:\n" << poly_list(carriers) << "\n";

    std::size_t bound = 2 * std::max<std::size_t>(d.input.term_count(), 1);
    out << "\ndecomposition (" << d.summands.size() << " summands, bound " << bound << "):\n";
    for (std::size_t k = 0; k < d.summands.size(); ++k) {
        out << "  " << (k + 1) << ". " << d.summands[k].first.to_string() << "   ["
            << certificate_summary(d.input, d.summands[k].second) << "]\n";
    }
    return out.str();
}

std::string localized_report(const LocalizedDecomposition& d) {
    std::ostringstream out;
    out << session_report(d.numerators);
    out << "\ndenominator: " << d.denominator.to_string() << "\n";
    out << "fractions:\n";
    for (std::size_t k = 0; k < d.numerators.summands.size(); ++k) {
        out << "  " << (k + 1) << ". (" << d.numerators.summands[k].first.to_string() << ") / ("
            << d.denominator.to_string() << ")\n";
    }
    return out.str();
}

namespace {

json decomposition_to_json_value(const Decomposition& d) {
    json doc;
    doc["input"] = d.input.to_string();
    doc["field"] = d.input.field().name();
    doc["vars"] = d.input.vars();
    doc["mode"] = mode_name(d.mode);
    json summands = json::array();
    for (const auto& [poly, cert] : d.summands) {
        json s;
        s["poly"] = poly.to_string();
        s["certificate"] = certificate_to_json(cert);
        summands.push_back(s);
    }
    doc["summands"] = summands;
    json choices = json::array();
    for (const auto& wc : d.w_choices) {
        json c;
        c["monomial"] = vec_to_json(wc.monomial);
        c["w"] = vec_to_json(wc.w);
        c["p"] = wc.p.str();
        c["permutation"] = wc.permutation;
        choices.push_back(c);
    }
    doc["wChoices"] = choices;
    return doc;
}

}  // namespace

std::string decomposition_to_json(const Decomposition& d, int indent) {
    return decomposition_to_json_value(d).dump(indent);
}

Decomposition decomposition_from_json(const std::string& text) {
    json doc = json::parse(text);
    FieldSpec field = FieldSpec::from_name(doc.at("field").get<std::string>());
    std::vector<std::string> vars = doc.at("vars").get<std::vector<std::string>>();
    Polynomial input = parse_polynomial(doc.at("input").get<std::string>(), vars, field);
    Decomposition d{input, mode_from_name(doc.at("mode").get<std::string>()), {}, {}};
    for (const auto& s : doc.at("summands")) {
        Polynomial poly = parse_polynomial(s.at("poly").get<std::string>(), vars, field);
        d.summands.emplace_back(std::move(poly), certificate_from_json(s.at("certificate")));
    }
    for (const auto& c : doc.at("wChoices")) {
        WChoice wc;
        wc.monomial = vec_from_json(c.at("monomial"));
        wc.w = vec_from_json(c.at("w"));
        wc.p = Integer(c.at("p").get<std::string>());
        wc.permutation = c.at("permutation").get<std::vector<std::size_t>>();
        d.w_choices.push_back(std::move(wc));
    }
    return d;
}

std::string localized_to_json(const LocalizedDecomposition& d, int indent) {
    json doc;
    doc["numerators"] = decomposition_to_json_value(d.numerators);
    doc["denominator"] = d.denominator.to_string();
    return doc.dump(indent);
}

std::string certify_report_to_json(const CertifyReport& report, int indent) {
    json doc;
    doc["ok"] = report.ok;
    doc["failures"] = report.failures;
    return doc.dump(indent);
}

}  // namespace goldbach
