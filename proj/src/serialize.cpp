#include "qp/serialize.hpp"

namespace qp {

using nlohmann::json;

json to_json(const IntPoly& p) {
    // dense little-endian coefficient list, decimal strings
    json arr = json::array();
    int deg = p.degree();
    for (int k = 0; k <= deg; ++k) arr.push_back(p.coeff(k).get_str());
    if (deg < 0) arr.push_back("0");
    return arr;
}

json to_json(const QScalar& s) {
    return json{{"num", to_json(s.num())}, {"den", to_json(s.den())}};
}

json to_json(const QElement& e) {
    json terms = json::array();
    for (const auto& [m, c] : e.terms())
        terms.push_back(json{{"i", m.i}, {"j", m.j}, {"coeff", to_json(c)}});
    return json{{"terms", terms}};
}

json to_json(const ClassicalPoly& cp) {
    json terms = json::array();
    for (const auto& [m, c] : cp)
        terms.push_back(json{{"i", m.first}, {"j", m.second}, {"coeff", c.get_str()}});
    return json{{"terms", terms}};
}

json to_json(const CalculusConfig& cfg) {
    return json{{"mixed_term_exponent", cfg.mixed_term_exponent}};
}

json to_json(const calculus::ComparisonReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back(json{{"monomial", json{{"i", r.monomial.i}, {"j", r.monomial.j}}},
                            {"engine", to_json(r.engine)},
                            {"paper", to_json(r.paper)},
                            {"ratio", to_json(r.ratio)}});
    return json{{"config", to_json(rep.config)},
                {"supports_match", rep.supports_match},
                {"rows", rows}};
}

json to_json(const CurvatureResult& res) {
    json j{{"config", to_json(res.config)},
           {"commutator_part", to_json(res.commutator_part)}};
    if (res.connection_part) {
        j["connection_part"] = to_json(*res.connection_part);
        j["total"] = to_json(*res.total);
    } else {
        j["connection_error"] = res.connection_error;
    }
    return j;
}

namespace {
json limit_json(const LimitOutcome& lim) {
    if (lim.pole) return json{{"pole_at_one", true}};
    return json{{"pole_at_one", false}, {"value", lim.value.get_str()}};
}
} // namespace

json to_json(const FlatnessReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json row{{"q0", r.q0.get_str()}, {"skipped", r.skipped}};
        if (r.commutator_norm) row["commutator_norm"] = r.commutator_norm->get_str();
        if (r.connection_norm) row["connection_norm"] = r.connection_norm->get_str();
        if (r.total_norm) row["total_norm"] = r.total_norm->get_str();
        rows.push_back(std::move(row));
    }
    json limits{{"commutator", limit_json(rep.commutator_limit)}};
    if (rep.connection_limit) {
        limits["connection"] = limit_json(*rep.connection_limit);
        limits["total"] = limit_json(*rep.total_limit);
    }
    return json{{"curvature", to_json(rep.curvature)}, {"limits", limits}, {"rows", rows}};
}

namespace {

IntPoly intpoly_from_json(const json& j) {
    std::vector<mpz_class> coeffs;
    for (const auto& c : j) coeffs.emplace_back(c.get<std::string>());
    return IntPoly::from_coeffs(coeffs);
}

} // namespace

QScalar qscalar_from_json(const json& j) {
    return QScalar(intpoly_from_json(j.at("num")), intpoly_from_json(j.at("den")));
}

QElement qelement_from_json(const json& j) {
    QElement e;
    for (const auto& t : j.at("terms"))
        e = e + QElement::term(qscalar_from_json(t.at("coeff")), t.at("i").get<int>(),
                               t.at("j").get<int>());
    return e;
}

} // namespace qp
