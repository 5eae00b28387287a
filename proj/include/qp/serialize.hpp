#pragma once

#include "qp/qcurvature.hpp"

#include <json.hpp>

namespace qp {

/// JSON wire formats. Integers travel as decimal strings so arbitrary
/// precision survives any JSON implementation on the other side.
nlohmann::json to_json(const IntPoly& p);
nlohmann::json to_json(const QScalar& s);
nlohmann::json to_json(const QElement& e);
nlohmann::json to_json(const ClassicalPoly& cp);
nlohmann::json to_json(const CalculusConfig& cfg);
nlohmann::json to_json(const calculus::ComparisonReport& rep);
nlohmann::json to_json(const CurvatureResult& res);
nlohmann::json to_json(const FlatnessReport& rep);

QScalar qscalar_from_json(const nlohmann::json& j);
QElement qelement_from_json(const nlohmann::json& j);

} // namespace qp
