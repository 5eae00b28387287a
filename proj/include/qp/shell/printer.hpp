#pragma once

#include "qp/qelement.hpp"

#include <optional>
#include <string>

namespace qp::shell {

enum class Format { Text, Json, Latex };

std::optional<Format> format_from_name(const std::string& name);
const char* format_name(Format f);

/// Deterministic text rendering, terms sorted by (i, j). Every output
/// re-parses through the grammar: rational-function coefficients print as
/// num * (den)^-1. When q0 is given coefficients are evaluated at q = q0
/// instead (may throw PoleAtPoint).
std::string print_text(const QElement& e, const std::optional<mpq_class>& q0 = std::nullopt);
std::string print_latex(const QElement& e);
std::string print_json(const QElement& e);

std::string print(const QElement& e, Format f,
                  const std::optional<mpq_class>& q0 = std::nullopt);

std::string print_classical(const ClassicalPoly& cp, Format f);

} // namespace qp::shell
