#pragma once

#include <filesystem>

#include <json.hpp>

#include "qmts/superoperator.hpp"
#include "qmts/types.hpp"

namespace qmts {

/// Operators and superoperators serialize as
///   {"dim": d, "re": [...], "im": [...]}
/// with the matrix entries listed row-major (d*d entries for an operator,
/// d^2 * d^2 for a superoperator).
nlohmann::json operator_to_json(const Matrix& a);
Matrix operator_from_json(const nlohmann::json& j);

nlohmann::json superoperator_to_json(const Superoperator& s);
Superoperator superoperator_from_json(const nlohmann::json& j);

Superoperator load_superoperator(const std::filesystem::path& path);
void save_superoperator(const Superoperator& s, const std::filesystem::path& path);

}  // namespace qmts
