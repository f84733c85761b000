// Text renderings and JSON serialization for quivers and reports.
#pragma once

#include <string>

#include <json.hpp>

#include "arfold/affine.hpp"

namespace arfold {

// Residues as rows, positions as columns; quivers without coordinates are listed.
std::string render_ascii(const ARQuiver& q);
std::string render_dot(const ARQuiver& q, const std::string& name);

// schema "arfold/1": positions doubled, with position_denominator 2
nlohmann::json quiver_to_json(const ARQuiver& q);
ARQuiver quiver_from_json(const nlohmann::json& j, const RootSystem& rs);

nlohmann::json report_to_json(const Report& r);
std::string format_position(int position, int denominator);

}  // namespace arfold
