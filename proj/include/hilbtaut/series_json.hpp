#pragma once

#include <string>

#include <json.hpp>

#include "hilbtaut/series.hpp"

namespace hilbtaut {

/// {"variable": "t", "order": N, "coefficients": ["p/q" | "p", ...]}
nlohmann::json series_to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

std::string series_to_json_string(const Series& s);
Series series_from_json_string(const std::string& text);

nlohmann::json rationals_to_json(const std::vector<BigRational>& values);

}  // namespace hilbtaut
