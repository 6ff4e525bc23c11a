#include "hilbtaut/series_json.hpp"

#include "hilbtaut/error.hpp"

namespace hilbtaut {

nlohmann::json rationals_to_json(const std::vector<BigRational>& values) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : values) arr.push_back(to_string(c));
  return arr;
}

nlohmann::json series_to_json(const Series& s) {
  nlohmann::json j;
  j["variable"] = std::string(var_name(s.var()));
  j["order"] = s.order();
  j["coefficients"] = rationals_to_json(s.coefficients());
  return j;
}

Series series_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::parse, "series JSON must be an object");
  for (const char* key : {"variable", "order", "coefficients"}) {
    if (!j.contains(key)) throw Error(ErrorCode::parse, std::string("series JSON missing '") + key + "'");
  }
  if (!j["variable"].is_string() || !j["order"].is_number_integer() || !j["coefficients"].is_array()) {
    throw Error(ErrorCode::parse, "series JSON has fields of the wrong type");
  }
  const Var var = parse_var(j["variable"].get<std::string>());
  const auto order = j["order"].get<long long>();
  const auto& arr = j["coefficients"];
  if (order < 0 || static_cast<long long>(arr.size()) != order + 1) {
    throw Error(ErrorCode::parse, "series JSON: coefficient count must be order+1");
  }
  std::vector<BigRational> c;
  c.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string()) throw Error(ErrorCode::parse, "series JSON coefficients must be strings");
    c.push_back(parse_rational(item.get<std::string>()));
  }
  return Series(var, std::move(c));
}

std::string series_to_json_string(const Series& s) { return series_to_json(s).dump(); }

Series series_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse, e.what());
  }
  return series_from_json(j);
}

}  // namespace hilbtaut
