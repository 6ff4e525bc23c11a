#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbtaut {

// Stable numeric values: the C API returns these directly as status codes.
enum class ErrorCode : int {
  order_mismatch = 1,
  non_unit_base = 2,
  composition_domain = 3,
  non_invertible = 4,
  domain = 5,
  branch = 6,
  range = 7,
  unknown_series = 8,
  panel = 9,
  universality_violation = 10,
  inconsistent_specialization = 11,
  invalid_argument = 12,
  parse = 13,
  internal = 14,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hilbtaut
