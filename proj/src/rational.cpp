#include "hilbtaut/rational.hpp"

#include "hilbtaut/error.hpp"

namespace hilbtaut {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::order_mismatch: return "order-mismatch";
    case ErrorCode::non_unit_base: return "non-unit-base";
    case ErrorCode::composition_domain: return "composition-domain";
    case ErrorCode::non_invertible: return "non-invertible";
    case ErrorCode::domain: return "domain";
    case ErrorCode::branch: return "branch";
    case ErrorCode::range: return "range";
    case ErrorCode::unknown_series: return "unknown-series";
    case ErrorCode::panel: return "panel";
    case ErrorCode::universality_violation: return "universality-violation";
    case ErrorCode::inconsistent_specialization: return "inconsistent-specialization";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::parse: return "parse";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_fraction_string(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num_text, true) || !is_integer_text(den_text, false)) {
    throw Error(ErrorCode::parse, "malformed rational: '" + std::string(text) + "'");
  }
  std::string num(num_text);
  if (num[0] == '+') num.erase(0, 1);
  BigInteger n(num, 10);
  BigInteger d(std::string(den_text), 10);
  if (d == 0) throw Error(ErrorCode::parse, "zero denominator: '" + std::string(text) + "'");
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

BigRational rational(long num, long den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational binomial(const BigRational& a, long k) {
  if (k < 0) return 0;
  BigRational out = 1;
  for (long i = 0; i < k; ++i) {
    out *= (a - i);
    out /= (i + 1);
  }
  return out;
}

BigInteger factorial(long n) {
  BigInteger out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

BigRational power(const BigRational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorCode::domain, "zero to a negative power");
    return power(BigRational(1) / base, -exponent);
  }
  BigRational out = 1;
  BigRational b = base;
  while (exponent > 0) {
    if (exponent & 1) out *= b;
    b *= b;
    exponent >>= 1;
  }
  return out;
}

}  // namespace hilbtaut
