#include "sosq/rational.hpp"

#include "sosq/error.hpp"

#include <cctype>

namespace sosq {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotHomogeneousQuartic: return "NotHomogeneousQuartic";
    case ErrorCode::DegenerateBasis: return "DegenerateBasis";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::NotInSosCone: return "NotInSosCone";
    case ErrorCode::NotGloballyPsd: return "NotGloballyPsd";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::Parse,
                "not an exact rational (expected p or p/q): '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace sosq
