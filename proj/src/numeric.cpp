#include "toric/numeric.hpp"

#include "toric/errors.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace toric {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidKappa: return "InvalidKappa";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotABundle: return "NotABundle";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::CapRequired: return "CapRequired";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::CertificateInvalid: return "CertificateInvalid";
  }
  return "UnknownError";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  Integer value{std::string(body)};
  return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
  }
  Integer den{std::string(den_text)};
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string pretty_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return format_rational(q);
}

Integer floor_of(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer f = n / d;  // truncates toward zero
  if (f * d != n && n < 0) f -= 1;
  return f;
}

Integer ceil_of(const Rational& q) {
  return -floor_of(Rational(-q));
}

Integer sum(const IntVector& v) {
  Integer total = 0;
  for (const auto& x : v) total += x;
  return total;
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return abs(g);
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace toric
