#include "germkit/rational.hpp"

#include <limits>
#include <regex>

#include "germkit/errors.hpp"

namespace germkit {

ParseError::ParseError(int line, const std::string& message)
    : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("zero denominator");
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$)");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) {
    throw InputError("not a rational number: '" + s + "'");
  }
  BigInt num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  BigInt den(1);
  if (m[2].matched) den = BigInt(m[2].str());
  if (den == 0) throw InputError("zero denominator in '" + s + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::int64_t denominator_of(const Rational& r) {
  if (!r.get_den().fits_slong_p()) throw InputError("denominator too large");
  return r.get_den().get_si();
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw InputError("integer overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw InputError("integer overflow");
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t m) {
  std::int64_t q = a / m;
  if ((a % m != 0) && ((a < 0) != (m < 0))) --q;
  return q;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace germkit
