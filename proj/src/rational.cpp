#include "ordermono/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "ordermono/error.hpp"

namespace ordermono {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void fail(std::string_view text) {
  throw ParseError("not a rational number: '" + std::string(text) + "'");
}

mpz_class pow10(unsigned long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

// [sign] digits [. digits] [e [sign] digits]
Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) fail(text);
    exponent = std::strtol(std::string(exp_part).c_str(), nullptr, 10);
    if (exp_negative) exponent = -exponent;
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
    if (!frac_part.empty() && !all_digits(frac_part)) fail(text);
  }
  if (!int_part.empty() && !all_digits(int_part)) fail(text);
  if (int_part.empty() && frac_part.empty()) fail(text);

  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  Rational out;
  if (exponent >= 0) {
    out = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
  } else {
    out = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    out.canonicalize();
  }
  if (negative) out = -out;
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) fail(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s);

  std::string_view num = s.substr(0, slash);
  std::string_view den = s.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) fail(text);
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational out(p, q);
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << value.get_d();
  return os.str();
}

Rational round_to_denominator(double value, const mpz_class& denominator) {
  Rational scaled = Rational(value) * denominator;
  mpz_class twice = 2 * scaled.get_num();
  mpz_class den2 = 2 * scaled.get_den();
  // floor((2a + b) / 2b) rounds half up; mirror for negatives.
  mpz_class rounded;
  if (scaled >= 0) {
    mpz_fdiv_q(rounded.get_mpz_t(), mpz_class(twice + scaled.get_den()).get_mpz_t(),
               den2.get_mpz_t());
  } else {
    mpz_cdiv_q(rounded.get_mpz_t(), mpz_class(twice - scaled.get_den()).get_mpz_t(),
               den2.get_mpz_t());
  }
  Rational out(rounded, denominator);
  out.canonicalize();
  return out;
}

}  // namespace ordermono
