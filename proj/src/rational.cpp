#include "segmarket/rational.hpp"

#include <cctype>

#include "segmarket/error.hpp"

namespace segmarket {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::ParseError,
              "not a rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad(text);

  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    out = Rational(n, d);
    out.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text);
    if (!whole.empty() && !all_digits(whole)) bad(text);
    if (!frac.empty() && !all_digits(frac)) bad(text);
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class n(digits.empty() ? std::string("0") : digits, 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    out = Rational(n, d);
    out.canonicalize();
  } else {
    if (!all_digits(s)) bad(text);
    out = Rational(mpz_class(std::string(s), 10));
  }
  if (negative) out = -out;
  return out;
}

Rational ratio(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_decimal(const Rational& value, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational magnitude = abs(value) * scale;
  // round half away from zero: floor(m + 1/2)
  Rational shifted = magnitude + Rational(1, 2);
  mpz_class scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());

  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  bool negative = value < 0 && scaled != 0;
  return negative ? "-" + body : body;
}

}  // namespace segmarket
