#include "evlogic/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace evlogic {

double Rational::to_double() const {
  const mpz_class& num = value_.get_num();
  const mpz_class& den = value_.get_den();
  constexpr long kExact = 1L << 53;
  if (abs(num) <= kExact && den <= kExact) return num.get_d() / den.get_d();  // one IEEE rounding
  mp_exp_t exp = 0;
  const std::string mantissa = mpf_class(value_, 256).get_str(exp, 10, 40);
  if (mantissa.empty()) return 0.0;
  const bool negative = mantissa.front() == '-';
  const std::string text = (negative ? "-0." + mantissa.substr(1) : "0." + mantissa) + "e" + std::to_string(exp);
  return std::strtod(text.c_str(), nullptr);
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

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed number '" + std::string(text) + "'");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational r;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    r.value_ = mpq_class(mpz_class(std::string(num), 10), d);
  } else {
    const auto dot = body.find('.');
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw bad();
    if (!whole.empty() && !all_digits(whole)) throw bad();
    if (dot != std::string_view::npos && !all_digits(frac)) throw bad();
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    r.value_ = mpq_class(mpz_class(digits, 10), den);
  }
  r.value_.canonicalize();
  if (negative) r.value_ = -r.value_;
  return r;
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_str();
}

std::string Rational::decimal(int places) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  mpz_class num = abs(value_.get_num()) * scale;
  const mpz_class& den = value_.get_den();
  // round half away from zero: floor((2*num + den) / (2*den))
  mpz_class scaled = (2 * num + den) / (2 * den);
  std::string digits = scaled.get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out = sgn(value_) < 0 && scaled != 0 ? "-" : "";
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) {
    out += '.';
    out += digits.substr(digits.size() - static_cast<std::size_t>(places));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace evlogic
