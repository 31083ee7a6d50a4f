#include "maskent/rational.hpp"

#include <cmath>

#include "maskent/error.hpp"

namespace maskent {

namespace {

// log2 of a positive big integer.
double log2_integer(const Rational::Integer& value) {
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 1000) return std::log2(value.convert_to<double>());
  const std::size_t shift = bits - 64;
  const Rational::Integer top = value >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)), 1);
    return Rational(Integer(std::string(text.substr(0, slash))), Integer(std::string(text.substr(slash + 1))));
  } catch (const std::runtime_error&) {
    throw ArgumentError("malformed rational '" + std::string(text) + "'");
  }
}

Rational::Integer Rational::numerator() const { return boost::multiprecision::numerator(value_); }

Rational::Integer Rational::denominator() const { return boost::multiprecision::denominator(value_); }

std::string Rational::str() const { return numerator().str() + "/" + denominator().str(); }

double Rational::to_double() const { return value_.convert_to<double>(); }

double Rational::log2() const {
  if (value_ <= 0) throw DomainError("log2 of a non-positive rational");
  return log2_integer(numerator()) - log2_integer(denominator());
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational::Integer ipow(const Rational::Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace maskent
