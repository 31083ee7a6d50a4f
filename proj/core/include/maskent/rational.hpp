#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace maskent {

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Raises DomainError when den == 0.
  Rational(const Integer& num, const Integer& den);

  /// Parses "num/den" or a bare integer. Raises ArgumentError otherwise.
  static Rational parse(std::string_view text);

  Integer numerator() const;
  Integer denominator() const;

  /// "num/den" in lowest terms; integers keep the "/1".
  std::string str() const;

  double to_double() const;
  /// log2 of a positive value, accurate for numerators and denominators far
  /// beyond the double range.
  double log2() const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  boost::multiprecision::cpp_rational value_;
};

/// Integer power with an exact result.
Rational::Integer ipow(const Rational::Integer& base, unsigned exponent);

}  // namespace maskent
