#ifndef RATCURVE_EXACT_ARITH_HPP
#define RATCURVE_EXACT_ARITH_HPP

// Exact integer and rational arithmetic used by every formula in ratcurve.
// There is no floating-point path anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ratcurve {

using ExactInt = boost::multiprecision::cpp_int;

// Raised when a value that must be integral (a genus expression, an exact
// quotient) is not. Always indicates a formula inconsistency.
class NonIntegralError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// C(n, k) for n >= 0. Out-of-range k yields 0. Throws std::invalid_argument
// for negative n.
ExactInt binomial(std::int64_t n, std::int64_t k);

// The full row C(n, 0..n).
std::vector<ExactInt> binomial_row(std::int64_t n);

// Reduced fraction with a positive denominator. Equality is value equality
// because the representation is canonical.
class Rational {
 public:
  Rational() = default;
  Rational(ExactInt numerator);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator) : Rational(ExactInt(numerator)) {}  // NOLINT
  Rational(int numerator) : Rational(ExactInt(numerator)) {}          // NOLINT
  // Throws std::domain_error when denominator == 0.
  Rational(ExactInt numerator, ExactInt denominator);

  const ExactInt& numerator() const { return num_; }
  const ExactInt& denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  // Accepts "p" or "p/q" with optional leading '-'. Throws
  // std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

 private:
  void normalize();

  ExactInt num_ = 0;
  ExactInt den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

// Returns the numerator when the denominator is 1; otherwise throws
// NonIntegralError. `what` names the expression in the error message.
ExactInt to_integer(const Rational& value, std::string_view what = "value");

std::string to_decimal(const ExactInt& value);
ExactInt parse_integer(std::string_view text);

}  // namespace ratcurve

#endif  // RATCURVE_EXACT_ARITH_HPP
