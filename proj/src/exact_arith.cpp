#include "ratcurve/exact_arith.hpp"

#include <ostream>

namespace ratcurve {

namespace {

bool is_decimal(std::string_view digits) {
  if (digits.empty()) return false;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: n must be nonnegative, got " +
                                std::to_string(n));
  }
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  ExactInt result = 1;
  // Each partial product is itself a binomial coefficient, so the division
  // is exact at every step.
  for (std::int64_t t = 1; t <= k; ++t) {
    result *= n - k + t;
    result /= t;
  }
  return result;
}

std::vector<ExactInt> binomial_row(std::int64_t n) {
  if (n < 0) {
    throw std::invalid_argument("binomial_row: n must be nonnegative");
  }
  std::vector<ExactInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    auto idx = static_cast<std::size_t>(k);
    row[idx] = row[idx - 1] * (n - k + 1) / k;
  }
  return row;
}

Rational::Rational(ExactInt numerator) : num_(std::move(numerator)), den_(1) {}

Rational::Rational(ExactInt numerator, ExactInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::domain_error("rational: division by zero");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  ExactInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational: division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  ExactInt lhs = a.num_ * b.den_;
  ExactInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return to_decimal(num_);
  return to_decimal(num_) + "/" + to_decimal(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  auto den_text = text.substr(slash + 1);
  if (!is_decimal(den_text)) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

ExactInt to_integer(const Rational& value, std::string_view what) {
  if (!value.is_integer()) {
    throw NonIntegralError(std::string(what) + " is not an integer: " +
                           value.to_string());
  }
  return value.numerator();
}

std::string to_decimal(const ExactInt& value) { return value.str(); }

ExactInt parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!is_decimal(digits)) {
    throw std::invalid_argument("malformed integer: " + std::string(text));
  }
  return ExactInt(std::string(text));
}

}  // namespace ratcurve
