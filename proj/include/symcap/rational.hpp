#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symcap {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact rational in canonical form: denominator > 0, gcd(|num|, den) = 1.
/// Equality is structural; ordering matches the real numbers.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
  explicit Rational(BigInt n) : v_(std::move(n)) {}
  Rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = BigRat(std::move(num), std::move(den));
  }
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Exact value of a finite double (binary fraction).
  static Rational from_double(double x);

  /// Accepts "p", "p/q", and plain decimals like "2.75" or "-0.5".
  static std::optional<Rational> parse(std::string_view s);

  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }

  double to_double() const { return v_.convert_to<double>(); }
  std::string str() const;

  int sign() const { return v_.sign(); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  BigInt floor() const;

  bool is_integer() const { return denominator(v_) == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  explicit Rational(BigRat v) : v_(std::move(v)) {}
  BigRat v_;
};

/// Canonical-form constructor named as in the module contract.
inline Rational normalize(BigInt p, BigInt q) { return Rational(std::move(p), std::move(q)); }
inline Rational normalize(long long p, long long q) { return Rational(p, q); }

/// Smallest-denominator rational in the closed interval [lo, hi]
/// (Stern-Brocot descent; lo <= hi required).
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

/// Exact square root if the argument is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& x);

}  // namespace symcap
