#pragma once

#include "symcap/rational.hpp"

#include <cmath>

namespace symcap {

/// Number of the form a + b*sqrt(r) with a, b rational and r a positive
/// non-square integer. Sign comparisons against rationals are exact, which is
/// what staircase-limit tests need.
class QuadraticSurd {
 public:
  QuadraticSurd(Rational a, Rational b, long long radicand)
      : a_(std::move(a)), b_(std::move(b)), r_(radicand) {
    if (r_ <= 0) throw std::domain_error("QuadraticSurd: radicand must be positive");
  }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coeff() const { return b_; }
  long long radicand() const { return r_; }

  double to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(r_));
  }

  /// Sign of (this - x), decided exactly.
  int compare(const Rational& x) const {
    Rational t = a_ - x;
    int st = t.sign(), sb = b_.sign();
    if (sb == 0) return st;
    if (st == 0) return sb;
    if (st > 0 && sb > 0) return 1;
    if (st < 0 && sb < 0) return -1;
    // Opposite signs: compare t^2 against b^2 r.
    Rational t2 = t * t, b2r = b_ * b_ * Rational(r_);
    if (t2 == b2r) return 0;
    bool t2_larger = t2 > b2r;
    // t dominates iff t^2 > b^2 r.
    return t2_larger ? st : sb;
  }
  bool operator<(const Rational& x) const { return compare(x) < 0; }
  bool operator>(const Rational& x) const { return compare(x) > 0; }
  bool operator==(const Rational& x) const { return compare(x) == 0; }

  /// |this - x| < bound, exactly.
  bool within(const Rational& x, const Rational& bound) const {
    return compare(x - bound) > 0 && compare(x + bound) < 0;
  }

  friend QuadraticSurd operator+(const QuadraticSurd& s, const Rational& x) {
    return {s.a_ + x, s.b_, s.r_};
  }
  friend QuadraticSurd operator*(const QuadraticSurd& s, const Rational& x) {
    return {s.a_ * x, s.b_ * x, s.r_};
  }
  /// Product of surds over the same radicand.
  friend QuadraticSurd operator*(const QuadraticSurd& s, const QuadraticSurd& t) {
    if (s.r_ != t.r_) throw std::domain_error("QuadraticSurd: radicand mismatch");
    return {s.a_ * t.a_ + s.b_ * t.b_ * Rational(s.r_), s.a_ * t.b_ + s.b_ * t.a_, s.r_};
  }
  bool is_zero() const { return a_.sign() == 0 && b_.sign() == 0; }

 private:
  Rational a_, b_;
  long long r_;
};

}  // namespace symcap
