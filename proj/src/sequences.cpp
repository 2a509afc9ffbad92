#include "symcap/sequences.hpp"

namespace symcap {

namespace {

BigInt linear_recurrence(std::size_t n, BigInt s0, BigInt s1, long long c1, long long c0) {
  if (n == 0) return s0;
  BigInt prev = std::move(s0), cur = std::move(s1);
  for (std::size_t i = 1; i < n; ++i) {
    BigInt next = c1 * cur + c0 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

BigInt odd_fibonacci(std::size_t n) { return linear_recurrence(n, 1, 2, 3, -1); }

BigInt pell(std::size_t n) { return linear_recurrence(n, 0, 1, 2, 1); }

BigInt half_companion_pell(std::size_t n) { return linear_recurrence(n, 1, 1, 2, 1); }

Rational b_ratio(std::size_t n) {
  return Rational(odd_fibonacci(n + 2), odd_fibonacci(n));
}

Rational beta_ratio(std::size_t n) {
  if (n % 2 == 0) return Rational(half_companion_pell(n + 2), half_companion_pell(n));
  return Rational(pell(n + 2), pell(n));
}

QuadraticSurd tau_fourth() { return {Rational(7, 2), Rational(3, 2), 5}; }

QuadraticSurd sigma_squared() { return {Rational(3), Rational(2), 2}; }

}  // namespace symcap
