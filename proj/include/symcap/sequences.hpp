#pragma once

#include "symcap/quadratic.hpp"
#include "symcap/rational.hpp"

#include <cstddef>

namespace symcap {

/// g_0 = 1, g_1 = 2, g_{n+1} = 3 g_n - g_{n-1}  (odd-indexed Fibonacci numbers:
/// 1, 2, 5, 13, 34, ...).
BigInt odd_fibonacci(std::size_t n);

/// P_0 = 0, P_1 = 1, P_n = 2 P_{n-1} + P_{n-2}.
BigInt pell(std::size_t n);

/// H_0 = 1, H_1 = 1, H_n = 2 H_{n-1} + H_{n-2}.
BigInt half_companion_pell(std::size_t n);

/// b_n = g_{n+2} / g_n, increasing to tau^4.
Rational b_ratio(std::size_t n);

/// beta_n = H_{n+2}/H_n for even n, P_{n+2}/P_n for odd n; increasing to sigma^2.
Rational beta_ratio(std::size_t n);

/// (7 + 3 sqrt 5) / 2, the accumulation point of b_n.
QuadraticSurd tau_fourth();

/// 3 + 2 sqrt 2, the accumulation point of beta_n.
QuadraticSurd sigma_squared();

}  // namespace symcap
