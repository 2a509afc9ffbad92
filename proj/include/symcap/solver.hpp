#pragma once

#include "symcap/ech.hpp"
#include "symcap/rational.hpp"

#include <cstddef>
#include <optional>

namespace symcap {

struct CapacityEstimate {
  double value = 0.0;
  /// Present when the bracket candidate passed the exactness re-check.
  std::optional<Rational> exact;
  double bracket_lo = 0.0, bracket_hi = 0.0;
  std::size_t terms = 0;
  std::size_t bisection_steps = 0;
  /// Exact finite-K predicate threshold max_k N(1,a)_k / u(k) and its index.
  Rational oracle_infimum;
  std::size_t binding_k = 0;
  /// Tail certificate at the reported value.
  bool tail_certified = false;
  /// True when the reported value is the volume bound and the predicate
  /// already passes there (bracket never opened).
  bool volume_bound_hit = false;
};

inline constexpr std::size_t kDefaultEchTerms = 5000;

/// inf{R : E(1,a) -> B^4(R)} via bisection of the ECH predicate on
/// [sqrt(a), a]. a >= 1, tol > 0.
CapacityEstimate solve_cb(const Rational& a, double tol, std::size_t K = kDefaultEchTerms);

/// inf{R : E(1,a) -> P(R,R)} via bisection on [sqrt(a/2), a].
CapacityEstimate solve_cp(const Rational& a, double tol, std::size_t K = kDefaultEchTerms);

}  // namespace symcap
