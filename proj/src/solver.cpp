#include "symcap/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace symcap {

namespace {

CapacityEstimate solve_impl(const Rational& a, TargetKind kind, double tol, std::size_t K) {
  if (a < Rational(1)) throw std::domain_error("solve: a must be >= 1");
  if (!(tol > 0)) throw std::invalid_argument("solve: tol must be positive");

  EchLatticeSequence source(Rational(1), a);
  auto pred = [&](const Rational& r) {
    return ech_embeds(a, {kind, r}, K, source).passes();
  };

  CapacityEstimate est;
  est.terms = K;
  OracleInfimum oracle = ech_oracle_infimum(a, kind, K, source);
  est.oracle_infimum = oracle.value;
  est.binding_k = oracle.binding_k;

  const Rational vol_sq = kind == TargetKind::Ball ? a : a / 2;  // R^2 >= vol_sq
  double lo = std::sqrt(vol_sq.to_double());
  double hi = a.to_double();
  if (!pred(Rational::from_double(hi)))
    throw std::logic_error("solve: inclusion bracket end rejected (internal error)");

  if (pred(Rational::from_double(lo))) {
    // The volume bound already embeds; it is the infimum of the bracket.
    est.value = lo;
    est.bracket_lo = est.bracket_hi = lo;
    est.volume_bound_hit = true;
    if (auto r = exact_sqrt(vol_sq); r && pred(*r)) est.exact = *r;
  } else {
    while (hi - lo > tol) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // bracket at double resolution
      if (pred(Rational::from_double(mid)))
        hi = mid;
      else
        lo = mid;
      ++est.bisection_steps;
    }
    est.bracket_lo = lo;
    est.bracket_hi = hi;
    est.value = hi;

    // Exactness re-check: the simplest rational in the bracket must coincide
    // with the exact predicate threshold, pass at itself, and fail just below.
    Rational rlo = Rational::from_double(lo), rhi = Rational::from_double(hi);
    Rational cand = simplest_rational_in(rlo, rhi);
    if (cand != oracle.value && oracle.value >= rlo && oracle.value <= rhi)
      cand = oracle.value;
    if (cand == oracle.value) {
      Rational probe = cand - Rational::from_double(tol);
      if (pred(cand) && !pred(probe)) {
        est.exact = cand;
        est.value = cand.to_double();
      }
    }
  }

  Rational at = est.exact ? *est.exact : Rational::from_double(est.value);
  est.tail_certified = ech_embeds(a, {kind, at}, K, source).tail_certified;
  return est;
}

}  // namespace

CapacityEstimate solve_cb(const Rational& a, double tol, std::size_t K) {
  return solve_impl(a, TargetKind::Ball, tol, K);
}

CapacityEstimate solve_cp(const Rational& a, double tol, std::size_t K) {
  return solve_impl(a, TargetKind::Cube, tol, K);
}

}  // namespace symcap
