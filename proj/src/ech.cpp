#include "symcap/ech.hpp"

#include <algorithm>
#include <cmath>

namespace symcap {

EchLatticeSequence::EchLatticeSequence(Rational a, Rational b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.sign() <= 0 || b_.sign() <= 0)
    throw std::domain_error("EchLatticeSequence: factors must be positive");
  // Common denominator so heap keys are integers: value = (m p s + n r q)/(q s).
  den_ = a_.den() * b_.den();
  step_a_ = a_.num() * b_.den();
  step_b_ = b_.num() * a_.den();
  frontier_.push({BigInt(0), 0, 0});
}

void EchLatticeSequence::grow(std::size_t upto) {
  while (prefix_.size() <= upto) {
    Node top = frontier_.top();
    frontier_.pop();
    prefix_.emplace_back(Rational(top.v, den_));
    // Column-major frontier: always advance n; advance m only from the axis.
    frontier_.push({top.v + step_b_, top.m, top.n + 1});
    if (top.n == 0) frontier_.push({top.v + step_a_, top.m + 1, 0});
  }
}

const Rational& EchLatticeSequence::at(std::size_t k) {
  if (k >= prefix_.size()) grow(k);
  return prefix_[k];
}

std::uint64_t ball_unit_capacity(std::size_t k) {
  // least d with (d+1)(d+2)/2 >= k+1
  auto need = static_cast<std::uint64_t>(k) + 1;
  auto d = static_cast<std::uint64_t>(std::max(0.0, std::sqrt(2.0 * static_cast<double>(need)) - 2.0));
  while ((d + 1) * (d + 2) / 2 < need) ++d;
  while (d > 0 && d * (d + 1) / 2 >= need) --d;
  return d;
}

std::uint64_t cube_unit_capacity(std::size_t k) {
  auto need = static_cast<std::uint64_t>(k) + 1;
  std::uint64_t best = need - 1;  // m = k, n = 0
  for (std::uint64_t m = 0; m < best; ++m) {
    std::uint64_t n = (need + m) / (m + 1) - 1;  // ceil(need/(m+1)) - 1
    best = std::min(best, m + n);
  }
  return best;
}

Rational ech_polydisk_capacity(const Rational& a, const Rational& b, std::size_t k) {
  if (a.sign() <= 0 || b.sign() <= 0)
    throw std::domain_error("ech_polydisk_capacity: factors must be positive");
  auto need = static_cast<std::uint64_t>(k) + 1;
  std::optional<Rational> best;
  for (std::uint64_t m = 0; m < need; ++m) {
    std::uint64_t n = (need + m) / (m + 1) - 1;
    Rational am = a * Rational(static_cast<long long>(m));
    if (best && am >= *best) break;  // sums only grow beyond this point
    Rational cand = am + b * Rational(static_cast<long long>(n));
    if (!best || cand < *best) best = cand;
    if (n == 0) break;
  }
  return *best;
}

namespace {

// ceil of a rational
BigInt rational_ceil(const Rational& x) {
  BigInt f = x.floor();
  return (Rational(f) == x) ? f : f + 1;
}

// Integer quadratic lead*d^2 + lin*d + con >= 0 for all integers d >= d1,
// decided exactly. Requires lead > 0.
bool quadratic_nonneg_from(const Rational& lead, const Rational& lin, const Rational& con,
                           const BigInt& d1) {
  auto q = [&](const BigInt& d) {
    Rational dr{d};
    return lead * dr * dr + lin * dr + con;
  };
  Rational vertex = -lin / (lead * 2);
  BigInt lo = vertex.floor(), hi = rational_ceil(vertex);
  BigInt c1 = std::max(d1, lo), c2 = std::max(d1, hi);
  return q(c1).sign() >= 0 && q(c2).sign() >= 0 && q(d1).sign() >= 0;
}

// Tail domination for k > K against Ball(R): per target block of constant
// value d (k+1 <= (d+1)(d+2)/2), the source bound squares to
// a (d+1)(d+2) <= R^2 d^2.
bool tail_certified_ball(const Rational& a, const Rational& R, std::size_t K) {
  Rational r2 = R * R;
  if (!(r2 > a)) return false;
  BigInt d1{static_cast<long long>(ball_unit_capacity(K + 1))};
  // (R^2 - a) d^2 - 3a d - 2a >= 0
  return quadratic_nonneg_from(r2 - a, a * Rational(-3), a * Rational(-2), d1);
}

// Cube(R) analogue: block max of k+1 at target value p is <= (p+2)^2/4, so
// a (p+2)^2 / 2 <= R^2 p^2 suffices.
bool tail_certified_cube(const Rational& a, const Rational& R, std::size_t K) {
  Rational r2 = R * R;
  Rational half_a = a / 2;
  if (!(r2 > half_a)) return false;
  BigInt p1{static_cast<long long>(cube_unit_capacity(K + 1))};
  // (R^2 - a/2) p^2 - 2a p - 2a >= 0
  return quadratic_nonneg_from(r2 - half_a, a * Rational(-2), a * Rational(-2), p1);
}

std::uint64_t unit_capacity(TargetKind kind, std::size_t k) {
  return kind == TargetKind::Ball ? ball_unit_capacity(k) : cube_unit_capacity(k);
}

}  // namespace

EmbeddingCertificate ech_embeds(const Rational& a, const EmbedTarget& target, std::size_t K,
                                EchLatticeSequence& source) {
  if (K < 1) throw std::invalid_argument("ech_embeds: K must be >= 1");
  const Rational& R = target.size;
  EmbeddingCertificate cert;
  cert.k_checked = K;
  for (std::size_t k = 1; k <= K; ++k) {
    const Rational& lhs = source.at(k);
    Rational rhs = R * Rational(static_cast<long long>(unit_capacity(target.kind, k)));
    if (lhs > rhs) {
      cert.verdict = EmbeddingCertificate::Verdict::Obstructed;
      cert.first_violation = {k, lhs, rhs};
      return cert;
    }
  }
  cert.verdict = EmbeddingCertificate::Verdict::PassesUpToK;
  cert.tail_certified = target.kind == TargetKind::Ball ? tail_certified_ball(a, R, K)
                                                        : tail_certified_cube(a, R, K);
  return cert;
}

EmbeddingCertificate ech_embeds(const Ellipsoid& source, const EmbedTarget& target,
                                std::size_t K) {
  const auto& f = source.finite_factors();
  if (f.size() != 2 || source.infinite_count() != 0 || f[0] != Rational(1) || f[1] < Rational(1))
    throw std::invalid_argument("ech_embeds: source must be E(1, a) with a >= 1");
  EchLatticeSequence seq(f[0], f[1]);
  return ech_embeds(f[1], target, K, seq);
}

OracleInfimum ech_oracle_infimum(const Rational& a, TargetKind kind, std::size_t K,
                                 EchLatticeSequence& source) {
  OracleInfimum best{Rational(0), 0};
  for (std::size_t k = 1; k <= K; ++k) {
    Rational ratio = source.at(k) / Rational(static_cast<long long>(unit_capacity(kind, k)));
    if (ratio > best.value) best = {ratio, k};
  }
  return best;
}

}  // namespace symcap
