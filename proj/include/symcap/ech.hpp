#pragma once

#include "symcap/domains.hpp"
#include "symcap/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

namespace symcap {

/// Lazily enumerated nondecreasing sequence: the k-th smallest element (with
/// multiplicity, k counted from 0) of {m*a + n*b : m, n >= 0 integers}.
/// Frontier min-heap over the lattice with integer keys; prefix memoized.
class EchLatticeSequence {
 public:
  EchLatticeSequence(Rational a, Rational b);

  const Rational& at(std::size_t k);
  /// at(k) = scaled_at(k) / scale_den(), for integer-only comparisons.
  const BigInt& scaled_at(std::size_t k);
  const BigInt& scale_den() const { return den_; }
  std::size_t computed() const { return prefix_.size(); }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

 private:
  void grow(std::size_t upto);

  struct Node {
    BigInt v;
    std::uint64_t m, n;
    bool operator>(const Node& o) const { return v > o.v; }
  };

  Rational a_, b_;
  BigInt step_a_, step_b_, den_;
  std::vector<Rational> prefix_;
  std::priority_queue<Node, std::vector<Node>, std::greater<>> frontier_;
};

/// N(1,1)_k: the value d appears d+1 times, so this is the least d with
/// (d+1)(d+2)/2 >= k+1.
std::uint64_t ball_unit_capacity(std::size_t k);

/// min{m+n : (m+1)(n+1) >= k+1}.
std::uint64_t cube_unit_capacity(std::size_t k);

/// min{a m + b n : (m+1)(n+1) >= k+1}, exact.
Rational ech_polydisk_capacity(const Rational& a, const Rational& b, std::size_t k);

enum class TargetKind { Ball, Cube };

struct EmbedTarget {
  TargetKind kind;
  Rational size;  // Ball(R) or Cube(R) = P(R,R)
};

struct EmbeddingCertificate {
  enum class Verdict { Obstructed, PassesUpToK };

  struct Violation {
    std::size_t k;
    Rational lhs, rhs;
  };

  Verdict verdict;
  std::size_t k_checked = 0;
  /// True when the tail k > K is dominated by the exact certificate below.
  bool tail_certified = false;
  std::optional<Violation> first_violation;

  bool passes() const { return verdict == Verdict::PassesUpToK; }
};

/// Termwise comparison of N(1,a) against the target sequence R*u(k) for
/// k <= K. On a clean pass, additionally tries to certify the tail: the source
/// obeys N(1,a)_k <= sqrt(2a(k+1)) (lattice count >= area under the line,
/// since the region is downward closed), and per block of constant target
/// value the worst case reduces to an integer quadratic with rational
/// coefficients, checked exactly.
EmbeddingCertificate ech_embeds(const Rational& a, const EmbedTarget& target, std::size_t K,
                                EchLatticeSequence& source);

/// Contract-level wrapper: source must be a 2-factor ellipsoid E(1, a), a >= 1.
EmbeddingCertificate ech_embeds(const Ellipsoid& source, const EmbedTarget& target,
                                std::size_t K);

struct OracleInfimum {
  Rational value;         // max_{1<=k<=K} N(1,a)_k / u(k)
  std::size_t binding_k;  // smallest index attaining it
};

/// The exact threshold of the finite-K embedding predicate: R passes iff
/// R >= value.
OracleInfimum ech_oracle_infimum(const Rational& a, TargetKind kind, std::size_t K,
                                 EchLatticeSequence& source);

}  // namespace symcap
