#pragma once

#include "symcap/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <vector>

namespace symcap {

/// One factor capacity: a positive rational, or an unbounded C factor.
struct FactorCap {
  std::optional<Rational> value;  // nullopt means INFINITE

  static FactorCap infinite() { return {}; }
  static FactorCap finite(Rational r) { return {std::move(r)}; }
  bool is_finite() const { return value.has_value(); }
};

/// Factor list shared by ellipsoids and polydisks: finite entries positive and
/// sorted ascending, stored before any INFINITE entries, at least one finite.
class FactorList {
 public:
  explicit FactorList(std::vector<FactorCap> factors) {
    std::size_t infinite = 0;
    for (const auto& f : factors) {
      if (!f.is_finite()) {
        ++infinite;
        continue;
      }
      if (f.value->sign() <= 0)
        throw std::domain_error("factor capacities must be positive");
      finite_.push_back(*f.value);
    }
    if (finite_.empty()) throw std::domain_error("at least one finite factor required");
    std::sort(finite_.begin(), finite_.end());
    infinite_count_ = infinite;
  }

  static FactorList of(std::initializer_list<Rational> vals, std::size_t infinite_factors = 0) {
    std::vector<FactorCap> fs;
    for (const auto& v : vals) fs.push_back(FactorCap::finite(v));
    for (std::size_t i = 0; i < infinite_factors; ++i) fs.push_back(FactorCap::infinite());
    return FactorList(std::move(fs));
  }

  const std::vector<Rational>& finite_factors() const { return finite_; }
  std::size_t infinite_count() const { return infinite_count_; }
  std::size_t dimension_factors() const { return finite_.size() + infinite_count_; }

 private:
  std::vector<Rational> finite_;
  std::size_t infinite_count_ = 0;
};

struct Ellipsoid : FactorList {
  using FactorList::FactorList;
  static Ellipsoid make(std::initializer_list<Rational> vals, std::size_t inf = 0) {
    return Ellipsoid(FactorList::of(vals, inf));
  }
 private:
  explicit Ellipsoid(FactorList f) : FactorList(std::move(f)) {}
};

struct Polydisk : FactorList {
  using FactorList::FactorList;
  static Polydisk make(std::initializer_list<Rational> vals, std::size_t inf = 0) {
    return Polydisk(FactorList::of(vals, inf));
  }
 private:
  explicit Polydisk(FactorList f) : FactorList(std::move(f)) {}
};

}  // namespace symcap
