#pragma once

#include "symcap/domains.hpp"
#include "symcap/rational.hpp"

#include <cstddef>

namespace symcap {

/// k-th smallest element (with multiplicity, k >= 1) of the multiset
/// {m * a_i : m >= 1} over the finite factors a_i of E. INFINITE factors
/// contribute nothing.
Rational eh_capacity(const Ellipsoid& e, std::size_t k);

}  // namespace symcap
