#include "symcap/eh.hpp"

#include <queue>
#include <utility>
#include <vector>

namespace symcap {

Rational eh_capacity(const Ellipsoid& e, std::size_t k) {
  if (k < 1) throw std::invalid_argument("eh_capacity: k must be >= 1");
  const auto& factors = e.finite_factors();
  // Min-heap of (current multiple, factor index).
  using Node = std::pair<Rational, std::size_t>;
  auto cmp = [](const Node& a, const Node& b) { return a.first > b.first; };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);
  std::vector<BigInt> multiple(factors.size(), 1);
  for (std::size_t i = 0; i < factors.size(); ++i) heap.push({factors[i], i});
  for (;;) {
    auto [val, i] = heap.top();
    heap.pop();
    if (--k == 0) return val;
    multiple[i] += 1;
    heap.push({factors[i] * Rational(multiple[i]), i});
  }
}

}  // namespace symcap
