#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace balsat {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ElementSet = std::vector<std::uint32_t>;

/// Repeatedly takes the element lying in the most not-yet-hit sets (smallest id on ties).
ElementSet greedy_hitting_set(std::size_t num_elements, std::span<const ElementSet> sets);

struct HittingSetResult {
  ElementSet chosen;  // sorted
  std::uint64_t nodes = 0;
};

/// Minimum hitting set by branch and bound: branch on the elements of the most
/// constrained unhit set, bound with max(disjoint packing, unhit / max degree),
/// greedy incumbent. Throws BudgetExceeded past `node_budget` search nodes.
/// An empty set in `sets` cannot be hit and raises std::invalid_argument.
HittingSetResult minimum_hitting_set(std::size_t num_elements, std::span<const ElementSet> sets,
                                     std::uint64_t node_budget = 20'000'000);

}  // namespace balsat
