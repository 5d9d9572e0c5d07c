#include <doctest.h>

#include <algorithm>
#include <set>

#include "balsat/hitting_set.hpp"
#include "balsat/rng.hpp"
#include "oracles/oracles.hpp"

using namespace balsat;

namespace {
bool hits_all(const ElementSet& chosen, const std::vector<ElementSet>& sets) {
  for (const auto& s : sets) {
    bool hit = false;
    for (auto x : s) hit |= std::find(chosen.begin(), chosen.end(), x) != chosen.end();
    if (!hit) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("small hitting sets") {
  const std::vector<ElementSet> sets{{0, 1}, {1, 2}, {2, 3}};
  const auto exact = minimum_hitting_set(4, sets);
  CHECK(exact.chosen.size() == 2);
  CHECK(hits_all(exact.chosen, sets));
  CHECK(minimum_hitting_set(4, std::vector<ElementSet>{}).chosen.empty());
  CHECK_THROWS_AS(minimum_hitting_set(4, std::vector<ElementSet>{{}}), std::invalid_argument);
  CHECK(greedy_hitting_set(4, sets).size() >= 2);
}

TEST_CASE("hitting sets against exhaustive search") {
  Philox4x32 rng(77);
  for (int t = 0; t < 150; ++t) {
    const std::size_t universe = 4 + rng.below(14);
    const std::size_t count = 1 + rng.below(20);
    std::vector<ElementSet> sets;
    for (std::size_t i = 0; i < count; ++i) {
      std::set<std::uint32_t> s;
      const std::size_t size = 1 + rng.below(5);
      while (s.size() < std::min(size, universe)) s.insert(static_cast<std::uint32_t>(rng.below(universe)));
      sets.emplace_back(s.begin(), s.end());
    }
    const auto exact = minimum_hitting_set(universe, sets);
    const auto greedy = greedy_hitting_set(universe, sets);
    CHECK(hits_all(exact.chosen, sets));
    CHECK(hits_all(greedy, sets));
    CHECK(exact.chosen.size() == oracle::min_hitting_set_size(sets));
    CHECK(greedy.size() >= exact.chosen.size());
  }
}

TEST_CASE("node budget refusal") {
  std::vector<ElementSet> sets;
  for (std::uint32_t i = 0; i < 30; ++i) sets.push_back({i, (i + 1) % 30, (i + 7) % 30});
  CHECK_THROWS_AS(minimum_hitting_set(30, sets, 3), BudgetExceeded);
}
