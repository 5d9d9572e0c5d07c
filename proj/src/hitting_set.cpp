#include "balsat/hitting_set.hpp"

#include <algorithm>
#include <string>

namespace balsat {

namespace {

void validate(std::size_t num_elements, std::span<const ElementSet> sets) {
  for (const auto& s : sets) {
    if (s.empty()) throw std::invalid_argument("hitting set: an empty set can never be hit");
    for (auto e : s) {
      if (e >= num_elements) throw std::invalid_argument("hitting set: element out of range");
    }
  }
}

std::vector<std::vector<std::uint32_t>> incidence(std::size_t num_elements,
                                                  std::span<const ElementSet> sets) {
  std::vector<std::vector<std::uint32_t>> in(num_elements);
  for (std::uint32_t i = 0; i < sets.size(); ++i) {
    for (auto e : sets[i]) in[e].push_back(i);
  }
  return in;
}

class BranchAndBound {
 public:
  BranchAndBound(std::size_t num_elements, std::span<const ElementSet> sets, std::uint64_t budget)
      : sets_(sets),
        in_(incidence(num_elements, sets)),
        hits_(sets.size(), 0),
        excluded_(num_elements, 0),
        mark_(num_elements, 0),
        budget_(budget) {}

  HittingSetResult solve(ElementSet incumbent) {
    best_ = std::move(incumbent);
    recurse();
    std::sort(best_.begin(), best_.end());
    return {best_, nodes_};
  }

 private:
  void choose(std::uint32_t e) {
    chosen_.push_back(e);
    for (auto s : in_[e]) ++hits_[s];
  }
  void unchoose(std::uint32_t e) {
    chosen_.pop_back();
    for (auto s : in_[e]) --hits_[s];
  }

  std::size_t available(const ElementSet& s) const {
    std::size_t a = 0;
    for (auto e : s) a += excluded_[e] == 0;
    return a;
  }

  std::size_t lower_bound(const std::vector<std::uint32_t>& unhit) {
    // Disjoint packing over available elements.
    ++mark_clock_;
    std::size_t packing = 0;
    for (auto i : unhit) {
      const auto& s = sets_[i];
      const bool disjoint = std::none_of(s.begin(), s.end(), [&](std::uint32_t e) {
        return excluded_[e] == 0 && mark_[e] == mark_clock_;
      });
      if (!disjoint) continue;
      ++packing;
      for (auto e : s) mark_[e] = mark_clock_;
    }
    // Each new element hits at most max_degree unhit sets.
    std::size_t max_degree = 0;
    for (std::uint32_t e = 0; e < in_.size(); ++e) {
      if (excluded_[e]) continue;
      std::size_t d = 0;
      for (auto s : in_[e]) d += hits_[s] == 0;
      max_degree = std::max(max_degree, d);
    }
    const std::size_t by_degree = max_degree == 0 ? unhit.size() : (unhit.size() + max_degree - 1) / max_degree;
    return std::max(packing, by_degree);
  }

  void recurse() {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("minimum hitting set exceeded " + std::to_string(budget_) + " nodes");
    }
    std::vector<std::uint32_t> unhit;
    for (std::uint32_t i = 0; i < sets_.size(); ++i) {
      if (hits_[i] != 0) continue;
      if (available(sets_[i]) == 0) return;  // this set can no longer be hit in this branch
      unhit.push_back(i);
    }
    if (unhit.empty()) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    std::sort(unhit.begin(), unhit.end(), [&](std::uint32_t a, std::uint32_t b) {
      const auto aa = available(sets_[a]);
      const auto ab = available(sets_[b]);
      return aa != ab ? aa < ab : a < b;
    });
    if (chosen_.size() + lower_bound(unhit) >= best_.size()) return;

    // Most constrained unhit set first.
    const ElementSet& target = sets_[unhit.front()];
    std::vector<std::uint32_t> newly_excluded;
    for (auto e : target) {
      if (excluded_[e]) continue;
      choose(e);
      recurse();
      unchoose(e);
      // Later siblings never use e: those subtrees were covered here.
      excluded_[e] = 1;
      newly_excluded.push_back(e);
    }
    for (auto e : newly_excluded) excluded_[e] = 0;
  }

  std::span<const ElementSet> sets_;
  std::vector<std::vector<std::uint32_t>> in_;
  std::vector<std::uint32_t> hits_;
  std::vector<char> excluded_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t mark_clock_ = 0;
  ElementSet chosen_;
  ElementSet best_;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_;
};

}  // namespace

ElementSet greedy_hitting_set(std::size_t num_elements, std::span<const ElementSet> sets) {
  validate(num_elements, sets);
  const auto in = incidence(num_elements, sets);
  std::vector<char> hit(sets.size(), 0);
  std::vector<std::size_t> degree(num_elements, 0);
  for (std::uint32_t e = 0; e < num_elements; ++e) degree[e] = in[e].size();
  std::size_t remaining = sets.size();
  ElementSet chosen;
  while (remaining > 0) {
    const auto best = static_cast<std::uint32_t>(
        std::max_element(degree.begin(), degree.end()) - degree.begin());
    chosen.push_back(best);
    for (auto s : in[best]) {
      if (hit[s]) continue;
      hit[s] = 1;
      --remaining;
      for (auto e : sets[s]) --degree[e];
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

HittingSetResult minimum_hitting_set(std::size_t num_elements, std::span<const ElementSet> sets,
                                     std::uint64_t node_budget) {
  validate(num_elements, sets);
  if (sets.empty()) return {};
  BranchAndBound bnb(num_elements, sets, node_budget);
  return bnb.solve(greedy_hitting_set(num_elements, sets));
}

}  // namespace balsat
