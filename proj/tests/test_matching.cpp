#include <doctest.h>

#include <algorithm>

#include "bincover/exact.hpp"
#include "bincover/generators.hpp"
#include "bincover/matching.hpp"

using namespace bincover;

namespace {

Instance generalized_unit(std::vector<std::pair<Rat, Rat>> bins, std::vector<Rat> items) {
  Instance inst;
  inst.supply = Supply::kUnit;
  inst.problem_class = ProblemClass::kGeneralized;
  for (auto& [p, d] : bins) inst.bins.push_back({p, d});
  inst.items = std::move(items);
  return inst;
}

// Reference maximum over all matchings, m <= ~10, n <= ~16: per-bin DP over
// used-item bitmasks.
Rat brute_force_matching(const BipartiteGraph& g) {
  const std::size_t m = g.num_bins();
  const std::size_t n = g.num_items();
  REQUIRE(n <= 16);
  std::vector<Rat> dp(std::size_t{1} << n, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rat> next = dp;
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
      for (std::size_t j = 0; j < n; ++j) {
        if (mask & (std::size_t{1} << j)) continue;
        if (!g.has_edge(i, j)) continue;
        const Rat candidate = dp[mask] + g.profits[i];
        const std::size_t to = mask | (std::size_t{1} << j);
        if (candidate > next[to]) next[to] = candidate;
      }
    }
    dp = std::move(next);
  }
  Rat best;
  for (const Rat& v : dp) {
    if (v > best) best = v;
  }
  return best;
}

bool is_valid_matching(const BipartiteGraph& g, const Matching& m) {
  std::vector<bool> bin_used(g.num_bins(), false), item_used(g.num_items(), false);
  Rat weight;
  for (const auto& [bin, item] : m.pairs) {
    if (bin_used[bin] || item_used[item]) return false;
    bin_used[bin] = true;
    item_used[item] = true;
    if (!g.has_edge(bin, item)) return false;
    weight += g.profits[bin];
  }
  return weight == m.weight;
}

}  // namespace

TEST_CASE("graph edges are the strict overshoot pairs") {
  const auto one = build_graph(generalized_unit({{Rat(2), Rat(1)}}, {Rat(2)}));
  CHECK(one.edge_count() == 1);
  CHECK(one.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}});

  // s == d is not an edge; singular coverage needs strict overshoot.
  const auto boundary = build_graph(generalized_unit({{Rat(2), Rat(1)}}, {Rat(1)}));
  CHECK(boundary.edge_count() == 0);

  const auto table =
      build_graph(generalized_unit({{Rat(3), Rat(2)}, {Rat(1), Rat(1)}}, {Rat(3), Rat(3, 2)}));
  CHECK(table.edges() ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 0}, {1, 1}});
}

TEST_CASE("graph construction needs unit supply") {
  Instance inst = generalized_unit({{Rat(1), Rat(1)}}, {Rat(2)});
  inst.supply = Supply::kInfinite;
  CHECK_THROWS_AS(build_graph(inst), UsageError);
}

TEST_CASE("hand-sized matchings") {
  BipartiteGraph empty;
  const Matching none = max_weight_matching(empty);
  CHECK(none.pairs.empty());
  CHECK(none.weight == Rat(0));

  const auto two =
      build_graph(generalized_unit({{Rat(3), Rat(2)}, {Rat(1), Rat(1)}}, {Rat(3), Rat(3, 2)}));
  const Matching m2 = max_weight_matching(two);
  CHECK(m2.weight == Rat(4));
  CHECK(m2.pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}});

  // One item, two bins: the more profitable one wins.
  const auto scarce =
      build_graph(generalized_unit({{Rat(3), Rat(2)}, {Rat(2), Rat(2)}}, {Rat(5, 2)}));
  const Matching m1 = max_weight_matching(scarce);
  CHECK(m1.weight == Rat(3));
  REQUIRE(m1.pairs.size() == 1);
  CHECK(m1.pairs[0].first == 0);
}

TEST_CASE("matched bins form a covered, valid assignment") {
  const Instance inst = generalized_unit(
      {{Rat(3), Rat(2)}, {Rat(1), Rat(1)}, {Rat(5), Rat(4)}}, {Rat(3), Rat(3, 2), Rat(9, 2)});
  const Matching m = max_weight_matching(build_graph(inst));
  const Assignment a = matching_assignment(m);
  CHECK(validate(inst, a).empty());
  CHECK(profit(inst, a) == m.weight);  // every matched bin is covered
}

TEST_CASE("agrees with brute force on random graphs") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    RandomSpec spec;
    spec.n = seed % 9;
    spec.m = 1 + seed % 8;
    spec.seed = 50000 + seed;
    spec.problem_class = ProblemClass::kGeneralized;
    spec.demand_lo = Rat(1, 4);
    spec.demand_hi = Rat(3);
    spec.size_lo = Rat(1, 4);
    spec.size_hi = Rat(3);
    const BipartiteGraph g = build_graph(gen_random(spec));
    const Matching m = max_weight_matching(g);
    CHECK(is_valid_matching(g, m));
    CHECK(m.weight == brute_force_matching(g));
  }
}

TEST_CASE("at least the singular profit of any oracle solution") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    RandomSpec spec;
    spec.n = 1 + seed % 6;
    spec.m = 1 + seed % 5;
    spec.seed = 90000 + seed;
    spec.problem_class = ProblemClass::kGeneralized;
    const Instance inst = gen_random(spec);
    const ExactResult oracle = exact_opt_unit(inst);
    Rat singular;
    for (const BinSlot& slot : oracle.witness.slots) {
      if (slot.items.size() != 1) continue;
      if (inst.items[slot.items[0]] > inst.bins[slot.type].demand)
        singular += inst.bins[slot.type].profit;
    }
    const Matching m = max_weight_matching(build_graph(inst));
    CHECK(m.weight >= singular);
  }
}
