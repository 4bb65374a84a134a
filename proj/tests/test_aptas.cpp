#include <doctest.h>

#include "bincover/aptas.hpp"
#include "bincover/exact.hpp"
#include "bincover/generators.hpp"

using namespace bincover;

namespace {

Instance infinite_variable(std::vector<Rat> demands, std::vector<Rat> items) {
  Instance inst;
  inst.supply = Supply::kInfinite;
  inst.problem_class = ProblemClass::kVariableSized;
  for (Rat& d : demands) inst.bins.push_back({d, d});
  inst.items = std::move(items);
  return inst;
}

}  // namespace

TEST_CASE("pruning normalizes, commits oversize items and drops small types") {
  const Instance inst = infinite_variable({Rat(8), Rat(4), Rat(2), Rat(1, 2)},
                                          {Rat(9), Rat(3), Rat(1)});
  const PruneResult pr = prune_small_bins(inst, Rat(1, 10));
  CHECK(pr.scale == Rat(8));
  REQUIRE(pr.types.size() == 3);  // 1, 1/2, 1/4 survive; 1/16 <= 1/10 dropped
  CHECK(pr.types[0].demand == Rat(1));
  CHECK(pr.types[1].demand == Rat(1, 2));
  CHECK(pr.types[2].demand == Rat(1, 4));
  CHECK(pr.type_map == std::vector<std::size_t>{0, 1, 2});
  REQUIRE(pr.oversize_items.size() == 1);  // 9/8 >= 1
  CHECK(pr.oversize_items[0] == 0);
  CHECK(pr.committed_profit == Rat(8));
  REQUIRE(pr.item_sizes.size() == 2);
  CHECK(pr.item_sizes[0] == Rat(3, 8));
  CHECK(pr.item_sizes[1] == Rat(1, 8));
}

TEST_CASE("pruning merges duplicate demands") {
  const Instance inst = infinite_variable({Rat(2), Rat(4), Rat(4), Rat(2)}, {Rat(1)});
  const PruneResult pr = prune_small_bins(inst, Rat(1, 10));
  REQUIRE(pr.types.size() == 2);
  CHECK(pr.types[0].demand == Rat(1));
  CHECK(pr.types[1].demand == Rat(1, 2));
  CHECK(pr.type_map == std::vector<std::size_t>{1, 0});  // first input bin of each demand
}

TEST_CASE("pruning rejects the wrong instance kind") {
  Instance unit = infinite_variable({Rat(1)}, {Rat(1, 2)});
  unit.supply = Supply::kUnit;
  CHECK_THROWS_AS(prune_small_bins(unit, Rat(1, 10)), UsageError);

  Instance generalized = infinite_variable({Rat(1)}, {Rat(1, 2)});
  generalized.problem_class = ProblemClass::kGeneralized;
  for (auto& b : generalized.bins) b.profit = Rat(2);
  CHECK_THROWS_AS(prune_small_bins(generalized, Rat(1, 10)), UsageError);
}

TEST_CASE("small inputs put every item in the large class") {
  AptasParams params;  // eps = 1/10
  const std::vector<Rat> items{Rat(1, 2), Rat(1, 3), Rat(1, 4)};
  const GroupedItems g = classify_and_group(items, params);
  CHECK(g.num_large == 3);
  CHECK(g.num_medium == 0);
  CHECK(g.num_tiny() == 0);
  CHECK(g.tiny_total == Rat(0));
}

TEST_CASE("grouping splits seven items three-two-two under a three-group override") {
  AptasParams params;
  params.group_count = 3;
  std::vector<Rat> items;
  for (long v = 9; v >= 3; --v) items.push_back(Rat(v, 10));
  const GroupedItems g = classify_and_group(items, params);
  REQUIRE(g.groups.size() == 3);
  CHECK(g.groups[0].end - g.groups[0].begin == 3);
  CHECK(g.groups[1].end - g.groups[1].begin == 2);
  CHECK(g.groups[2].end - g.groups[2].begin == 2);
  // Rounded to each group's smallest member.
  CHECK(g.groups[0].rounded_size == Rat(7, 10));
  CHECK(g.groups[1].rounded_size == Rat(5, 10));
  CHECK(g.groups[2].rounded_size == Rat(3, 10));
  // Rounding never increases a size.
  for (const auto& group : g.groups) {
    for (std::size_t t = group.begin; t < group.end; ++t) {
      CHECK(group.rounded_size <= items[g.order[t]]);
    }
  }
}

TEST_CASE("uniform sizes collapse to one class and rounding is the identity") {
  AptasParams params;
  params.group_count = 4;
  const std::vector<Rat> items(6, Rat(2, 5));
  const GroupedItems g = classify_and_group(items, params);
  CHECK(g.groups.size() == 4);
  REQUIRE(g.class_sizes.size() == 1);
  CHECK(g.class_sizes[0] == Rat(2, 5));
  CHECK(g.class_count[0] == 6);
}

TEST_CASE("configuration enumeration with one class") {
  GroupedItems g;
  g.class_sizes = {Rat(3, 5)};
  g.class_count = {2};
  g.tiny_total = Rat(2, 5);
  const std::vector<BinType> types{{Rat(1), Rat(1)}};
  const auto configs = enumerate_configurations(g, types, 1000);
  REQUIRE(configs.size() == 3);  // u in {0, 1, 2}
  CHECK(!configs[0].covers.has_value());
  CHECK(config_remainder(configs[0], types[0]) == Rat(1));
  CHECK(!configs[1].covers.has_value());
  CHECK(config_remainder(configs[1], types[0]) == Rat(2, 5));
  REQUIRE(configs[2].covers.has_value());
  CHECK(*configs[2].covers == 0);
  CHECK(configs[2].total == Rat(6, 5));

  // Covering configurations belong to exactly one type class.
  for (const auto& c : configs) {
    if (!c.covers) continue;
    CHECK(c.total >= types[*c.covers].demand);
    if (*c.covers > 0) CHECK(c.total < types[*c.covers - 1].demand);
  }
}

TEST_CASE("no large classes leaves only the zero configuration") {
  GroupedItems g;  // empty large set
  const std::vector<BinType> types{{Rat(1), Rat(1)}};
  const auto configs = enumerate_configurations(g, types, 10);
  REQUIRE(configs.size() == 1);
  CHECK(configs[0].counts.empty());
  CHECK(configs[0].total == Rat(0));
  CHECK(!configs[0].covers.has_value());
}

TEST_CASE("enumeration respects the budget") {
  GroupedItems g;
  g.class_sizes = {Rat(1, 100), Rat(1, 101), Rat(1, 102)};
  g.class_count = {50, 50, 50};
  const std::vector<BinType> types{{Rat(1), Rat(1)}};
  CHECK_THROWS_AS(enumerate_configurations(g, types, 100), CapExceeded);
}

TEST_CASE("configuration lp matches the hand-computed optimum") {
  GroupedItems g;
  g.class_sizes = {Rat(3, 5)};
  g.class_count = {2};
  g.tiny_total = Rat(2, 5);
  const std::vector<BinType> types{{Rat(1), Rat(1)}};
  const auto configs = enumerate_configurations(g, types, 1000);
  const Lp2Model model = build_lp2(g, types, configs);

  // One y (u=2), one z per non-covering configuration (u=0, u=1).
  CHECK(model.y_configs.size() == 1);
  CHECK(model.z_pairs.size() == 2);
  CHECK(model.lp.rows.size() == 2);  // one class row + the tiny row

  const LpSolution sol = lp_solve(model.lp);
  // y=1/2, z(u=1)=1, z(u=0)=0: profit 3/2 beats the all-integral 1.
  CHECK(sol.objective == Rat(3, 2));
}

TEST_CASE("rounding floors the lp and the pipeline stays feasible") {
  // Three half-size items on unit bins: LP packs two per bin (y = 3/2), the
  // floor opens one bin, and the loss stays under the fractional count.
  const Instance inst = infinite_variable({Rat(1)}, {Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  AptasParams params;
  params.group_count = 1;
  const AptasResult r = aptas_solve(inst, params);
  CHECK(r.stats.lp_objective == Rat(3, 2));
  CHECK(r.value == Rat(1));
  CHECK(r.stats.fractional_values <= 2);
  CHECK(validate(inst, r.assignment).empty());
  for (const BinSlot& slot : r.assignment.slots) {
    CHECK(slot_fill(inst, slot) >= inst.bins[slot.type].demand);
  }
}

TEST_CASE("items covering a bin alone are committed upfront") {
  const Instance inst = infinite_variable({Rat(1)}, {Rat(1), Rat(1), Rat(1)});
  AptasParams params;
  params.group_count = 2;
  const AptasResult r = aptas_solve(inst, params);
  CHECK(r.value == Rat(3));
  CHECK(r.stats.committed_oversize == 3);
  CHECK(r.assignment.slots.size() == 3);
}

TEST_CASE("no items means only committed profit") {
  const Instance inst = infinite_variable({Rat(1)}, {});
  AptasParams params;
  params.group_count = 1;
  const AptasResult r = aptas_solve(inst, params);
  CHECK(r.value == Rat(0));
  CHECK(r.assignment.slots.empty());
}

TEST_CASE("tiny items flow through the z-bins") {
  // 300 items of size 1/2000 against demands {1, 11/100}: no configuration
  // covers a type, so all profit comes from z-bins whose remainders the tiny
  // volume pays for.
  Instance inst;
  inst.supply = Supply::kInfinite;
  inst.problem_class = ProblemClass::kVariableSized;
  inst.bins.push_back({Rat(1), Rat(1)});
  inst.bins.push_back({Rat(11, 100), Rat(11, 100)});
  for (int j = 0; j < 300; ++j) inst.items.push_back(Rat(1, 2000));
  AptasParams params;  // eps = 1/10, k = 1/eps^4 clamped to |L|
  const AptasResult r = aptas_solve(inst, params);

  CHECK(r.stats.num_large == 150);
  CHECK(r.stats.num_medium == 1);
  CHECK(r.stats.num_tiny == 149);
  CHECK(r.stats.size_classes == 1);
  CHECK(r.stats.lp_objective.is_positive());
  CHECK(validate(inst, r.assignment).empty());
  // The rounding may floor everything away here; the contract is only the
  // bounded loss and feasibility of whatever opened.
  CHECK(r.value >= (r.stats.lp_objective - Rat(static_cast<long>(1 + r.stats.size_classes))) *
                       r.stats.scale);
  for (const BinSlot& slot : r.assignment.slots) {
    CHECK(slot_fill(inst, slot) >= inst.bins[slot.type].demand);
  }
  CHECK(profit(inst, r.assignment) == r.value);
}

TEST_CASE("z-bins are topped up with leftover items, largest first") {
  GroupedItems g;
  g.order = {0, 1, 2, 3};
  g.num_large = 2;
  g.num_medium = 0;
  g.tiny_total = Rat(2, 5);
  g.groups.push_back({0, 2, Rat(3, 5), 0});
  g.class_sizes = {Rat(3, 5)};
  g.class_count = {2};
  const std::vector<Rat> item_sizes{Rat(3, 5), Rat(3, 5), Rat(1, 5), Rat(1, 5)};
  const std::vector<BinType> types{{Rat(1), Rat(1)}};
  const auto configs = enumerate_configurations(g, types, 1000);
  const Lp2Model model = build_lp2(g, types, configs);

  // Hand-picked integral solution: one bin of configuration u=1, nothing else.
  LpSolution sol;
  sol.status = LpStatus::kOptimal;
  sol.values.assign(model.lp.num_vars, Rat(0));
  for (std::size_t v = 0; v < model.z_pairs.size(); ++v) {
    if (configs[model.z_pairs[v].first].total == Rat(3, 5)) {
      sol.values[model.y_configs.size() + v] = Rat(1);
    }
  }
  const RoundFillResult rf = round_and_fill(g, types, configs, model, sol, item_sizes);
  CHECK(rf.value == Rat(1));
  REQUIRE(rf.assignment.slots.size() == 1);
  // One large in the configuration slot, the other large tops up the 2/5 gap.
  CHECK(rf.assignment.slots[0].items == std::vector<std::size_t>{0, 1});
}

TEST_CASE("parameter validation") {
  const Instance inst = infinite_variable({Rat(1)}, {Rat(1, 2)});
  AptasParams bad_eps;
  bad_eps.eps = Rat(1, 2);
  CHECK_THROWS_AS(aptas_solve(inst, bad_eps), UsageError);
  bad_eps.eps = Rat(0);
  CHECK_THROWS_AS(aptas_solve(inst, bad_eps), UsageError);
  AptasParams bad_k;
  bad_k.group_count = 0;
  CHECK_THROWS_AS(aptas_solve(inst, bad_k), UsageError);
}

TEST_CASE("structural guarantees on random tiny instances") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RandomSpec spec;
    spec.n = 1 + seed % 10;
    spec.m = 1 + seed % 3;
    spec.seed = 420000 + seed;
    spec.supply = Supply::kInfinite;
    spec.demand_lo = Rat(1, 2);
    spec.demand_hi = Rat(4);
    spec.size_lo = Rat(1, 4);
    spec.size_hi = Rat(4);
    const Instance inst = gen_random(spec);
    for (std::size_t k : {1, 2, 3}) {
      AptasParams params;
      params.group_count = k;
      const AptasResult r = aptas_solve(inst, params);
      CHECK(validate(inst, r.assignment).empty());
      CHECK(profit(inst, r.assignment) == r.value);
      // Profit in normalized units loses at most the fractional count, which
      // itself is at most the LP row count.
      const Rat normalized = (r.value - r.stats.committed_profit) / r.stats.scale;
      CHECK(r.stats.fractional_values <= r.stats.lp_rows);
      CHECK(normalized >=
            r.stats.lp_objective - Rat(static_cast<long>(1 + r.stats.size_classes)));
      // Never above the exact optimum.
      CHECK(r.value <= exact_opt_infinite(inst));
    }
  }
}

TEST_CASE("configuration lp upper-bounds integral solutions of the rounded instance") {
  std::size_t exercised = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RandomSpec spec;
    spec.n = 2 + seed % 7;
    spec.m = 1 + seed % 3;
    spec.seed = 660000 + seed;
    spec.supply = Supply::kInfinite;
    spec.demand_lo = Rat(1, 2);
    spec.demand_hi = Rat(4);
    spec.size_lo = Rat(1, 4);
    spec.size_hi = Rat(4);
    const Instance inst = gen_random(spec);
    const PruneResult pruned = prune_small_bins(inst, Rat(1, 10));
    if (pruned.item_sizes.empty() || pruned.types.empty()) continue;
    AptasParams params;
    params.group_count = 1 + seed % 3;
    const GroupedItems g = classify_and_group(pruned.item_sizes, params);
    if (g.num_medium != 0) continue;  // the comparison instance excludes M
    const auto configs = enumerate_configurations(g, pruned.types, params.config_budget);
    const Lp2Model model = build_lp2(g, pruned.types, configs);
    const LpSolution sol = lp_solve(model.lp);
    REQUIRE(sol.status == LpStatus::kOptimal);

    // Exact optimum over the rounded large items plus the tiny ones, using
    // only the surviving types; the LP must dominate it.
    Instance rounded;
    rounded.supply = Supply::kInfinite;
    rounded.problem_class = ProblemClass::kVariableSized;
    rounded.bins = pruned.types;
    for (const auto& group : g.groups) {
      for (std::size_t t = group.begin; t < group.end; ++t)
        rounded.items.push_back(group.rounded_size);
    }
    for (std::size_t t = g.num_large; t < g.order.size(); ++t)
      rounded.items.push_back(pruned.item_sizes[g.order[t]]);
    ++exercised;
    CHECK(exact_opt_infinite(rounded) <= sol.objective);
  }
  CHECK(exercised > 10);
}

TEST_CASE("grouped rounding never increases total size") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomSpec spec;
    spec.n = 2 + seed % 9;
    spec.m = 1;
    spec.seed = 510000 + seed;
    spec.supply = Supply::kInfinite;
    const Instance inst = gen_random(spec);
    const PruneResult pr = prune_small_bins(inst, Rat(1, 10));
    AptasParams params;
    params.group_count = 1 + seed % 4;
    const GroupedItems g = classify_and_group(pr.item_sizes, params);
    Rat rounded_total, original_total;
    for (const auto& group : g.groups) {
      for (std::size_t t = group.begin; t < group.end; ++t) {
        rounded_total += group.rounded_size;
        original_total += pr.item_sizes[g.order[t]];
      }
    }
    CHECK(rounded_total <= original_total);
  }
}
