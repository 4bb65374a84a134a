// Copyright 2026 The bincover authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bincover/aptas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bincover {

namespace {

void check_params(const AptasParams& params) {
  if (!params.eps.is_positive() || params.eps > Rat(1, 10))
    throw UsageError("aptas requires 0 < eps <= 1/10");
  if (params.group_count && *params.group_count == 0)
    throw UsageError("aptas group override must be positive");
}

}  // namespace

PruneResult prune_small_bins(const Instance& inst, const Rat& eps) {
  check_instance(inst);
  if (inst.supply != Supply::kInfinite) throw UsageError("aptas needs infinite supply");
  if (inst.problem_class != ProblemClass::kVariableSized)
    throw UsageError("aptas needs a variable-sized instance");

  PruneResult out;
  out.scale = inst.bins[0].demand;
  for (const BinType& b : inst.bins) out.scale = max(out.scale, b.demand);

  // Demands sorted decreasing, duplicates merged (copies of equal types are
  // interchangeable under infinite supply), small types dropped.
  std::vector<std::size_t> by_demand(inst.num_bins());
  std::iota(by_demand.begin(), by_demand.end(), std::size_t{0});
  std::stable_sort(by_demand.begin(), by_demand.end(), [&](std::size_t a, std::size_t b) {
    return inst.bins[a].demand > inst.bins[b].demand;
  });
  for (std::size_t i : by_demand) {
    const Rat demand = inst.bins[i].demand / out.scale;
    if (demand <= eps) continue;
    if (!out.types.empty() && out.types.back().demand == demand) continue;
    out.types.push_back({demand, demand});
    out.type_map.push_back(i);
  }

  for (std::size_t j = 0; j < inst.num_items(); ++j) {
    const Rat size = inst.items[j] / out.scale;
    if (size >= Rat(1)) {
      out.oversize_items.push_back(j);
      out.committed_profit += out.scale;
    } else {
      out.item_sizes.push_back(size);
      out.item_map.push_back(j);
    }
  }
  return out;
}

GroupedItems classify_and_group(const std::vector<Rat>& item_sizes, const AptasParams& params) {
  check_params(params);
  GroupedItems g;
  const std::size_t n = item_sizes.size();
  g.order.resize(n);
  std::iota(g.order.begin(), g.order.end(), std::size_t{0});
  std::stable_sort(g.order.begin(), g.order.end(),
                   [&](std::size_t a, std::size_t b) { return item_sizes[a] > item_sizes[b]; });
  if (n == 0) return g;

  Rat total;
  for (const Rat& s : item_sizes) total += s;

  const Rat inv_eps = Rat(1) / params.eps;
  const mpz_class large_quota = (total * inv_eps * inv_eps * inv_eps).ceil();
  const mpz_class medium_quota = (total * inv_eps).floor();
  if (mpz_class(n) < large_quota + medium_quota) {
    g.num_large = n;
    g.num_medium = 0;
  } else {
    g.num_large = large_quota.get_ui();
    g.num_medium = medium_quota.get_ui();
  }
  for (std::size_t t = g.num_large + g.num_medium; t < n; ++t)
    g.tiny_total += item_sizes[g.order[t]];

  // k groups of nearly equal cardinality over L; the first q groups take the
  // extra item. Rounding is to the group's smallest member.
  mpz_class k_req;
  if (params.group_count) {
    k_req = static_cast<unsigned long>(*params.group_count);
  } else {
    const Rat k4 = inv_eps * inv_eps * inv_eps * inv_eps;
    k_req = k4.ceil();
  }
  const std::size_t k =
      k_req >= mpz_class(g.num_large) ? g.num_large : k_req.get_ui();
  g.group_target = k;
  if (g.num_large == 0) return g;

  const std::size_t per = g.num_large / k;
  const std::size_t extra = g.num_large % k;
  std::size_t begin = 0;
  for (std::size_t gi = 0; gi < k; ++gi) {
    const std::size_t size = per + (gi < extra ? 1 : 0);
    if (size == 0) break;
    GroupedItems::Group group;
    group.begin = begin;
    group.end = begin + size;
    group.rounded_size = item_sizes[g.order[group.end - 1]];
    begin = group.end;
    if (g.class_sizes.empty() || g.class_sizes.back() != group.rounded_size) {
      g.class_sizes.push_back(group.rounded_size);
      g.class_count.push_back(size);
    } else {
      g.class_count.back() += size;
    }
    group.size_class = g.class_sizes.size() - 1;
    g.groups.push_back(group);
  }
  return g;
}

std::vector<Configuration> enumerate_configurations(const GroupedItems& g,
                                                    const std::vector<BinType>& types,
                                                    std::size_t budget) {
  if (types.empty()) throw UsageError("configuration enumeration needs at least one type");
  const Rat bound = Rat(2) * types[0].demand;
  const std::size_t num_classes = g.class_sizes.size();

  std::vector<Configuration> configs;
  std::vector<std::uint32_t> counts(num_classes, 0);

  auto covers_of = [&](const Rat& total) -> std::optional<std::size_t> {
    // Types are strictly decreasing in demand; the first covered one is the
    // most demanding type the configuration pays for.
    for (std::size_t j = 0; j < types.size(); ++j) {
      if (total >= types[j].demand) return j;
    }
    return std::nullopt;
  };

  // Lexicographic depth-first enumeration.
  auto rec = [&](auto&& self, std::size_t cls, const Rat& partial) -> void {
    if (cls == num_classes) {
      if (configs.size() >= budget)
        throw CapExceeded("configuration budget of " + std::to_string(budget) + " exceeded");
      Configuration c;
      c.counts = counts;
      c.total = partial;
      c.covers = covers_of(partial);
      configs.push_back(std::move(c));
      return;
    }
    Rat running = partial;
    for (std::uint32_t u = 0;; ++u) {
      if (u > 0) running += g.class_sizes[cls];
      if (running > bound || u > g.class_count[cls]) break;
      counts[cls] = u;
      self(self, cls + 1, running);
    }
    counts[cls] = 0;
  };
  rec(rec, 0, Rat(0));
  return configs;
}

Rat config_remainder(const Configuration& c, const BinType& type) {
  return type.demand - c.total;
}

Lp2Model build_lp2(const GroupedItems& g, const std::vector<BinType>& types,
                   const std::vector<Configuration>& configs) {
  Lp2Model model;
  LpProblem& lp = model.lp;
  const std::size_t num_classes = g.class_sizes.size();

  for (std::size_t i = 0; i < configs.size(); ++i) {
    if (!configs[i].covers) continue;
    lp.add_var(types[*configs[i].covers].demand);
    model.y_configs.push_back(i);
  }
  for (std::size_t i = 0; i < configs.size(); ++i) {
    for (std::size_t j = 0; j < types.size(); ++j) {
      if (!config_remainder(configs[i], types[j]).is_positive()) continue;
      lp.add_var(types[j].demand);
      model.z_pairs.emplace_back(i, j);
    }
  }

  std::vector<LpRow> rows(num_classes);
  for (std::size_t l = 0; l < num_classes; ++l) {
    rows[l].sense = Sense::kLe;
    rows[l].rhs = Rat(static_cast<long>(g.class_count[l]));
  }
  LpRow tiny;
  tiny.sense = Sense::kLe;
  tiny.rhs = g.tiny_total;

  for (std::size_t v = 0; v < model.y_configs.size(); ++v) {
    const Configuration& c = configs[model.y_configs[v]];
    for (std::size_t l = 0; l < num_classes; ++l) {
      if (c.counts[l] > 0) rows[l].coeffs.emplace_back(v, Rat(static_cast<long>(c.counts[l])));
    }
  }
  const std::size_t z_base = model.y_configs.size();
  for (std::size_t v = 0; v < model.z_pairs.size(); ++v) {
    const auto& [ci, tj] = model.z_pairs[v];
    const Configuration& c = configs[ci];
    for (std::size_t l = 0; l < num_classes; ++l) {
      if (c.counts[l] > 0)
        rows[l].coeffs.emplace_back(z_base + v, Rat(static_cast<long>(c.counts[l])));
    }
    tiny.coeffs.emplace_back(z_base + v, config_remainder(c, types[tj]));
  }
  for (auto& row : rows) lp.rows.push_back(std::move(row));
  lp.rows.push_back(std::move(tiny));
  return model;
}

namespace {

unsigned long floor_value(const Rat& v) {
  const mpz_class f = v.floor();
  if (f < 0) throw std::logic_error("round_and_fill: negative LP value");
  if (!f.fits_ulong_p()) throw std::logic_error("round_and_fill: LP value out of range");
  return f.get_ui();
}

}  // namespace

RoundFillResult round_and_fill(const GroupedItems& g, const std::vector<BinType>& types,
                               const std::vector<Configuration>& configs, const Lp2Model& model,
                               const LpSolution& sol, const std::vector<Rat>& item_sizes) {
  RoundFillResult out;

  // Per-class pools of original items, largest first.
  const std::size_t num_classes = g.class_sizes.size();
  std::vector<std::vector<std::size_t>> pool(num_classes);
  for (const auto& group : g.groups) {
    for (std::size_t t = group.begin; t < group.end; ++t)
      pool[group.size_class].push_back(g.order[t]);
  }
  std::vector<std::size_t> pool_next(num_classes, 0);
  std::vector<std::size_t> copies(types.size(), 0);

  struct PendingFill {
    std::size_t slot;  // index into out.assignment.slots
    Rat remainder;
    Rat placed;
  };
  std::vector<PendingFill> pending;

  auto open_bin = [&](std::size_t config, std::size_t type) -> std::size_t {
    BinSlot slot;
    slot.type = type;
    slot.copy = copies[type]++;
    for (std::size_t l = 0; l < num_classes; ++l) {
      for (std::uint32_t u = 0; u < configs[config].counts[l]; ++u) {
        if (pool_next[l] >= pool[l].size())
          throw std::logic_error("round_and_fill: configuration slots exceed multiplicities");
        slot.items.push_back(pool[l][pool_next[l]++]);
      }
    }
    out.assignment.slots.push_back(std::move(slot));
    return out.assignment.slots.size() - 1;
  };

  for (std::size_t v = 0; v < model.y_configs.size(); ++v) {
    const unsigned long count = floor_value(sol.values[v]);
    for (unsigned long c = 0; c < count; ++c) {
      open_bin(model.y_configs[v], *configs[model.y_configs[v]].covers);
      out.value += types[*configs[model.y_configs[v]].covers].demand;
    }
  }
  const std::size_t z_base = model.y_configs.size();
  for (std::size_t v = 0; v < model.z_pairs.size(); ++v) {
    const auto& [ci, tj] = model.z_pairs[v];
    const unsigned long count = floor_value(sol.values[z_base + v]);
    for (unsigned long c = 0; c < count; ++c) {
      const std::size_t slot = open_bin(ci, tj);
      pending.push_back({slot, config_remainder(configs[ci], types[tj]), Rat(0)});
      out.value += types[tj].demand;
    }
  }

  // Everything not consumed by a configuration slot fills the z-bins:
  // leftover large items, the medium set and the tiny set, largest first,
  // against remainders in decreasing order.
  std::vector<std::size_t> leftovers;
  for (std::size_t l = 0; l < num_classes; ++l) {
    for (std::size_t t = pool_next[l]; t < pool[l].size(); ++t) leftovers.push_back(pool[l][t]);
  }
  for (std::size_t t = g.num_large; t < g.order.size(); ++t) leftovers.push_back(g.order[t]);
  std::stable_sort(leftovers.begin(), leftovers.end(),
                   [&](std::size_t a, std::size_t b) { return item_sizes[a] > item_sizes[b]; });
  std::stable_sort(pending.begin(), pending.end(),
                   [](const PendingFill& a, const PendingFill& b) { return a.remainder > b.remainder; });

  std::size_t cursor = 0;
  for (PendingFill& fill : pending) {
    while (fill.placed < fill.remainder) {
      if (cursor >= leftovers.size())
        throw std::logic_error("round_and_fill: fill shortfall despite LP feasibility");
      const std::size_t item = leftovers[cursor++];
      out.assignment.slots[fill.slot].items.push_back(item);
      fill.placed += item_sizes[item];
    }
  }
  return out;
}

AptasResult aptas_solve(const Instance& inst, const AptasParams& params) {
  check_params(params);
  PruneResult pruned = prune_small_bins(inst, params.eps);

  AptasResult result;
  result.stats.scale = pruned.scale;
  result.stats.committed_profit = pruned.committed_profit;
  result.stats.committed_oversize = pruned.oversize_items.size();
  result.value = pruned.committed_profit;

  if (!pruned.types.empty() && !pruned.item_sizes.empty()) {
    const GroupedItems grouped = classify_and_group(pruned.item_sizes, params);
    const std::vector<Configuration> configs =
        enumerate_configurations(grouped, pruned.types, params.config_budget);
    const Lp2Model model = build_lp2(grouped, pruned.types, configs);
    const LpSolution sol = lp_solve(model.lp);
    if (sol.status != LpStatus::kOptimal)
      throw std::logic_error("aptas: configuration LP not optimal");
    RoundFillResult rounded =
        round_and_fill(grouped, pruned.types, configs, model, sol, pruned.item_sizes);

    result.stats.num_large = grouped.num_large;
    result.stats.num_medium = grouped.num_medium;
    result.stats.num_tiny = grouped.num_tiny();
    result.stats.group_target = grouped.group_target;
    result.stats.groups = grouped.groups.size();
    result.stats.size_classes = grouped.class_sizes.size();
    result.stats.configurations = configs.size();
    result.stats.lp_rows = model.lp.rows.size();
    result.stats.lp_vars = model.lp.num_vars;
    result.stats.lp_objective = sol.objective;
    for (std::size_t v = 0; v < sol.values.size(); ++v) {
      if (!sol.values[v].is_integer()) ++result.stats.fractional_values;
    }

    // Back to original item and type indices.
    for (BinSlot& slot : rounded.assignment.slots) {
      slot.type = pruned.type_map[slot.type];
      for (std::size_t& item : slot.items) item = pruned.item_map[item];
    }
    result.assignment = std::move(rounded.assignment);
    result.value += rounded.value * pruned.scale;
  }

  // Committed oversize items, one per copy of the largest type.
  if (!pruned.oversize_items.empty()) {
    const std::size_t big_type = pruned.type_map.empty() ? 0 : pruned.type_map[0];
    std::size_t copy = 0;
    for (const BinSlot& slot : result.assignment.slots) {
      if (slot.type == big_type) copy = std::max(copy, slot.copy + 1);
    }
    for (std::size_t item : pruned.oversize_items) {
      BinSlot slot;
      slot.type = big_type;
      slot.copy = copy++;
      slot.items.push_back(item);
      result.assignment.slots.push_back(std::move(slot));
    }
  }

  if (!validate(inst, result.assignment).empty())
    throw std::logic_error("aptas: produced an invalid assignment");
  return result;
}

}  // namespace bincover
