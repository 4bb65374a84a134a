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

#include "bincover/approx.hpp"

#include <algorithm>
#include <numeric>

namespace bincover {

Rat FractionalAssignment::assigned_mass(std::size_t item) const {
  Rat total;
  for (const auto& [bin, amount] : parts[item]) total += amount;
  return total;
}

std::vector<Rat> FractionalAssignment::bin_fills() const {
  std::vector<Rat> fills(num_bins);
  for (const auto& item_parts : parts) {
    for (const auto& [bin, amount] : item_parts) fills[bin] += amount;
  }
  return fills;
}

std::vector<Rat> ModifiedStage::bin_fills(const Instance& inst) const {
  std::vector<Rat> fills(inst.num_bins());
  for (std::size_t j = 0; j < item_bin.size(); ++j) {
    if (item_bin[j]) fills[*item_bin[j]] += inst.items[j];
  }
  return fills;
}

namespace {

// Bins by non-increasing efficiency, ties by original index.
std::vector<std::size_t> efficiency_order(const Instance& inst) {
  std::vector<std::size_t> order(inst.num_bins());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.bins[a].efficiency() > inst.bins[b].efficiency();
  });
  return order;
}

void validate_fractional(const Instance& inst, const FractionalAssignment& f) {
  std::vector<Violation> violations;
  if (f.num_bins != inst.num_bins() || f.parts.size() != inst.num_items()) {
    violations.push_back({ViolationCode::kBadBin, 0, "fractional shape mismatch"});
    throw ValidationError("invalid fractional assignment", std::move(violations));
  }
  for (std::size_t j = 0; j < f.parts.size(); ++j) {
    Rat total;
    for (const auto& [bin, amount] : f.parts[j]) {
      if (bin >= inst.num_bins()) {
        violations.push_back({ViolationCode::kBadBin, bin, "part on unknown bin"});
        continue;
      }
      if (!amount.is_positive())
        violations.push_back({ViolationCode::kBadItem, j, "non-positive part"});
      if (inst.items[j] > inst.bins[bin].demand)
        violations.push_back({ViolationCode::kBadItem, j, "part on inadmissible bin"});
      total += amount;
    }
    if (total > inst.items[j])
      violations.push_back({ViolationCode::kBadItem, j, "assigned mass exceeds size"});
  }
  if (!violations.empty()) {
    std::string what = "invalid fractional assignment: " + violations.front().message;
    throw ValidationError(std::move(what), std::move(violations));
  }
}

Rat modified_profit_of_fills(const Instance& inst, const std::vector<Rat>& fills) {
  Rat total;
  for (std::size_t i = 0; i < fills.size(); ++i) {
    if (fills[i].is_zero()) continue;
    const BinType& bin = inst.bins[i];
    Rat level = fills[i] / bin.demand;
    if (level > Rat(1)) level = Rat(1);
    total += bin.profit * level;
  }
  return total;
}

}  // namespace

FractionalAssignment alg_star(const Instance& inst) {
  check_instance(inst);
  if (inst.supply != Supply::kUnit) throw UsageError("alg_star needs unit supply");
  const std::size_t m = inst.num_bins();
  const std::size_t n = inst.num_items();

  FractionalAssignment f;
  f.num_bins = m;
  f.parts.resize(n);

  const std::vector<std::size_t> bin_order = efficiency_order(inst);
  std::vector<std::size_t> item_order(n);
  std::iota(item_order.begin(), item_order.end(), std::size_t{0});
  std::stable_sort(item_order.begin(), item_order.end(),
                   [&](std::size_t a, std::size_t b) { return inst.items[a] > inst.items[b]; });

  std::vector<Rat> remaining(n);  // by sorted position
  for (std::size_t t = 0; t < n; ++t) remaining[t] = inst.items[item_order[t]];

  // next_alive[t]: first position >= t whose item still has mass.
  std::vector<std::size_t> next_alive(n + 1);
  std::iota(next_alive.begin(), next_alive.end(), std::size_t{0});
  auto find_alive = [&](std::size_t t) {
    while (next_alive[t] != t) {
      next_alive[t] = next_alive[next_alive[t]];
      t = next_alive[t];
    }
    return t;
  };

  for (std::size_t bin : bin_order) {
    const Rat& demand = inst.bins[bin].demand;
    // First sorted position whose size is admissible (<= demand).
    std::size_t start = [&] {
      std::size_t lo = 0, hi = n;
      while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (inst.items[item_order[mid]] > demand) {
          lo = mid + 1;
        } else {
          hi = mid;
        }
      }
      return lo;
    }();
    Rat fill;
    while (fill < demand) {
      const std::size_t t = find_alive(start);
      if (t >= n) break;
      const std::size_t item = item_order[t];
      const Rat room = demand - fill;
      if (remaining[t] <= room) {
        f.parts[item].emplace_back(bin, remaining[t]);
        fill += remaining[t];
        remaining[t] = Rat(0);
        next_alive[t] = t + 1;
      } else {
        f.parts[item].emplace_back(bin, room);
        remaining[t] -= room;
        fill = demand;
      }
      start = t;
    }
  }
  return f;
}

Rat modified_profit(const Instance& inst, const FractionalAssignment& f) {
  validate_fractional(inst, f);
  return modified_profit_of_fills(inst, f.bin_fills());
}

Rat modified_profit(const Instance& inst, const ModifiedStage& stage) {
  return modified_profit_of_fills(inst, stage.bin_fills(inst));
}

ModifiedStage merge_splits(const Instance& inst, const FractionalAssignment& f) {
  validate_fractional(inst, f);
  ModifiedStage stage;
  stage.kind = StageKind::kMerged;
  stage.item_bin.assign(inst.num_items(), std::nullopt);

  std::vector<bool> bin_has_first_part(inst.num_bins(), false);
  for (std::size_t j = 0; j < f.parts.size(); ++j) {
    if (f.parts[j].empty()) continue;
    const std::size_t target = f.parts[j].front().first;
    const bool split = f.parts[j].size() > 1 || f.assigned_mass(j) < inst.items[j];
    if (split) {
      if (bin_has_first_part[target])
        throw UsageError("merge_splits: bin holds first parts of two items; not an ALG* output");
      bin_has_first_part[target] = true;
    }
    stage.item_bin[j] = target;
  }
  return stage;
}

ModifiedStage maximalize(const Instance& inst, const ModifiedStage& merged) {
  if (merged.kind != StageKind::kMerged) throw UsageError("maximalize expects a merged stage");
  ModifiedStage stage = merged;
  stage.kind = StageKind::kMaximal;

  std::vector<Rat> fills = stage.bin_fills(inst);
  std::vector<std::vector<std::size_t>> contents(inst.num_bins());
  for (std::size_t j = 0; j < stage.item_bin.size(); ++j) {
    if (stage.item_bin[j]) contents[*stage.item_bin[j]].push_back(j);
  }

  // Partially filled bins; efficiency desc, then demand desc, then index.
  // Donating strictly later in this order keeps every move efficiency
  // non-decreasing and resolves ties so that equal-efficiency bins also end
  // up mutually non-improvable.
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < inst.num_bins(); ++i) {
    if (fills[i].is_positive() && fills[i] < inst.bins[i].demand) active.push_back(i);
  }
  std::stable_sort(active.begin(), active.end(), [&](std::size_t a, std::size_t b) {
    const Rat ea = inst.bins[a].efficiency();
    const Rat eb = inst.bins[b].efficiency();
    if (ea != eb) return ea > eb;
    if (inst.bins[a].demand != inst.bins[b].demand) return inst.bins[a].demand > inst.bins[b].demand;
    return a < b;
  });

  for (std::size_t pos = 0; pos < active.size(); ++pos) {
    const std::size_t receiver = active[pos];
    const Rat& demand = inst.bins[receiver].demand;
    while (fills[receiver] < demand) {
      // Largest admissible item on a later, still partially filled bin.
      std::size_t best_item = inst.num_items();
      std::size_t best_donor = 0;
      for (std::size_t later = pos + 1; later < active.size(); ++later) {
        const std::size_t donor = active[later];
        if (fills[donor].is_zero()) continue;
        for (std::size_t j : contents[donor]) {
          if (inst.items[j] > demand) continue;
          if (best_item == inst.num_items() || inst.items[j] > inst.items[best_item] ||
              (inst.items[j] == inst.items[best_item] && j < best_item)) {
            best_item = j;
            best_donor = donor;
          }
        }
      }
      if (best_item == inst.num_items()) break;
      auto& donor_items = contents[best_donor];
      donor_items.erase(std::find(donor_items.begin(), donor_items.end(), best_item));
      contents[receiver].push_back(best_item);
      fills[best_donor] -= inst.items[best_item];
      fills[receiver] += inst.items[best_item];
      stage.item_bin[best_item] = receiver;
    }
  }
  return stage;
}

Assignment shift_round(const Instance& inst, const ModifiedStage& maximal) {
  if (maximal.kind != StageKind::kMaximal) throw UsageError("shift_round expects a maximal stage");

  std::vector<Rat> fills = maximal.bin_fills(inst);
  std::vector<std::vector<std::size_t>> contents(inst.num_bins());
  for (std::size_t j = 0; j < maximal.item_bin.size(); ++j) {
    if (maximal.item_bin[j]) contents[*maximal.item_bin[j]].push_back(j);
  }

  std::vector<std::size_t> part_filled;  // R, efficiency desc / demand desc / index
  std::vector<std::size_t> covered;
  for (std::size_t i = 0; i < inst.num_bins(); ++i) {
    if (fills[i].is_zero()) continue;
    if (fills[i] >= inst.bins[i].demand) {
      covered.push_back(i);
    } else {
      part_filled.push_back(i);
    }
  }
  std::stable_sort(part_filled.begin(), part_filled.end(), [&](std::size_t a, std::size_t b) {
    const Rat ea = inst.bins[a].efficiency();
    const Rat eb = inst.bins[b].efficiency();
    if (ea != eb) return ea > eb;
    if (inst.bins[a].demand != inst.bins[b].demand) return inst.bins[a].demand > inst.bins[b].demand;
    return a < b;
  });

  // Keeps only covered bins of a candidate; everything else is unassigned.
  auto finalize = [&](std::vector<std::vector<std::size_t>> candidate) {
    Assignment a;
    for (std::size_t i = 0; i < candidate.size(); ++i) {
      if (candidate[i].empty()) continue;
      Rat fill;
      for (std::size_t j : candidate[i]) fill += inst.items[j];
      if (fill < inst.bins[i].demand) continue;
      BinSlot slot;
      slot.type = i;
      std::sort(candidate[i].begin(), candidate[i].end());
      slot.items = std::move(candidate[i]);
      a.slots.push_back(std::move(slot));
    }
    return a;
  };

  if (part_filled.empty()) return finalize(std::move(contents));
  const std::size_t last = part_filled.back();

  // (a) every item of the instance on the least efficient partially filled bin
  std::vector<std::vector<std::size_t>> all_on_last(inst.num_bins());
  for (std::size_t j = 0; j < inst.num_items(); ++j) all_on_last[last].push_back(j);

  // (b) shift: each R bin takes its successor's items, the last is emptied
  std::vector<std::vector<std::size_t>> shifted(inst.num_bins());
  for (std::size_t i : covered) shifted[i] = contents[i];
  for (std::size_t t = 0; t + 1 < part_filled.size(); ++t) {
    shifted[part_filled[t]] = contents[part_filled[t + 1]];
  }

  // (c) covered bins kept, R's items pooled on the last R bin
  std::vector<std::vector<std::size_t>> pooled(inst.num_bins());
  for (std::size_t i : covered) pooled[i] = contents[i];
  for (std::size_t i : part_filled) {
    for (std::size_t j : contents[i]) pooled[last].push_back(j);
  }

  Assignment best;
  Rat best_value(-1);
  for (auto* candidate : {&all_on_last, &shifted, &pooled}) {
    Assignment a = finalize(std::move(*candidate));
    Rat value = profit(inst, a);
    if (value > best_value) {
      best_value = std::move(value);
      best = std::move(a);
    }
  }
  return best;
}

Gbc5Result gbc5(const Instance& inst) {
  check_instance(inst);
  if (inst.supply != Supply::kUnit) throw UsageError("gbc5 needs unit supply");

  Gbc5Result result;

  const Matching matching = max_weight_matching(build_graph(inst));
  Assignment matching_solution = matching_assignment(matching);
  result.matching_value = profit(inst, matching_solution);

  // Splittable branch on the coverable bins only.
  const Rat total = inst.total_item_size();
  Instance reduced;
  reduced.supply = Supply::kUnit;
  reduced.problem_class = inst.problem_class;
  reduced.items = inst.items;
  for (std::size_t i = 0; i < inst.num_bins(); ++i) {
    if (inst.bins[i].demand <= total) {
      reduced.bins.push_back(inst.bins[i]);
      result.active_bins.push_back(i);
    }
  }

  Assignment fractional_solution;
  if (!reduced.bins.empty()) {
    result.raw_stage = alg_star(reduced);
    result.raw_modified = modified_profit(reduced, result.raw_stage);
    result.merged_stage = merge_splits(reduced, result.raw_stage);
    result.merged_modified = modified_profit(reduced, result.merged_stage);
    result.maximal_stage = maximalize(reduced, result.merged_stage);
    result.maximal_modified = modified_profit(reduced, result.maximal_stage);
    Assignment shifted = shift_round(reduced, result.maximal_stage);
    for (BinSlot& slot : shifted.slots) slot.type = result.active_bins[slot.type];
    fractional_solution = std::move(shifted);
  }
  result.fractional_value = profit(inst, fractional_solution);

  if (result.matching_value > result.fractional_value) {
    result.assignment = std::move(matching_solution);
    result.value = result.matching_value;
  } else {
    result.assignment = std::move(fractional_solution);
    result.value = result.fractional_value;
  }
  return result;
}

}  // namespace bincover
