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

#include "bincover/instance.hpp"

#include <algorithm>
#include <set>

namespace bincover {

Rat Instance::total_item_size() const {
  Rat s;
  for (const Rat& x : items) s += x;
  return s;
}

void check_instance(const Instance& inst) {
  if (inst.bins.empty()) throw UsageError("instance has no bins");
  for (const BinType& b : inst.bins) {
    if (!b.demand.is_positive()) throw UsageError("bin demand must be > 0");
    if (b.profit.is_negative()) throw UsageError("bin profit must be >= 0");
    if (inst.problem_class == ProblemClass::kVariableSized && b.profit != b.demand)
      throw UsageError("variable-sized instance requires p = d for every bin");
  }
  for (const Rat& s : inst.items) {
    if (!s.is_positive()) throw UsageError("item size must be > 0");
  }
}

std::vector<Violation> validate(const Instance& inst, const Assignment& a) {
  std::vector<Violation> out;
  std::vector<bool> item_seen(inst.num_items(), false);
  std::set<std::pair<std::size_t, std::size_t>> slot_seen;
  for (const BinSlot& slot : a.slots) {
    if (slot.type >= inst.num_bins()) {
      out.push_back({ViolationCode::kBadBin, slot.type,
                     "bin index " + std::to_string(slot.type) + " out of range"});
    } else if (inst.supply == Supply::kUnit && slot.copy != 0) {
      out.push_back({ViolationCode::kBadBin, slot.type,
                     "unit-supply bin " + std::to_string(slot.type) + " has copy " +
                         std::to_string(slot.copy)});
    } else if (inst.supply == Supply::kInfinite && slot.copy >= std::max<std::size_t>(1, inst.num_items())) {
      // n copies per type suffice; anything beyond is a bookkeeping bug.
      out.push_back({ViolationCode::kBadBin, slot.type,
                     "copy " + std::to_string(slot.copy) + " of type " +
                         std::to_string(slot.type) + " exceeds the copy cap"});
    }
    if (!slot_seen.insert({slot.type, slot.copy}).second) {
      out.push_back({ViolationCode::kDuplicateBin, slot.type,
                     "bin (" + std::to_string(slot.type) + "," + std::to_string(slot.copy) +
                         ") appears twice"});
    }
    for (std::size_t j : slot.items) {
      if (j >= inst.num_items()) {
        out.push_back({ViolationCode::kBadItem, j,
                       "item index " + std::to_string(j) + " out of range"});
      } else if (item_seen[j]) {
        out.push_back({ViolationCode::kDuplicateItem, j,
                       "item " + std::to_string(j) + " assigned twice"});
      } else {
        item_seen[j] = true;
      }
    }
  }
  return out;
}

Rat slot_fill(const Instance& inst, const BinSlot& slot) {
  Rat fill;
  for (std::size_t j : slot.items) fill += inst.items[j];
  return fill;
}

Rat profit(const Instance& inst, const Assignment& a) {
  auto violations = validate(inst, a);
  if (!violations.empty()) {
    std::string what = "invalid assignment: " + violations.front().message;
    throw ValidationError(std::move(what), std::move(violations));
  }
  Rat total;
  for (const BinSlot& slot : a.slots) {
    if (slot.items.empty()) continue;
    if (slot_fill(inst, slot) >= inst.bins[slot.type].demand) total += inst.bins[slot.type].profit;
  }
  return total;
}

}  // namespace bincover
