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

#include "bincover/nfd.hpp"

#include <algorithm>
#include <numeric>

namespace bincover {

NfdResult nfd(const Instance& inst) {
  if (inst.problem_class != ProblemClass::kVariableSized)
    throw UsageError("nfd requires a variable-sized instance");
  if (inst.supply != Supply::kUnit) throw UsageError("nfd requires unit supply");

  const std::size_t m = inst.num_bins();
  const std::size_t n = inst.num_items();

  NfdTrace trace;
  trace.bin_order.resize(m);
  std::iota(trace.bin_order.begin(), trace.bin_order.end(), std::size_t{0});
  std::stable_sort(trace.bin_order.begin(), trace.bin_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return inst.bins[a].demand > inst.bins[b].demand;
                   });
  trace.item_order.resize(n);
  std::iota(trace.item_order.begin(), trace.item_order.end(), std::size_t{0});
  std::stable_sort(trace.item_order.begin(), trace.item_order.end(),
                   [&](std::size_t a, std::size_t b) { return inst.items[a] > inst.items[b]; });

  // prefix[t] = total size of the t largest items.
  std::vector<Rat> prefix(n + 1);
  for (std::size_t t = 0; t < n; ++t) prefix[t + 1] = prefix[t] + inst.items[trace.item_order[t]];

  trace.outcomes.resize(m);
  NfdResult result;
  std::size_t j = 0;
  for (std::size_t pos = 0; pos < m; ++pos) {
    const Rat& demand = inst.bins[trace.bin_order[pos]].demand;
    NfdTrace::BinOutcome& outcome = trace.outcomes[pos];
    if (j >= n || prefix[n] - prefix[j] < demand) continue;  // skip, suffix too small
    // Smallest j' with prefix[j'+1] - prefix[j] >= demand; prefix is strictly
    // increasing, so binary search applies.
    std::size_t lo = j, hi = n - 1;
    const Rat target = prefix[j] + demand;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (prefix[mid + 1] >= target) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    outcome.covered = true;
    outcome.first_item = j;
    outcome.item_count = lo - j + 1;
    outcome.fill = prefix[lo + 1] - prefix[j];

    BinSlot slot;
    slot.type = trace.bin_order[pos];
    for (std::size_t t = j; t <= lo; ++t) slot.items.push_back(trace.item_order[t]);
    result.assignment.slots.push_back(std::move(slot));
    j = lo + 1;
  }
  trace.unassigned_from = j;
  result.value = profit(inst, result.assignment);
  result.trace = std::move(trace);
  return result;
}

WellCoveredCensus well_covered_census(const Instance& inst, const NfdTrace& trace) {
  const std::size_t m = trace.outcomes.size();
  WellCoveredCensus census;

  // prefix_ok[i]: u(t) <= 2 d(t) for all positions t <= i.
  std::vector<bool> prefix_ok(m);
  bool ok = true;
  for (std::size_t i = 0; i < m; ++i) {
    const Rat& d = inst.bins[trace.bin_order[i]].demand;
    if (trace.outcomes[i].fill > Rat(2) * d) ok = false;
    prefix_ok[i] = ok;
  }
  // next_empty[i]: smallest empty position >= i, or m.
  std::vector<std::size_t> next_empty(m + 1, m);
  for (std::size_t i = m; i-- > 0;) {
    next_empty[i] = trace.outcomes[i].covered ? next_empty[i + 1] : i;
  }

  std::optional<std::size_t> first_bad;  // first filled, not well-covered bin
  for (std::size_t i = 0; i < m; ++i) {
    if (!trace.outcomes[i].covered) continue;
    const std::size_t gap = next_empty[i + 1];
    if (gap < m && prefix_ok[gap]) {
      ++census.well_covered;
    } else if (!first_bad) {
      first_bad = i;
    }
  }
  if (first_bad) {
    // i1: first position >= i0 whose successor is empty (or past the end).
    std::size_t i1 = *first_bad;
    while (i1 + 1 < m && trace.outcomes[i1 + 1].covered) ++i1;
    for (std::size_t i = i1 + 1; i-- > 0;) {
      const Rat& d = inst.bins[trace.bin_order[i]].demand;
      if (trace.outcomes[i].fill > Rat(2) * d) {
        census.head = i;
        break;
      }
    }
  }
  return census;
}

}  // namespace bincover
