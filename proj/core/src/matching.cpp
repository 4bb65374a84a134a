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

#include "bincover/matching.hpp"

#include <algorithm>
#include <numeric>

namespace bincover {

namespace {

// Number of items with size strictly above `demand`, given sizes sorted
// non-increasingly.
std::size_t admissible_count(const std::vector<Rat>& sorted_sizes, const Rat& demand) {
  std::size_t lo = 0, hi = sorted_sizes.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (sorted_sizes[mid] > demand) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

std::size_t BipartiteGraph::edge_count() const {
  std::vector<Rat> sorted = sizes;
  std::sort(sorted.begin(), sorted.end(), [](const Rat& a, const Rat& b) { return a > b; });
  std::size_t total = 0;
  for (const Rat& d : demands) total += admissible_count(sorted, d);
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> BipartiteGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < num_bins(); ++i) {
    for (std::size_t j = 0; j < num_items(); ++j) {
      if (has_edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

BipartiteGraph build_graph(const Instance& inst) {
  if (inst.supply != Supply::kUnit) throw UsageError("singular-coverage graph needs unit supply");
  BipartiteGraph g;
  g.demands.reserve(inst.num_bins());
  g.profits.reserve(inst.num_bins());
  for (const BinType& b : inst.bins) {
    g.demands.push_back(b.demand);
    g.profits.push_back(b.profit);
  }
  g.sizes = inst.items;
  return g;
}

Matching max_weight_matching(const BipartiteGraph& g) {
  const std::size_t m = g.num_bins();
  const std::size_t n = g.num_items();
  Matching result;
  if (m == 0 || n == 0) return result;

  // Items by size descending, stable.
  std::vector<std::size_t> item_order(n);
  std::iota(item_order.begin(), item_order.end(), std::size_t{0});
  std::stable_sort(item_order.begin(), item_order.end(),
                   [&](std::size_t a, std::size_t b) { return g.sizes[a] > g.sizes[b]; });
  std::vector<Rat> sorted_sizes(n);
  for (std::size_t t = 0; t < n; ++t) sorted_sizes[t] = g.sizes[item_order[t]];

  // deadline[i]: how many of the largest items are matchable to bin i.
  std::vector<std::size_t> deadline(m);
  for (std::size_t i = 0; i < m; ++i) deadline[i] = admissible_count(sorted_sizes, g.demands[i]);

  std::vector<std::size_t> bin_order(m);
  std::iota(bin_order.begin(), bin_order.end(), std::size_t{0});
  std::stable_sort(bin_order.begin(), bin_order.end(),
                   [&](std::size_t a, std::size_t b) { return g.profits[a] > g.profits[b]; });

  // parent[s] = latest free slot <= s (slots 1..n); 0 = no slot left.
  std::vector<std::size_t> parent(n + 1);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t s) {
    while (parent[s] != s) {
      parent[s] = parent[parent[s]];
      s = parent[s];
    }
    return s;
  };

  std::vector<std::size_t> selected;
  for (std::size_t i : bin_order) {
    if (deadline[i] == 0 || !g.profits[i].is_positive()) continue;
    const std::size_t slot = find(deadline[i]);
    if (slot == 0) continue;  // adding this bin would break Hall's condition
    parent[slot] = slot - 1;
    selected.push_back(i);
    result.weight += g.profits[i];
  }

  // Pair the t-th largest selected demand with the t-th largest item; the
  // feasibility of `selected` guarantees strict coverage for each pair.
  std::stable_sort(selected.begin(), selected.end(), [&](std::size_t a, std::size_t b) {
    if (g.demands[a] != g.demands[b]) return g.demands[a] > g.demands[b];
    return a < b;
  });
  for (std::size_t t = 0; t < selected.size(); ++t) {
    result.pairs.emplace_back(selected[t], item_order[t]);
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

Assignment matching_assignment(const Matching& matching) {
  Assignment a;
  for (const auto& [bin, item] : matching.pairs) {
    BinSlot slot;
    slot.type = bin;
    slot.items.push_back(item);
    a.slots.push_back(std::move(slot));
  }
  return a;
}

}  // namespace bincover
