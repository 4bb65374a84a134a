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

#ifndef BINCOVER_MATCHING_HPP
#define BINCOVER_MATCHING_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "bincover/instance.hpp"

namespace bincover {

/// Bins on the left, items on the right; an edge (i, j) exists exactly when
/// item j alone overshoots bin i (s_j > d_i), so a matched bin is covered by
/// its single item. Every edge of bin i carries the same weight p_i, which is
/// what makes the greedy below exact. Neighborhoods are nested: a bin with a
/// smaller demand admits a superset of the items of any larger bin.
struct BipartiteGraph {
  std::vector<Rat> demands;  // per bin
  std::vector<Rat> profits;  // per bin == weight of all its edges
  std::vector<Rat> sizes;    // per item

  std::size_t num_bins() const { return demands.size(); }
  std::size_t num_items() const { return sizes.size(); }
  bool has_edge(std::size_t bin, std::size_t item) const { return sizes[item] > demands[bin]; }
  std::size_t edge_count() const;
  /// Materialized edge list; intended for small graphs and tests.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
};

/// Builds the singular-coverage graph of a unit-supply instance.
BipartiteGraph build_graph(const Instance& inst);

struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (bin, item)
  Rat weight;
};

/// Exact maximum-weight matching. Bins are scanned by non-increasing profit
/// (ties by index) and kept when the selected set stays matchable, which for
/// nested neighborhoods reduces to a deadline-feasibility check maintained
/// with a latest-free-slot union-find. Selected bins are then paired
/// demand-descending with the largest items, which is always feasible.
Matching max_weight_matching(const BipartiteGraph& g);

/// The induced solution: each matched bin holds exactly its matched item.
Assignment matching_assignment(const Matching& matching);

}  // namespace bincover

#endif  // BINCOVER_MATCHING_HPP
