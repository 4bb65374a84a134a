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

#ifndef BINCOVER_APTAS_HPP
#define BINCOVER_APTAS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bincover/instance.hpp"
#include "bincover/lp.hpp"

namespace bincover {

struct AptasParams {
  Rat eps{1, 10};                          // drives pruning and the L/M/T split
  std::optional<std::size_t> group_count;  // overrides k = 1/eps^4 for desk-scale runs
  std::size_t config_budget = 1'000'000;
};

/// Step 1 plus normalization: demands are scaled so the largest is 1, items
/// of size >= 1 are committed one per largest-type bin, equal demands are
/// merged, and types with demand <= eps are dropped.
struct PruneResult {
  std::vector<BinType> types;               // normalized, demand strictly decreasing
  std::vector<std::size_t> type_map;        // surviving type -> original bin index
  std::vector<Rat> item_sizes;              // normalized non-oversize items
  std::vector<std::size_t> item_map;        // -> original item index
  std::vector<std::size_t> oversize_items;  // original indices, one covered bin each
  Rat scale;                                // the original largest demand
  Rat committed_profit;                     // original units
};
PruneResult prune_small_bins(const Instance& inst, const Rat& eps);

/// Steps 2-3: L/M/T classification and linear grouping of the large items
/// with downward rounding to the smallest size of each group. Groups with
/// equal rounded size are coalesced into one size class for enumeration.
struct GroupedItems {
  std::vector<std::size_t> order;  // item positions, size descending
  std::size_t num_large = 0;
  std::size_t num_medium = 0;      // tiny = rest
  Rat tiny_total;                  // s(T)

  struct Group {
    std::size_t begin, end;   // range in `order`
    Rat rounded_size;         // size of the group's smallest item
    std::size_t size_class;
  };
  std::vector<Group> groups;             // non-empty groups only
  std::vector<Rat> class_sizes;          // distinct rounded sizes, strictly descending
  std::vector<std::size_t> class_count;  // items per class
  std::size_t group_target = 0;          // requested k, clamped to |L|

  std::size_t num_tiny() const { return order.size() - num_large - num_medium; }
};
GroupedItems classify_and_group(const std::vector<Rat>& item_sizes, const AptasParams& params);

/// One column of the configuration LP: item counts per size class.
struct Configuration {
  std::vector<std::uint32_t> counts;
  Rat total;                          // sum of counts * class size
  std::optional<std::size_t> covers;  // largest (first) type this covers, if any
};

/// Step 4: all count vectors with counts <= multiplicities and total at most
/// twice the largest demand; any covering configuration beyond that carries a
/// removable item, so nothing of value is lost by the restriction. Throws
/// CapExceeded when the budget is hit.
std::vector<Configuration> enumerate_configurations(const GroupedItems& g,
                                                    const std::vector<BinType>& types,
                                                    std::size_t budget);

/// Remainder r(i,j) = d_j - total; positive iff the configuration leaves type
/// j uncovered.
Rat config_remainder(const Configuration& c, const BinType& type);

/// Step 7: variables y per covering configuration and z per (configuration,
/// uncovered type) pair; one multiplicity row per size class plus the tiny
/// volume row.
struct Lp2Model {
  LpProblem lp;
  std::vector<std::size_t> y_configs;                        // y variable -> configuration
  std::vector<std::pair<std::size_t, std::size_t>> z_pairs;  // z variable -> (config, type)
};
Lp2Model build_lp2(const GroupedItems& g, const std::vector<BinType>& types,
                   const std::vector<Configuration>& configs);

/// Steps 8-9: floor the LP solution, open the bins, place original items into
/// the configuration slots class by class, and fill the leftover demand of
/// z-bins with the unused items, largest first. Every opened bin ends
/// covered; a fill shortfall would contradict the LP constraints and aborts
/// via std::logic_error.
struct RoundFillResult {
  Assignment assignment;  // slot.type indexes the pruned types; items are positions
  Rat value;              // normalized profit
};
RoundFillResult round_and_fill(const GroupedItems& g, const std::vector<BinType>& types,
                               const std::vector<Configuration>& configs, const Lp2Model& model,
                               const LpSolution& sol, const std::vector<Rat>& item_sizes);

struct AptasStats {
  std::size_t num_large = 0, num_medium = 0, num_tiny = 0;
  std::size_t group_target = 0, groups = 0, size_classes = 0;
  std::size_t configurations = 0;
  std::size_t lp_rows = 0, lp_vars = 0;
  Rat lp_objective;  // normalized units
  std::size_t fractional_values = 0;
  std::size_t committed_oversize = 0;
  Rat scale;
  Rat committed_profit;  // original units
};

struct AptasResult {
  Assignment assignment;
  Rat value;
  AptasStats stats;
};

/// The full pipeline for variable-sized bin covering with infinite supply:
/// prune, classify and group, enumerate configurations, solve the LP, round
/// and fill, then add the committed oversize items back.
AptasResult aptas_solve(const Instance& inst, const AptasParams& params);

}  // namespace bincover

#endif  // BINCOVER_APTAS_HPP
