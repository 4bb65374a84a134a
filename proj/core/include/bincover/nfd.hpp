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

#ifndef BINCOVER_NFD_HPP
#define BINCOVER_NFD_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "bincover/instance.hpp"

namespace bincover {

/// Execution record of one Next Fit Decreasing run. All positions refer to
/// the sorted orders stored in bin_order / item_order (demand resp. size
/// non-increasing, ties kept in input order).
struct NfdTrace {
  std::vector<std::size_t> bin_order;   // position -> original bin index
  std::vector<std::size_t> item_order;  // position -> original item index

  struct BinOutcome {
    bool covered = false;
    std::size_t first_item = 0;  // position into item_order (covered only)
    std::size_t item_count = 0;
    Rat fill;                    // u(i); zero when skipped
  };
  std::vector<BinOutcome> outcomes;  // one per bin position
  std::size_t unassigned_from = 0;   // first unassigned position in item_order
};

struct NfdResult {
  Assignment assignment;
  NfdTrace trace;
  Rat value;
};

/// Next Fit Decreasing for variable-sized unit-supply instances: bins in
/// non-increasing demand order each receive a minimal prefix of the remaining
/// items, or are skipped when the whole remainder cannot cover them.
/// O(n log n + m log m). Throws UsageError on other instance kinds.
NfdResult nfd(const Instance& inst);

struct WellCoveredCensus {
  std::size_t well_covered = 0;            // k
  std::optional<std::size_t> head;         // position in trace bin order
};

/// Counts well-covered bins and locates the head of the instance: a filled
/// bin i* is well-covered when an empty bin i' > i* follows it and no bin up
/// to i' is filled beyond twice its demand; the head is the last bin before
/// the relevant gap with fill > 2*demand. Exists to power the property tests
/// around the NFD ratio analysis, not part of the solving surface.
WellCoveredCensus well_covered_census(const Instance& inst, const NfdTrace& trace);

}  // namespace bincover

#endif  // BINCOVER_NFD_HPP
