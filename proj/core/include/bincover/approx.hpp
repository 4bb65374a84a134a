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

#ifndef BINCOVER_APPROX_HPP
#define BINCOVER_APPROX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bincover/instance.hpp"
#include "bincover/matching.hpp"

namespace bincover {

/// Solution of the splittable (modified) problem: per item, the chronological
/// list of (bin, mass) parts. Mass on a bin counts toward its fill level
/// y_i = min(fill/d_i, 1); unassigned remainders earn nothing.
struct FractionalAssignment {
  std::size_t num_bins = 0;
  std::vector<std::vector<std::pair<std::size_t, Rat>>> parts;  // per item

  Rat assigned_mass(std::size_t item) const;
  std::vector<Rat> bin_fills() const;
};

/// The splittable-problem greedy: bins by non-increasing efficiency, each
/// repeatedly takes the largest admissible item with remaining mass, cutting
/// the item exactly at the demand boundary. Attains the splittable optimum.
FractionalAssignment alg_star(const Instance& inst);

/// sum_i p_i * min(fill_i / d_i, 1). Validates the fractional invariants
/// (positive parts, admissibility, mass conservation) and throws
/// ValidationError on violation.
Rat modified_profit(const Instance& inst, const FractionalAssignment& f);

enum class StageKind { kMerged, kMaximal };

/// Integral (no split items) stage of the rounding pipeline: every item sits
/// wholly on one bin or is unassigned.
struct ModifiedStage {
  StageKind kind = StageKind::kMerged;
  std::vector<std::optional<std::size_t>> item_bin;  // per item

  std::vector<Rat> bin_fills(const Instance& inst) const;
};

Rat modified_profit(const Instance& inst, const ModifiedStage& stage);

/// Reassembles every split item wholly on the bin that received its first
/// (bin-filling) part. Requires ALG*-shaped input: a bin receives the first
/// part of at most one item; anything else throws UsageError. Afterwards all
/// fills stay below twice the demand.
ModifiedStage merge_splits(const Instance& inst, const FractionalAssignment& f);

/// Pulls items onto partially filled bins from partially filled bins later in
/// the (efficiency desc, demand desc, index) order until each receiver is
/// covered or exhausted. The result is maximal: no item on a partially filled
/// bin is admissible to another partially filled bin of at least its
/// efficiency.
ModifiedStage maximalize(const Instance& inst, const ModifiedStage& merged);

/// Rounds a maximal solution to an ordinary one: with R the partially filled
/// bins by non-increasing efficiency, compares (a) everything on the last bin
/// of R, (b) every R bin handed the contents of its successor and the last
/// one emptied, and (c) covered bins kept with R's items pooled on the last R
/// bin, and keeps the most profitable. Items on bins a candidate leaves
/// uncovered are unassigned, so every nonempty output bin is covered.
Assignment shift_round(const Instance& inst, const ModifiedStage& maximal);

struct Gbc5Result {
  Assignment assignment;
  Rat value;

  // Branch values and modified-profit snapshots (taken on the instance with
  // uncoverable bins removed), which power the transformation-chain checks.
  Rat matching_value;
  Rat fractional_value;
  Rat raw_modified;
  Rat merged_modified;
  Rat maximal_modified;

  std::vector<std::size_t> active_bins;  // bins with demand <= s(J)
  FractionalAssignment raw_stage;        // on the reduced instance
  ModifiedStage merged_stage;
  ModifiedStage maximal_stage;
};

/// The 5-approximation for unit-supply Generalized Bin Covering: the better
/// of the singular-coverage matching and the rounded splittable solution.
/// Bins no item set can cover (demand above the total item size) are dropped
/// from the splittable branch; they are uncoverable for every algorithm.
Gbc5Result gbc5(const Instance& inst);

}  // namespace bincover

#endif  // BINCOVER_APPROX_HPP
