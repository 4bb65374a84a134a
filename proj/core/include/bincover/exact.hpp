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

#ifndef BINCOVER_EXACT_HPP
#define BINCOVER_EXACT_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "bincover/instance.hpp"
#include "bincover/lp.hpp"

namespace bincover {

/// Search caps for the brute-force oracles. Exceeding a cap is a refusal
/// (CapExceeded), never a silent approximation.
struct OracleCaps {
  std::size_t max_items = 10;
  std::size_t max_bins = 6;
};

/// Reads the BINCOVER_ORACLE_CAP environment variable ("items" or
/// "items,bins") over the given defaults.
OracleCaps caps_from_env(OracleCaps defaults = {});

struct ExactResult {
  Rat value;
  Assignment witness;
};

/// Ground-truth optimum for a unit-supply instance: branch and bound over
/// item-to-bin maps (items size-descending) with an exact optimistic bound
/// and symmetry breaking over equal-size items and identical bins. The
/// witness is the first optimum in lexicographic choice order, so reruns are
/// byte-identical.
ExactResult exact_opt_unit(const Instance& inst, const OracleCaps& caps = {});

/// Ground-truth optimum under infinite supply; equivalent to expanding every
/// type to n copies and solving the unit instance, with copy symmetry broken
/// inside the search.
Rat exact_opt_infinite(const Instance& inst, const OracleCaps& caps = {});

/// The splittable-relaxation LP of a unit-supply instance:
///   maximize sum p_i y_i
///   y_i <= sum_j x_{j,i} / d_i          (one row per bin)
///   sum_i x_{j,i} <= s_j                (one row per item)
///   0 <= y_i <= 1, x_{j,i} >= 0 only for admissible pairs (s_j <= d_i).
struct Lp1Model {
  LpProblem lp;
  std::size_t num_bins = 0;  // y_i is variable i
  std::vector<std::pair<std::size_t, std::size_t>> x_vars;  // (item, bin) per x variable
};
Lp1Model build_lp1(const Instance& inst);

}  // namespace bincover

#endif  // BINCOVER_EXACT_HPP
