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

#ifndef BINCOVER_LP_HPP
#define BINCOVER_LP_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bincover/rat.hpp"

namespace bincover {

enum class Sense { kLe, kEq, kGe };

struct LpRow {
  std::vector<std::pair<std::size_t, Rat>> coeffs;  // sparse (var, coefficient)
  Sense sense = Sense::kLe;
  Rat rhs;
};

/// maximize c.x subject to rows, lower <= x <= upper (lower defaults to 0,
/// upper to none). All data exact rationals.
struct LpProblem {
  std::size_t num_vars = 0;
  std::vector<Rat> objective;                // size num_vars
  std::vector<LpRow> rows;
  std::vector<Rat> lower;                    // empty means all zero
  std::vector<std::optional<Rat>> upper;     // empty means none

  std::size_t add_var(const Rat& objective_coeff);
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kOptimal;
  Rat objective;
  std::vector<Rat> values;       // per variable
  std::vector<Rat> duals;        // per row; >= 0 for <=, <= 0 for >=, free for =
  std::vector<Rat> bound_duals;  // per variable, dual of its upper bound (0 if none)
  std::vector<bool> basic;       // per variable, basis membership
};

/// Exact primal simplex (dense tableau, two phases). Pivot selection is
/// Dantzig with a permanent switch to Bland's rule after a degeneracy stall,
/// so termination is guaranteed. On optimal results the returned dual vector
/// is an exact certificate; lp_solve itself re-checks primal feasibility,
/// dual feasibility and equality of the two objectives and throws
/// std::logic_error if any of it fails.
LpSolution lp_solve(const LpProblem& p);

}  // namespace bincover

#endif  // BINCOVER_LP_HPP
