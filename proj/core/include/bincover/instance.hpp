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

#ifndef BINCOVER_INSTANCE_HPP
#define BINCOVER_INSTANCE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bincover/rat.hpp"

namespace bincover {

enum class Supply { kUnit, kInfinite };
enum class ProblemClass { kGeneralized, kVariableSized };

/// A bin (unit supply) or bin type (infinite supply): covered when the
/// assigned total size reaches the demand, in which case it earns the profit.
struct BinType {
  Rat profit;
  Rat demand;

  /// Profit-to-demand ratio p_i / d_i.
  Rat efficiency() const { return profit / demand; }
};

struct Instance {
  Supply supply = Supply::kUnit;
  ProblemClass problem_class = ProblemClass::kVariableSized;
  std::vector<BinType> bins;   // m >= 1, in input order
  std::vector<Rat> items;      // sizes, all > 0, in input order

  std::size_t num_bins() const { return bins.size(); }
  std::size_t num_items() const { return items.size(); }
  Rat total_item_size() const;
};

/// Thrown when an operation is handed the wrong kind of instance (e.g. NFD on
/// a generalized or infinite-supply instance).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when the exact oracle or an enumeration would exceed its configured
/// cap; callers may retry with a larger cap, never with an approximation.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checks the Instance invariants (m >= 1, positive sizes and demands,
/// nonnegative profits, p = d for variable-sized). Throws UsageError.
void check_instance(const Instance& inst);

/// One bin of a solution: a unit-supply bin (copy == 0) or the copy-th
/// instantiated bin of a type under infinite supply.
struct BinSlot {
  std::size_t type = 0;
  std::size_t copy = 0;
  std::vector<std::size_t> items;  // item indices, pairwise disjoint across slots
};

/// A partition of a subset of the items onto bins; the universal solution
/// object. Bins without a slot and items not listed anywhere are unused.
struct Assignment {
  std::vector<BinSlot> slots;
};

enum class ViolationCode { kDuplicateItem, kBadItem, kBadBin, kDuplicateBin };

struct Violation {
  ViolationCode code;
  std::size_t index;  // offending item or bin index
  std::string message;
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string what, std::vector<Violation> violations)
      : std::runtime_error(std::move(what)), violations(std::move(violations)) {}
  std::vector<Violation> violations;
};

/// Structural check of an assignment against an instance. Empty result iff
/// the Assignment invariants hold; every violation carries a machine-readable
/// code and the offending index.
std::vector<Violation> validate(const Instance& inst, const Assignment& a);

/// Total profit: sum of p_i over exactly those slots whose assigned size
/// reaches the demand. Items on uncovered bins contribute nothing.
/// Throws ValidationError if the assignment is structurally invalid.
Rat profit(const Instance& inst, const Assignment& a);

/// Fill s(S_i) of one slot.
Rat slot_fill(const Instance& inst, const BinSlot& slot);

}  // namespace bincover

#endif  // BINCOVER_INSTANCE_HPP
