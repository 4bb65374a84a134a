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

#include "bincover/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace bincover {

OracleCaps caps_from_env(OracleCaps defaults) {
  const char* env = std::getenv("BINCOVER_ORACLE_CAP");
  if (env == nullptr || *env == '\0') return defaults;
  const std::string text(env);
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) {
      defaults.max_items = std::stoull(text);
    } else {
      defaults.max_items = std::stoull(text.substr(0, comma));
      defaults.max_bins = std::stoull(text.substr(comma + 1));
    }
  } catch (const std::exception&) {
    throw UsageError("BINCOVER_ORACLE_CAP must be '<items>' or '<items>,<bins>'");
  }
  return defaults;
}

namespace {

// Branch and bound over item-to-bin maps. Items are visited in size order;
// the optimistic bound counts every not-yet-covered bin that the remaining
// volume could still finish, and (for variable-sized instances) additionally
// caps future profit by remaining volume plus the fills already parked on
// uncovered bins. Symmetry: equal-size items use non-decreasing choices, and
// an item may open an identical bin only in leftmost-empty order. Both rules
// keep the lexicographically smallest optimal choice vector reachable, so
// the first incumbent that attains the optimum is deterministic.
class Search {
 public:
  Search(const Instance& inst, std::vector<BinType> bins, bool variable_sized)
      : items_(inst.items), bins_(std::move(bins)), variable_sized_(variable_sized) {
    const std::size_t n = items_.size();
    const std::size_t m = bins_.size();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return items_[a] > items_[b]; });
    suffix_.assign(n + 1, Rat(0));
    for (std::size_t t = n; t-- > 0;) suffix_[t] = suffix_[t + 1] + items_[order_[t]];

    fill_.assign(m, Rat(0));
    covered_.assign(m, false);
    choice_.assign(n, m);
    // Identical-bin classes, members in index order.
    class_of_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t cls = classes_.size();
      for (std::size_t c = 0; c < classes_.size(); ++c) {
        const std::size_t rep = classes_[c].front();
        if (bins_[rep].demand == bins_[i].demand && bins_[rep].profit == bins_[i].profit) {
          cls = c;
          break;
        }
      }
      if (cls == classes_.size()) classes_.emplace_back();
      classes_[cls].push_back(i);
      class_of_[i] = cls;
    }
    class_open_.assign(classes_.size(), 0);
  }

  void run() {
    best_ = Rat(-1);
    dfs(0, 0);
  }

  const Rat& best() const { return best_; }
  const std::vector<std::size_t>& best_choice() const { return best_choice_; }
  const std::vector<std::size_t>& order() const { return order_; }

 private:
  Rat bound(std::size_t depth) const {
    const Rat& remaining = suffix_[depth];
    Rat coverable;
    Rat parked;  // fills already on uncovered-but-coverable bins
    for (std::size_t i = 0; i < bins_.size(); ++i) {
      if (covered_[i]) continue;
      if (fill_[i] + remaining >= bins_[i].demand) {
        coverable += bins_[i].profit;
        parked += fill_[i];
      }
    }
    if (variable_sized_) {
      // Future profit equals covered demand, which the volume must pay for.
      const Rat volume_cap = remaining + parked;
      if (volume_cap < coverable) coverable = volume_cap;
    }
    return current_ + coverable;
  }

  void dfs(std::size_t depth, std::size_t min_choice) {
    if (bound(depth) <= best_) return;
    if (depth == items_.size()) {
      best_ = current_;
      best_choice_ = choice_;
      return;
    }
    const std::size_t item = order_[depth];
    const bool tied = depth > 0 && items_[order_[depth - 1]] == items_[item];
    const std::size_t start = tied ? min_choice : 0;
    for (std::size_t c = start; c <= bins_.size(); ++c) {
      if (c == bins_.size()) {
        choice_[depth] = c;
        dfs(depth + 1, c);
        choice_[depth] = bins_.size();
        break;
      }
      const bool empty = fill_[c].is_zero();
      if (empty && classes_[class_of_[c]][class_open_[class_of_[c]]] != c) continue;
      // Place item on bin c.
      const bool was_covered = covered_[c];
      fill_[c] += items_[item];
      if (!was_covered && fill_[c] >= bins_[c].demand) {
        covered_[c] = true;
        current_ += bins_[c].profit;
      }
      if (empty) ++class_open_[class_of_[c]];
      choice_[depth] = c;
      dfs(depth + 1, c);
      choice_[depth] = bins_.size();
      if (empty) --class_open_[class_of_[c]];
      if (!was_covered && covered_[c]) {
        covered_[c] = false;
        current_ -= bins_[c].profit;
      }
      fill_[c] -= items_[item];
    }
  }

  const std::vector<Rat>& items_;
  std::vector<BinType> bins_;
  bool variable_sized_;
  std::vector<std::size_t> order_;
  std::vector<Rat> suffix_;
  std::vector<Rat> fill_;
  std::vector<bool> covered_;
  std::vector<std::size_t> choice_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> class_open_;
  Rat current_;
  Rat best_;
  std::vector<std::size_t> best_choice_;
};

}  // namespace

ExactResult exact_opt_unit(const Instance& inst, const OracleCaps& caps) {
  check_instance(inst);
  if (inst.supply != Supply::kUnit) throw UsageError("exact_opt_unit needs unit supply");
  if (inst.num_items() > caps.max_items)
    throw CapExceeded("exact oracle refused: " + std::to_string(inst.num_items()) +
                      " items exceed the cap of " + std::to_string(caps.max_items) +
                      " (raise BINCOVER_ORACLE_CAP)");
  if (inst.num_bins() > caps.max_bins)
    throw CapExceeded("exact oracle refused: " + std::to_string(inst.num_bins()) +
                      " bins exceed the cap of " + std::to_string(caps.max_bins) +
                      " (raise BINCOVER_ORACLE_CAP)");

  Search search(inst, inst.bins, inst.problem_class == ProblemClass::kVariableSized);
  search.run();

  ExactResult result;
  result.value = search.best();
  std::vector<std::vector<std::size_t>> per_bin(inst.num_bins());
  for (std::size_t depth = 0; depth < inst.num_items(); ++depth) {
    const std::size_t c = search.best_choice()[depth];
    if (c < inst.num_bins()) per_bin[c].push_back(search.order()[depth]);
  }
  for (std::size_t i = 0; i < per_bin.size(); ++i) {
    if (per_bin[i].empty()) continue;
    BinSlot slot;
    slot.type = i;
    std::sort(per_bin[i].begin(), per_bin[i].end());
    slot.items = std::move(per_bin[i]);
    result.witness.slots.push_back(std::move(slot));
  }
  return result;
}

Rat exact_opt_infinite(const Instance& inst, const OracleCaps& caps) {
  check_instance(inst);
  if (inst.supply != Supply::kInfinite) throw UsageError("exact_opt_infinite needs infinite supply");
  if (inst.num_items() > caps.max_items)
    throw CapExceeded("exact oracle refused: " + std::to_string(inst.num_items()) +
                      " items exceed the cap of " + std::to_string(caps.max_items) +
                      " (raise BINCOVER_ORACLE_CAP)");
  if (inst.num_bins() > caps.max_bins)
    throw CapExceeded("exact oracle refused: " + std::to_string(inst.num_bins()) +
                      " bin types exceed the cap of " + std::to_string(caps.max_bins) +
                      " (raise BINCOVER_ORACLE_CAP)");
  if (inst.num_items() == 0) return Rat(0);

  // n copies of each type always suffice; identical-bin symmetry breaking in
  // the search keeps the blowup harmless.
  std::vector<BinType> expanded;
  expanded.reserve(inst.num_bins() * inst.num_items());
  for (const BinType& type : inst.bins) {
    for (std::size_t c = 0; c < inst.num_items(); ++c) expanded.push_back(type);
  }
  Search search(inst, std::move(expanded),
                inst.problem_class == ProblemClass::kVariableSized);
  search.run();
  return search.best();
}

Lp1Model build_lp1(const Instance& inst) {
  check_instance(inst);
  Lp1Model model;
  const std::size_t m = inst.num_bins();
  const std::size_t n = inst.num_items();
  model.num_bins = m;

  LpProblem& lp = model.lp;
  for (std::size_t i = 0; i < m; ++i) lp.add_var(inst.bins[i].profit);
  lp.upper.assign(m, std::nullopt);
  for (std::size_t i = 0; i < m; ++i) lp.upper[i] = Rat(1);

  std::vector<LpRow> bin_rows(m);
  for (std::size_t i = 0; i < m; ++i) {
    bin_rows[i].sense = Sense::kLe;
    bin_rows[i].rhs = Rat(0);
    bin_rows[i].coeffs.emplace_back(i, Rat(1));
  }
  std::vector<LpRow> item_rows(n);
  for (std::size_t j = 0; j < n; ++j) {
    item_rows[j].sense = Sense::kLe;
    item_rows[j].rhs = inst.items[j];
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (inst.items[j] > inst.bins[i].demand) continue;  // inadmissible x fixed to 0
      const std::size_t var = lp.add_var(Rat(0));
      lp.upper.push_back(std::nullopt);
      model.x_vars.emplace_back(j, i);
      bin_rows[i].coeffs.emplace_back(var, Rat(-1) / inst.bins[i].demand);
      item_rows[j].coeffs.emplace_back(var, Rat(1));
    }
  }
  for (auto& row : bin_rows) lp.rows.push_back(std::move(row));
  for (auto& row : item_rows) lp.rows.push_back(std::move(row));
  return model;
}

}  // namespace bincover
