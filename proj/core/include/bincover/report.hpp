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

#ifndef BINCOVER_REPORT_HPP
#define BINCOVER_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "bincover/rat.hpp"

namespace bincover {

/// One benchmark row: what an algorithm earned on an instance, next to the
/// oracle value when it was computable. The ratio is oracle/algorithm and is
/// present exactly when the oracle ran and the algorithm earned anything.
struct RatioReport {
  std::string instance_id;
  std::string algorithm;
  Rat algorithm_profit;
  std::optional<Rat> oracle_profit;
  std::optional<Rat> ratio;
  std::uint64_t wall_ns = 0;
};

inline RatioReport make_ratio_report(std::string instance_id, std::string algorithm,
                                     Rat algorithm_profit, std::optional<Rat> oracle_profit,
                                     std::uint64_t wall_ns) {
  RatioReport report;
  report.instance_id = std::move(instance_id);
  report.algorithm = std::move(algorithm);
  report.algorithm_profit = std::move(algorithm_profit);
  report.oracle_profit = std::move(oracle_profit);
  if (report.oracle_profit && report.algorithm_profit.is_positive()) {
    report.ratio = *report.oracle_profit / report.algorithm_profit;
  }
  report.wall_ns = wall_ns;
  return report;
}

}  // namespace bincover

#endif  // BINCOVER_REPORT_HPP
