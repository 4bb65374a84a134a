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

#ifndef BINCOVER_GENERATORS_HPP
#define BINCOVER_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "bincover/instance.hpp"

namespace bincover {

/// splitmix64: tiny, portable, deterministic PRNG. Used everywhere a seed is
/// involved so that outputs are reproducible across platforms and stdlibs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) via rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Stable mixing of several seed components into one 64-bit stream seed.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0,
                       std::uint64_t d = 0);

/// The tight family for Next Fit Decreasing: bins with demands
/// {4, 3-2e, 3-2e, 3-2e} and items {2-e x3, 1-e x3}, variable-sized, unit
/// supply. Requires 0 < eps < 2/3.
Instance gen_example1(const Rat& eps);

/// Reduction from Partition: sizes s'_j are scaled to 2m*s'_j, m-2 unit items
/// are appended, and the bins are {s/2, s/2, 1 x(m-2)} where s is the total
/// scaled size of the n partition items. A yes-instance of Partition has
/// optimal profit s+m-2; a no-instance at most s/2+m-2. Requires m >= 2.
Instance gen_partition_reduction(const std::vector<long>& partition_sizes, std::size_t m);

struct RandomSpec {
  std::size_t n = 0;
  std::size_t m = 1;
  Supply supply = Supply::kUnit;
  ProblemClass problem_class = ProblemClass::kVariableSized;
  Rat demand_lo{1}, demand_hi{6};  // also the profit range for generalized
  Rat size_lo{1}, size_hi{6};
  unsigned max_denominator = 4;
  std::uint64_t seed = 0;
};

/// Deterministic random instance: values are rationals q with denominator in
/// {1..max_denominator} drawn uniformly from the requested range. For the
/// variable-sized class p := d; for generalized the profit is drawn
/// independently from the demand range.
Instance gen_random(const RandomSpec& spec);

}  // namespace bincover

#endif  // BINCOVER_GENERATORS_HPP
