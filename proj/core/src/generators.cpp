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

#include "bincover/generators.hpp"

#include <stdexcept>

namespace bincover {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix64::below(0)");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  SplitMix64 rng(a);
  std::uint64_t s = rng.next() ^ b;
  SplitMix64 rng2(s);
  s = rng2.next() ^ c;
  SplitMix64 rng3(s);
  return rng3.next() ^ d;
}

Instance gen_example1(const Rat& eps) {
  if (!eps.is_positive() || eps >= Rat(2, 3))
    throw UsageError("example1 requires 0 < eps < 2/3");
  Instance inst;
  inst.supply = Supply::kUnit;
  inst.problem_class = ProblemClass::kVariableSized;
  const Rat big{4};
  const Rat small = Rat(3) - Rat(2) * eps;
  inst.bins.push_back({big, big});
  for (int i = 0; i < 3; ++i) inst.bins.push_back({small, small});
  const Rat item_big = Rat(2) - eps;
  const Rat item_small = Rat(1) - eps;
  for (int i = 0; i < 3; ++i) inst.items.push_back(item_big);
  for (int i = 0; i < 3; ++i) inst.items.push_back(item_small);
  return inst;
}

Instance gen_partition_reduction(const std::vector<long>& partition_sizes, std::size_t m) {
  const std::size_t n = partition_sizes.size();
  if (m < 2 || n == 0) throw UsageError("partition reduction requires m >= 2 and items");
  for (long s : partition_sizes) {
    if (s <= 0) throw UsageError("partition sizes must be positive integers");
  }
  Instance inst;
  inst.supply = Supply::kUnit;
  inst.problem_class = ProblemClass::kVariableSized;
  Rat scaled_total;
  const Rat scale(static_cast<long>(2 * m));
  for (long s : partition_sizes) {
    Rat scaled = scale * Rat(s);
    scaled_total += scaled;
    inst.items.push_back(std::move(scaled));
  }
  for (std::size_t j = 0; j + 2 < m; ++j) inst.items.push_back(Rat(1));
  const Rat half = scaled_total / Rat(2);
  inst.bins.push_back({half, half});
  inst.bins.push_back({half, half});
  for (std::size_t i = 2; i < m; ++i) inst.bins.push_back({Rat(1), Rat(1)});
  return inst;
}

namespace {

// Number of integers in [lo*q, hi*q] and the smallest one.
bool numerator_range(const Rat& lo, const Rat& hi, unsigned long q, mpz_class& first,
                     mpz_class& count) {
  first = (lo * Rat(static_cast<long>(q))).ceil();
  const mpz_class last = (hi * Rat(static_cast<long>(q))).floor();
  if (last < first) return false;
  count = last - first + 1;
  return true;
}

Rat draw_rat(SplitMix64& rng, const Rat& lo, const Rat& hi, unsigned max_den) {
  if (max_den == 0) max_den = 1;
  bool any = false;
  for (unsigned long q = 1; q <= max_den; ++q) {
    mpz_class first, count;
    if (numerator_range(lo, hi, q, first, count)) {
      any = true;
      break;
    }
  }
  if (lo > hi || !any)
    throw UsageError("empty range: no rational with denominator <= " +
                     std::to_string(max_den) + " in [" + lo.str() + ", " + hi.str() + "]");
  unsigned long q = 1 + static_cast<unsigned long>(rng.below(max_den));
  mpz_class first, count;
  while (!numerator_range(lo, hi, q, first, count)) q = q % max_den + 1;
  if (!count.fits_ulong_p())
    throw UsageError("range too wide for the generator");
  const std::uint64_t pick = rng.below(count.get_ui());
  mpz_class num = first + static_cast<unsigned long>(pick);
  return Rat(mpq_class(num, mpz_class(q)));
}

}  // namespace

Instance gen_random(const RandomSpec& spec) {
  if (spec.m == 0) throw UsageError("need at least one bin");
  SplitMix64 rng(spec.seed);
  Instance inst;
  inst.supply = spec.supply;
  inst.problem_class = spec.problem_class;
  inst.bins.reserve(spec.m);
  for (std::size_t i = 0; i < spec.m; ++i) {
    BinType bin;
    bin.demand = draw_rat(rng, spec.demand_lo, spec.demand_hi, spec.max_denominator);
    bin.profit = spec.problem_class == ProblemClass::kVariableSized
                     ? bin.demand
                     : draw_rat(rng, spec.demand_lo, spec.demand_hi, spec.max_denominator);
    inst.bins.push_back(std::move(bin));
  }
  inst.items.reserve(spec.n);
  for (std::size_t j = 0; j < spec.n; ++j) {
    inst.items.push_back(draw_rat(rng, spec.size_lo, spec.size_hi, spec.max_denominator));
  }
  return inst;
}

}  // namespace bincover
