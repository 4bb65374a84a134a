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

#ifndef BINCOVER_RAT_HPP
#define BINCOVER_RAT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bincover {

/// Exact rational. Always reduced, denominator > 0. Every operation in the
/// library goes through this type; nothing is ever rounded.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // NOLINT: implicit by design, Rat(3) reads naturally
  Rat(long num, long den);
  explicit Rat(const mpz_class& z) : q_(z) {}
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "3", "-7", "2.75" (exact decimal) or "19/10". Returns nullopt on
  /// malformed input or a zero denominator.
  static std::optional<Rat> from_literal(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sgn() const { return mpq_sgn(q_.get_mpq_t()); }
  bool is_zero() const { return sgn() == 0; }
  bool is_positive() const { return sgn() > 0; }
  bool is_negative() const { return sgn() < 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  mpz_class floor() const;
  mpz_class ceil() const;

  /// Canonical text form: "num/den", or just "num" for integers.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-q_)); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
    return c <=> 0;
  }

 private:
  mpq_class q_;
};

inline Rat abs(const Rat& a) { return a.is_negative() ? -a : a; }
inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace bincover

#endif  // BINCOVER_RAT_HPP
