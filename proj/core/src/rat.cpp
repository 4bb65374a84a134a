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

#include "bincover/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace bincover {

Rat::Rat(long num, long den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

mpz_class Rat::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rat::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> Rat::from_literal(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpq_class q(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    if (negative) q = -q;
    return Rat(std::move(q));
  }

  const auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = (whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10)) * scale +
                    (frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10));
    mpq_class q(num, scale);
    q.canonicalize();
    if (negative) q = -q;
    return Rat(std::move(q));
  }

  if (!all_digits(text)) return std::nullopt;
  mpq_class q(mpz_class(std::string(text), 10));
  if (negative) q = -q;
  return Rat(std::move(q));
}

}  // namespace bincover
