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

#ifndef BINCOVER_FORMAT_HPP
#define BINCOVER_FORMAT_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "bincover/instance.hpp"

namespace bincover {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

// Instance file format (UTF-8 text, '#' starts a comment line):
//   mode unit|infinite
//   class generalized|variable
//   bins <m>
//   <p> <d>            (m lines; for class variable a single <d> is accepted)
//   items <n>
//   <s>                (n lines)
// Numeric literals: integer, decimal ("2.75") or rational ("19/10").
Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
Instance load_instance_file(const std::string& path);

std::string serialize_instance(const Instance& inst);
void save_instance_file(const Instance& inst, const std::string& path);

}  // namespace bincover

#endif  // BINCOVER_FORMAT_HPP
