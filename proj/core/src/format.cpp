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

#include "bincover/format.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace bincover {

namespace {

struct LineReader {
  std::istream& in;
  std::size_t line_no = 0;

  // Returns the next non-empty, non-comment line.
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      if (line[first] == '#') continue;
      const auto last = line.find_last_not_of(" \t\r");
      out = line.substr(first, last - first + 1);
      return true;
    }
    return false;
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

Rat parse_rat(const std::string& tok, std::size_t line) {
  auto r = Rat::from_literal(tok);
  if (!r) throw ParseError(line, "bad numeric literal '" + tok + "'");
  return *r;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "bad count '" + tok + "'");
  return static_cast<std::size_t>(std::stoull(tok));
}

}  // namespace

Instance parse_instance(std::istream& in) {
  LineReader reader{in};
  std::string line;
  Instance inst;

  if (!reader.next(line)) throw ParseError(reader.line_no, "missing 'mode' line");
  {
    auto toks = split_ws(line);
    if (toks.size() != 2 || toks[0] != "mode" || (toks[1] != "unit" && toks[1] != "infinite"))
      throw ParseError(reader.line_no, "expected 'mode unit' or 'mode infinite'");
    inst.supply = toks[1] == "unit" ? Supply::kUnit : Supply::kInfinite;
  }

  if (!reader.next(line)) throw ParseError(reader.line_no, "missing 'class' line");
  {
    auto toks = split_ws(line);
    if (toks.size() != 2 || toks[0] != "class" ||
        (toks[1] != "generalized" && toks[1] != "variable"))
      throw ParseError(reader.line_no, "expected 'class generalized' or 'class variable'");
    inst.problem_class =
        toks[1] == "variable" ? ProblemClass::kVariableSized : ProblemClass::kGeneralized;
  }

  if (!reader.next(line)) throw ParseError(reader.line_no, "missing 'bins' line");
  std::size_t m = 0;
  {
    auto toks = split_ws(line);
    if (toks.size() != 2 || toks[0] != "bins")
      throw ParseError(reader.line_no, "expected 'bins <m>'");
    m = parse_count(toks[1], reader.line_no);
    if (m == 0) throw ParseError(reader.line_no, "instance needs at least one bin");
  }

  inst.bins.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!reader.next(line)) throw ParseError(reader.line_no, "missing bin line");
    auto toks = split_ws(line);
    BinType bin;
    if (toks.size() == 1 && inst.problem_class == ProblemClass::kVariableSized) {
      bin.demand = parse_rat(toks[0], reader.line_no);
      bin.profit = bin.demand;
    } else if (toks.size() == 2) {
      bin.profit = parse_rat(toks[0], reader.line_no);
      bin.demand = parse_rat(toks[1], reader.line_no);
    } else {
      throw ParseError(reader.line_no, "expected '<p> <d>'");
    }
    if (!bin.demand.is_positive()) throw ParseError(reader.line_no, "demand must be > 0");
    if (bin.profit.is_negative()) throw ParseError(reader.line_no, "profit must be >= 0");
    if (inst.problem_class == ProblemClass::kVariableSized && bin.profit != bin.demand)
      throw ParseError(reader.line_no, "variable-sized instance requires p = d");
    inst.bins.push_back(std::move(bin));
  }

  if (!reader.next(line)) throw ParseError(reader.line_no, "missing 'items' line");
  std::size_t n = 0;
  {
    auto toks = split_ws(line);
    if (toks.size() != 2 || toks[0] != "items")
      throw ParseError(reader.line_no, "expected 'items <n>'");
    n = parse_count(toks[1], reader.line_no);
  }

  inst.items.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!reader.next(line)) throw ParseError(reader.line_no, "missing item line");
    auto toks = split_ws(line);
    if (toks.size() != 1) throw ParseError(reader.line_no, "expected '<s>'");
    Rat s = parse_rat(toks[0], reader.line_no);
    if (!s.is_positive()) throw ParseError(reader.line_no, "item size must be > 0");
    inst.items.push_back(std::move(s));
  }

  if (reader.next(line)) throw ParseError(reader.line_no, "trailing content after items");
  return inst;
}

Instance parse_instance_string(const std::string& text) {
  std::istringstream iss(text);
  return parse_instance(iss);
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "mode " << (inst.supply == Supply::kUnit ? "unit" : "infinite") << "\n";
  out << "class "
      << (inst.problem_class == ProblemClass::kVariableSized ? "variable" : "generalized")
      << "\n";
  out << "bins " << inst.num_bins() << "\n";
  for (const BinType& b : inst.bins) {
    if (inst.problem_class == ProblemClass::kVariableSized) {
      out << b.demand.str() << "\n";
    } else {
      out << b.profit.str() << " " << b.demand.str() << "\n";
    }
  }
  out << "items " << inst.num_items() << "\n";
  for (const Rat& s : inst.items) out << s.str() << "\n";
  return out.str();
}

void save_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_instance(inst);
}

}  // namespace bincover
