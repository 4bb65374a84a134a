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

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bincover/aptas.hpp"
#include "bincover/approx.hpp"
#include "bincover/exact.hpp"
#include "bincover/format.hpp"
#include "bincover/generators.hpp"
#include "bincover/nfd.hpp"
#include "bincover/report.hpp"

namespace {

using bincover::Rat;
using json = nlohmann::json;

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 success, 2 validation/parse/usage, 3 refusal (caps, budgets).
constexpr int kExitUsage = 2;
constexpr int kExitRefusal = 3;

std::string rat_field(const Rat& r) { return r.num().get_str() + "/" + r.den().get_str(); }

std::uint64_t elapsed_ns(const std::chrono::steady_clock::time_point& start) {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                        std::chrono::steady_clock::now() - start)
                                        .count());
}

json assignment_json(const bincover::Assignment& a) {
  json bins = json::array();
  for (const auto& slot : a.slots) {
    json b;
    b["bin"] = slot.type;
    b["copy"] = slot.copy;
    b["items"] = slot.items;
    bins.push_back(std::move(b));
  }
  return bins;
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string pair;
  while (std::getline(ss, pair, ';')) {
    if (pair.empty()) continue;
    const auto eq = pair.find('=');
    if (eq == std::string::npos) throw bincover::UsageError("bad parameter '" + pair + "'");
    out[pair.substr(0, eq)] = pair.substr(eq + 1);
  }
  return out;
}

Rat parse_rat_arg(const std::string& text, const std::string& what) {
  auto r = Rat::from_literal(text);
  if (!r) throw bincover::UsageError("bad " + what + " '" + text + "'");
  return *r;
}

std::size_t parse_size_arg(const std::string& text, const std::string& what) {
  try {
    return static_cast<std::size_t>(std::stoull(text));
  } catch (const std::exception&) {
    throw bincover::UsageError("bad " + what + " '" + text + "'");
  }
}

// ---------------------------------------------------------------------------
// gen

bincover::Instance generate_from_family(const std::string& family,
                                        const std::map<std::string, std::string>& params,
                                        std::uint64_t seed) {
  if (family == "example1") {
    const auto it = params.find("eps");
    if (it == params.end()) throw bincover::UsageError("example1 needs eps=<rat>");
    return bincover::gen_example1(parse_rat_arg(it->second, "eps"));
  }
  if (family == "partition") {
    const auto sizes_it = params.find("sizes");
    const auto m_it = params.find("m");
    if (sizes_it == params.end() || m_it == params.end())
      throw bincover::UsageError("partition needs sizes=<list>;m=<int>");
    std::vector<long> sizes;
    std::stringstream ss(sizes_it->second);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        sizes.push_back(std::stol(tok));
      } catch (const std::exception&) {
        throw bincover::UsageError("bad partition size '" + tok + "'");
      }
    }
    return bincover::gen_partition_reduction(sizes, parse_size_arg(m_it->second, "m"));
  }
  if (family == "uniform") {
    bincover::RandomSpec spec;
    spec.seed = seed;
    for (const auto& [key, value] : params) {
      if (key == "n") spec.n = parse_size_arg(value, "n");
      else if (key == "m") spec.m = parse_size_arg(value, "m");
      else if (key == "mode") {
        if (value == "unit") spec.supply = bincover::Supply::kUnit;
        else if (value == "infinite") spec.supply = bincover::Supply::kInfinite;
        else throw bincover::UsageError("mode must be unit or infinite");
      } else if (key == "class") {
        if (value == "variable") spec.problem_class = bincover::ProblemClass::kVariableSized;
        else if (value == "generalized") spec.problem_class = bincover::ProblemClass::kGeneralized;
        else throw bincover::UsageError("class must be variable or generalized");
      } else if (key == "maxden") spec.max_denominator = static_cast<unsigned>(parse_size_arg(value, "maxden"));
      else if (key == "dlo") spec.demand_lo = parse_rat_arg(value, "dlo");
      else if (key == "dhi") spec.demand_hi = parse_rat_arg(value, "dhi");
      else if (key == "slo") spec.size_lo = parse_rat_arg(value, "slo");
      else if (key == "shi") spec.size_hi = parse_rat_arg(value, "shi");
      else throw bincover::UsageError("unknown uniform parameter '" + key + "'");
    }
    return bincover::gen_random(spec);
  }
  throw bincover::UsageError("unknown family '" + family + "'");
}

// ---------------------------------------------------------------------------
// solve

struct SolveOptions {
  std::string algorithm;
  std::string input;
  std::string output;
  bool trace = false;
  bool dump_stages = false;
  std::string eps = "1/10";
  std::optional<std::size_t> k_override;
  std::size_t budget = 1'000'000;
};

json nfd_trace_json(const bincover::NfdTrace& trace) {
  json t;
  t["bin_order"] = trace.bin_order;
  t["unassigned_from"] = trace.unassigned_from;
  json outcomes = json::array();
  for (std::size_t pos = 0; pos < trace.outcomes.size(); ++pos) {
    const auto& o = trace.outcomes[pos];
    json entry;
    entry["bin"] = trace.bin_order[pos];
    entry["covered"] = o.covered;
    entry["fill"] = rat_field(o.fill);
    json items = json::array();
    if (o.covered) {
      for (std::size_t t2 = o.first_item; t2 < o.first_item + o.item_count; ++t2)
        items.push_back(trace.item_order[t2]);
    }
    entry["items"] = std::move(items);
    outcomes.push_back(std::move(entry));
  }
  t["outcomes"] = std::move(outcomes);
  return t;
}

json stages_json(const bincover::Gbc5Result& result) {
  json s;
  s["active_bins"] = result.active_bins;
  json raw = json::array();
  for (const auto& item_parts : result.raw_stage.parts) {
    json parts = json::array();
    for (const auto& [bin, amount] : item_parts) parts.push_back({bin, rat_field(amount)});
    raw.push_back(std::move(parts));
  }
  s["raw"] = std::move(raw);
  auto stage_json = [](const bincover::ModifiedStage& stage) {
    json out = json::array();
    for (const auto& bin : stage.item_bin) {
      if (bin) out.push_back(*bin);
      else out.push_back(nullptr);
    }
    return out;
  };
  s["merged"] = stage_json(result.merged_stage);
  s["maximal"] = stage_json(result.maximal_stage);
  s["modified_profits"] = {{"raw", rat_field(result.raw_modified)},
                           {"merged", rat_field(result.merged_modified)},
                           {"maximal", rat_field(result.maximal_modified)}};
  s["branch_profits"] = {{"matching", rat_field(result.matching_value)},
                         {"fractional", rat_field(result.fractional_value)}};
  return s;
}

json aptas_stats_json(const bincover::AptasStats& stats) {
  json s;
  s["large"] = stats.num_large;
  s["medium"] = stats.num_medium;
  s["tiny"] = stats.num_tiny;
  s["group_target"] = stats.group_target;
  s["groups"] = stats.groups;
  s["size_classes"] = stats.size_classes;
  s["configurations"] = stats.configurations;
  s["lp_rows"] = stats.lp_rows;
  s["lp_vars"] = stats.lp_vars;
  s["lp_objective"] = rat_field(stats.lp_objective);
  s["fractional_values"] = stats.fractional_values;
  s["committed_oversize"] = stats.committed_oversize;
  s["scale"] = rat_field(stats.scale);
  s["committed_profit"] = rat_field(stats.committed_profit);
  return s;
}

int run_solve(const SolveOptions& opt) {
  const bincover::Instance inst = bincover::load_instance_file(opt.input);
  bincover::check_instance(inst);

  json out;
  out["instance"] = opt.input;
  out["algorithm"] = opt.algorithm;

  const auto start = std::chrono::steady_clock::now();
  if (opt.algorithm == "nfd") {
    const bincover::NfdResult result = bincover::nfd(inst);
    out["wall_ns"] = elapsed_ns(start);
    out["profit"] = rat_field(result.value);
    out["bins"] = assignment_json(result.assignment);
    if (opt.trace) out["trace"] = nfd_trace_json(result.trace);
  } else if (opt.algorithm == "gbc5") {
    const bincover::Gbc5Result result = bincover::gbc5(inst);
    out["wall_ns"] = elapsed_ns(start);
    out["profit"] = rat_field(result.value);
    out["bins"] = assignment_json(result.assignment);
    if (opt.dump_stages) out["stages"] = stages_json(result);
  } else if (opt.algorithm == "aptas") {
    bincover::AptasParams params;
    params.eps = parse_rat_arg(opt.eps, "eps");
    params.group_count = opt.k_override;
    params.config_budget = opt.budget;
    const bincover::AptasResult result = bincover::aptas_solve(inst, params);
    out["wall_ns"] = elapsed_ns(start);
    out["profit"] = rat_field(result.value);
    out["bins"] = assignment_json(result.assignment);
    out["stats"] = aptas_stats_json(result.stats);
  } else if (opt.algorithm == "exact") {
    const bincover::OracleCaps caps = bincover::caps_from_env();
    if (inst.supply == bincover::Supply::kUnit) {
      const bincover::ExactResult result = bincover::exact_opt_unit(inst, caps);
      out["wall_ns"] = elapsed_ns(start);
      out["profit"] = rat_field(result.value);
      out["bins"] = assignment_json(result.witness);
    } else {
      const Rat value = bincover::exact_opt_infinite(inst, caps);
      out["wall_ns"] = elapsed_ns(start);
      out["profit"] = rat_field(value);
      out["bins"] = json::array();
    }
  } else {
    throw bincover::UsageError("unknown algorithm '" + opt.algorithm + "'");
  }

  if (opt.output.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::ofstream f(opt.output);
    if (!f) throw bincover::UsageError("cannot write '" + opt.output + "'");
    f << out.dump(2) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct GridRange {
  std::size_t lo = 0, hi = 0;
};

GridRange parse_range(const std::string& text) {
  GridRange r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_size_arg(text, "grid value");
  } else {
    r.lo = parse_size_arg(text.substr(0, dots), "grid value");
    r.hi = parse_size_arg(text.substr(dots + 2), "grid value");
  }
  if (r.lo > r.hi) throw bincover::UsageError("empty grid range '" + text + "'");
  return r;
}

struct BenchOptions {
  std::string algs = "nfd";
  std::string family = "uniform";
  std::string problem_class = "variable";
  std::string grid = "n=4..8,m=2..4";
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::string oracle;  // "" or "exact"
  std::string out;
};

int run_bench(const BenchOptions& opt) {
  if (opt.family != "uniform") throw bincover::UsageError("bench supports the uniform family");
  std::vector<std::string> algs;
  {
    std::stringstream ss(opt.algs);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok != "nfd" && tok != "gbc5")
        throw bincover::UsageError("bench algorithm must be nfd or gbc5, got '" + tok + "'");
      algs.push_back(tok);
    }
  }
  if (algs.empty()) throw bincover::UsageError("no algorithms requested");

  bincover::ProblemClass problem_class;
  if (opt.problem_class == "variable") {
    problem_class = bincover::ProblemClass::kVariableSized;
  } else if (opt.problem_class == "generalized") {
    problem_class = bincover::ProblemClass::kGeneralized;
  } else {
    throw bincover::UsageError("class must be variable or generalized");
  }
  for (const auto& alg : algs) {
    if (alg == "nfd" && problem_class != bincover::ProblemClass::kVariableSized)
      throw bincover::UsageError("nfd requires class=variable");
  }

  GridRange n_range, m_range;
  bool have_n = false, have_m = false;
  {
    std::stringstream ss(opt.grid);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw bincover::UsageError("bad grid entry '" + tok + "'");
      const std::string key = tok.substr(0, eq);
      if (key == "n") {
        n_range = parse_range(tok.substr(eq + 1));
        have_n = true;
      } else if (key == "m") {
        m_range = parse_range(tok.substr(eq + 1));
        have_m = true;
      } else {
        throw bincover::UsageError("grid keys are n and m");
      }
    }
  }
  if (!have_n || !have_m) throw bincover::UsageError("grid needs n=<range>,m=<range>");

  const bincover::OracleCaps caps = bincover::caps_from_env();
  std::vector<bincover::RatioReport> rows;
  std::vector<std::string> row_family, row_params;
  std::size_t capped_rows = 0;

  for (std::size_t n = n_range.lo; n <= n_range.hi; ++n) {
    for (std::size_t m = m_range.lo; m <= m_range.hi; ++m) {
      for (std::size_t trial = 0; trial < opt.trials; ++trial) {
        bincover::RandomSpec spec;
        spec.n = n;
        spec.m = m;
        spec.problem_class = problem_class;
        spec.seed = bincover::mix_seed(opt.seed, n, m, trial);
        const bincover::Instance inst = bincover::gen_random(spec);

        std::optional<Rat> oracle_value;
        if (opt.oracle == "exact") {
          try {
            oracle_value = bincover::exact_opt_unit(inst, caps).value;
          } catch (const bincover::CapExceeded&) {
            ++capped_rows;
          }
        } else if (!opt.oracle.empty()) {
          throw bincover::UsageError("unknown oracle '" + opt.oracle + "'");
        }

        std::ostringstream id;
        id << opt.family << "-n" << n << "-m" << m << "-t" << trial;
        std::ostringstream params;
        params << "n=" << n << ";m=" << m << ";trial=" << trial << ";seed=" << spec.seed;

        for (const auto& alg : algs) {
          const auto start = std::chrono::steady_clock::now();
          Rat value;
          if (alg == "nfd") {
            value = bincover::nfd(inst).value;
          } else {
            value = bincover::gbc5(inst).value;
          }
          rows.push_back(bincover::make_ratio_report(id.str(), alg, std::move(value),
                                                     oracle_value, elapsed_ns(start)));
          row_family.push_back(opt.family);
          row_params.push_back(params.str());
        }
      }
    }
  }

  // Canonical row order, independent of generation order.
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rows[a].instance_id != rows[b].instance_id)
      return rows[a].instance_id < rows[b].instance_id;
    return rows[a].algorithm < rows[b].algorithm;
  });

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) throw bincover::UsageError("cannot write '" + opt.out + "'");
    out = &file;
  }
  *out << "instance_id,family,params,algorithm,profit,oracle,ratio,wall_ns\n";
  for (std::size_t i : order) {
    const auto& r = rows[i];
    *out << r.instance_id << "," << row_family[i] << "," << row_params[i] << "," << r.algorithm
         << "," << rat_field(r.algorithm_profit) << ","
         << (r.oracle_profit ? rat_field(*r.oracle_profit) : "NA") << ","
         << (r.ratio ? rat_field(*r.ratio) : "NA") << "," << r.wall_ns << "\n";
  }

  if (capped_rows > 0) {
    std::cerr << "warning: oracle cap exceeded on " << capped_rows
              << " instances; their rows carry oracle=NA\n";
  }
  std::map<std::string, std::optional<Rat>> max_ratio;
  std::map<std::string, std::size_t> row_count;
  for (const auto& r : rows) {
    ++row_count[r.algorithm];
    if (r.ratio && (!max_ratio[r.algorithm] || *r.ratio > *max_ratio[r.algorithm]))
      max_ratio[r.algorithm] = r.ratio;
  }
  for (const auto& alg : algs) {
    std::cout << "summary algorithm=" << alg << " rows=" << row_count[alg] << " max_ratio="
              << (max_ratio[alg] ? rat_field(*max_ratio[alg]) : "NA") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bincover: solvers, generators and benchmarks for generalized bin covering"};
  app.set_version_flag("--version", std::string("bincover ") + kVersion);
  app.require_subcommand(0, 1);

  SolveOptions solve_opt;
  CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("--alg", solve_opt.algorithm, "nfd|gbc5|aptas|exact")->required();
  solve->add_option("--input", solve_opt.input, "instance file")->required();
  solve->add_option("--output", solve_opt.output, "write the solution JSON here");
  solve->add_flag("--trace", solve_opt.trace, "include the run trace (nfd)");
  solve->add_flag("--dump-stages", solve_opt.dump_stages, "include stage snapshots (gbc5)");
  solve->add_option("--eps", solve_opt.eps, "accuracy parameter (aptas)");
  std::size_t k_value = 0;
  CLI::Option* k_opt = solve->add_option("--k", k_value, "group-count override (aptas)");
  solve->add_option("--budget", solve_opt.budget, "configuration budget (aptas)");

  std::string gen_family, gen_params, gen_out;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--family", gen_family, "example1|partition|uniform")->required();
  gen->add_option("--params", gen_params, "family parameters, ';'-separated k=v pairs");
  gen->add_option("--seed", gen_seed, "random seed (uniform)");
  gen->add_option("--out", gen_out, "output file")->required();

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "run a benchmark grid and emit CSV");
  bench->add_option("--algs", bench_opt.algs, "comma list of nfd,gbc5");
  bench->add_option("--family", bench_opt.family, "instance family (uniform)");
  bench->add_option("--class", bench_opt.problem_class, "variable|generalized");
  bench->add_option("--grid", bench_opt.grid, "n=<a>..<b>,m=<a>..<b>");
  bench->add_option("--trials", bench_opt.trials, "instances per grid cell");
  bench->add_option("--seed", bench_opt.seed, "benchmark seed");
  bench->add_option("--oracle", bench_opt.oracle, "attach oracle values (exact)");
  bench->add_option("--out", bench_opt.out, "CSV output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      if (k_opt->count() > 0) solve_opt.k_override = k_value;
      return run_solve(solve_opt);
    }
    if (gen->parsed()) {
      const bincover::Instance inst =
          generate_from_family(gen_family, parse_params(gen_params), gen_seed);
      bincover::save_instance_file(inst, gen_out);
      return 0;
    }
    if (bench->parsed()) return run_bench(bench_opt);
    std::cout << app.help() << "\n";
    return 0;
  } catch (const bincover::CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefusal;
  } catch (const bincover::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bincover::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bincover::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
