// Copyright 2026 The primdeg Authors
//
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

#ifndef PRIMDEG_TOOLS_CLI_HPP
#define PRIMDEG_TOOLS_CLI_HPP

// Command bodies for the `primdeg` tool. Each takes parsed options and the
// output streams and returns the process exit code, so tests can drive them
// without spawning processes.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "primdeg/primdeg.hpp"

namespace primdeg::cli {

enum Exit : int {
  kPrimitive = 0,
  kNotPrimitive = 1,
  kInputError = 2,
  kBoundViolated = 3,
};

struct AnalyzeArgs {
  std::string path;
  bool pretty = false;
  std::optional<std::size_t> trace_column; // 1-based
};

struct GenerateArgs {
  std::string kind; // wielandt | random | random-primitive
  std::size_t n = 0;
  std::size_t m = 0;
  double density = 1.0;
  std::optional<std::uint64_t> seed;
  std::size_t max_tries = 1000;
  bool uniform_values = false;
};

struct OracleCheckArgs {
  std::optional<std::string> path;
  std::string kind = "wielandt"; // wielandt | random | lift, when no path
  std::size_t n = 3;
  std::size_t m = 3;
  double density = 0.5;
  std::optional<std::uint64_t> seed;
  unsigned power_rmax = kDefaultPowerOracleRmax;
  std::uint64_t max_entries = kDefaultMaxEntries;
};

struct ExperimentArgs {
  std::size_t n_min = 2;
  std::size_t n_max = 2;
  std::size_t m = 3;
  std::vector<double> densities;
  std::size_t trials = 1;
  std::optional<std::uint64_t> seed;
  bool include_wielandt = false;
  unsigned jobs = 1;
};

namespace detail {

inline std::string members_1based(const PatternVector &v) {
  std::string s;
  for (Index i : v.members()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(i + 1);
  }
  return s.empty() ? "-" : s;
}

inline std::string opt_str(const std::optional<std::uint64_t> &v) {
  return v ? std::to_string(*v) : "-";
}

inline std::optional<Tensor> load(const std::string &path, std::ostream &err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot open '" << path << "'\n";
    return std::nullopt;
  }
  try {
    return parse_tensor(in);
  } catch (const ParseError &e) {
    err << "error: " << path << ": " << e.what() << "\n";
  }
  return std::nullopt;
}

/// Density rendered the same way in every table.
inline std::string density_str(double d) { return format_value(d); }

} // namespace detail

/// Report for one tensor; see README for the layout.
inline int run_analyze_tensor(const Tensor &a, const AnalyzeArgs &args,
                              std::ostream &out, std::ostream &err) {
  const std::size_t n = a.dim();
  if (args.trace_column && (*args.trace_column < 1 || *args.trace_column > n)) {
    err << "error: --trace column " << *args.trace_column
        << " out of range [1, " << n << "]\n";
    return kInputError;
  }
  const DegreeReport rep = analyze(a);
  const CycleInfo cycles = short_cycles_and_H(a);

  if (args.pretty) {
    out << "tensor: order " << a.order() << ", dimension " << n << ", "
        << a.nnz() << " positive entries\n";
    if (rep.primitive) {
      out << "verdict: primitive with degree " << *rep.gamma << " (bound "
          << rep.bound << (*rep.gamma == rep.bound ? ", attained" : "")
          << ")\n";
    } else {
      out << "verdict: not primitive (no full power pattern within "
          << rep.bound << " steps)\n";
    }
    if (rep.violation) out << "precheck: " << rep.violation->message << "\n";
    out << "cycle vertices H: {" << detail::members_1based(cycles.H)
        << "}, s = " << cycles.s << "\n";
    out << "per-column degrees:\n";
    for (Index j = 0; j < n; ++j) {
      out << "  column " << std::setw(3) << (j + 1) << ": "
          << (rep.gamma_j[j] ? std::to_string(*rep.gamma_j[j]) : "never")
          << "\n";
    }
  } else {
    out << "primitive: " << (rep.primitive ? "yes" : "no") << "\n";
    if (rep.primitive) out << "gamma: " << *rep.gamma << "\n";
    out << "bound: " << rep.bound << "\n";
    out << "order: " << a.order() << "\n";
    out << "dim: " << n << "\n";
    out << "steps_run: " << rep.steps_run << "\n";
    if (rep.violation) {
      out << "violation: " << kind_name(rep.violation->kind) << ": "
          << rep.violation->message << "\n";
    }
    out << "H: " << detail::members_1based(cycles.H) << "\n";
    out << "s: " << cycles.s << "\n";
    out << "#j\tgamma_j\n";
    for (Index j = 0; j < n; ++j)
      out << (j + 1) << "\t" << detail::opt_str(rep.gamma_j[j]) << "\n";
  }

  if (args.trace_column) {
    const Index j = static_cast<Index>(*args.trace_column - 1);
    const auto trace = column_fill_trace(a, j);
    out << "#trace\tj=" << (j + 1) << "\n";
    out << "#k\tS_k\n";
    for (std::size_t k = 0; k < trace.size(); ++k)
      out << (k + 1) << "\t" << detail::members_1based(trace[k]) << "\n";
  }
  return rep.primitive ? kPrimitive : kNotPrimitive;
}

inline int run_analyze(const AnalyzeArgs &args, std::ostream &out,
                       std::ostream &err) {
  auto a = detail::load(args.path, err);
  if (!a) return kInputError;
  return run_analyze_tensor(*a, args, out, err);
}

/// Builds the requested instance; throws std::invalid_argument on bad params.
inline Tensor generate_tensor(const GenerateArgs &g) {
  if (g.m < 2) throw std::invalid_argument("--m must be >= 2");
  if (g.kind == "wielandt") {
    if (g.n < 2) throw std::invalid_argument("--n must be >= 2 for wielandt");
    return wielandt_tensor(g.n, g.m);
  }
  if (g.kind != "random" && g.kind != "random-primitive")
    throw std::invalid_argument("unknown kind '" + g.kind + "'");
  if (g.n < 1) throw std::invalid_argument("--n must be >= 1");
  if (!g.seed) throw std::invalid_argument(g.kind + " requires an explicit --seed");
  const ValueMode vm = g.uniform_values ? ValueMode::Uniform : ValueMode::Ones;
  if (g.kind == "random") return random_tensor(g.n, g.m, g.density, *g.seed, vm);
  return random_primitive_tensor(g.n, g.m, g.density, *g.seed, g.max_tries, vm).tensor;
}

inline int run_generate(const GenerateArgs &g, std::ostream &out,
                        std::ostream &err) {
  try {
    write_tensor(out, generate_tensor(g));
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}

struct CheckLine {
  enum class Status { Pass, Fail, Skipped };
  Status status;
  std::string name;
  std::string detail;
};

inline std::string_view status_name(CheckLine::Status s) {
  switch (s) {
  case CheckLine::Status::Pass: return "PASS";
  case CheckLine::Status::Fail: return "FAIL";
  case CheckLine::Status::Skipped: return "SKIPPED";
  }
  return "?";
}

/// Engine against every independent route that applies to `a`.
inline std::vector<CheckLine> oracle_checks(const Tensor &a, unsigned power_rmax,
                                            std::uint64_t max_entries) {
  using S = CheckLine::Status;
  std::vector<CheckLine> lines;
  const DegreeReport rep = analyze(a, {.record_trace = true});
  const std::string g = rep.primitive ? std::to_string(*rep.gamma) : "none";

  // T-map support iteration.
  {
    const auto t = tmap_oracle_degree(a);
    const bool ok = (t.has_value() == rep.primitive) &&
                    (!t || static_cast<std::uint64_t>(*t) == *rep.gamma);
    lines.push_back({ok ? S::Pass : S::Fail, "tmap-degree",
                     "engine=" + g + " tmap=" + (t ? std::to_string(*t) : "none")});
  }
  {
    const auto mm = tmap_numeric_mismatch(a);
    lines.push_back({mm ? S::Fail : S::Pass, "tmap-numeric-support",
                     mm ? "column " + std::to_string(mm->column + 1) + " step " +
                              std::to_string(mm->step)
                        : "supports agree"});
  }
  // Column j of Z(M(A^r)) equals r support steps from e_j.
  {
    bool ok = true;
    std::string where = "all recorded steps";
    for (Index j = 0; j < a.dim() && ok; ++j) {
      PatternVector x = PatternVector::unit(a.dim(), j);
      for (std::size_t r = 0; r < rep.trace.size(); ++r) {
        x = tmap_support_step(a, x);
        if (x != rep.trace[r].column(j)) {
          ok = false;
          where = "column " + std::to_string(j + 1) + " step " + std::to_string(r + 1);
          break;
        }
      }
    }
    lines.push_back({ok ? S::Pass : S::Fail, "tmap-columns", where});
  }
  // Materialized powers.
  {
    unsigned compared = 0;
    std::optional<unsigned> power_gamma;
    bool patterns_ok = true;
    std::string refused;
    try {
      for_each_power(a, power_rmax, max_entries, [&](unsigned r, const Tensor &p) {
        const PatternMatrix mp = majorization(p);
        const PatternMatrix engine = r <= rep.trace.size() ? rep.trace[r - 1]
                                                           : power_pattern(a, r);
        if (mp != engine) patterns_ok = false;
        if (!power_gamma && mp.all()) power_gamma = r;
        ++compared;
        return true;
      });
    } catch (const OracleRefused &e) {
      refused = "A^" + std::to_string(e.first_infeasible()) + " over cap";
    }
    if (compared == 0) {
      lines.push_back({S::Skipped, "power-patterns", refused});
    } else {
      lines.push_back({patterns_ok ? S::Pass : S::Fail, "power-patterns",
                       "r=1.." + std::to_string(compared) +
                           (refused.empty() ? "" : " (" + refused + ")")});
    }
    // Degree agreement is decidable when the oracle reached min(gamma, rmax).
    const std::uint64_t need =
        rep.primitive ? std::min<std::uint64_t>(*rep.gamma, power_rmax) : power_rmax;
    if (power_gamma || compared >= need) {
      bool ok;
      if (rep.primitive && *rep.gamma <= compared)
        ok = power_gamma && *power_gamma == *rep.gamma;
      else
        ok = !power_gamma;
      lines.push_back({ok ? S::Pass : S::Fail, "power-degree",
                       "engine=" + g + " power=" +
                           (power_gamma ? std::to_string(*power_gamma)
                                        : "none<=" + std::to_string(compared))});
    } else {
      lines.push_back({S::Skipped, "power-degree", refused});
    }
  }
  // Matrix lifts: iterates equal Boolean powers of M(A).
  if (is_matrix_lift(a)) {
    const PatternMatrix m = majorization(a);
    PatternMatrix p = m;
    bool ok = true;
    const std::uint64_t steps = rep.bound;
    PatternMatrix cols = m.transposed();
    const PropagationKernel kernel(a);
    for (std::uint64_t k = 1; k <= steps && ok; ++k) {
      if (k > 1) {
        p = m * p;
        cols = kernel.step_columns(cols);
      }
      ok = cols.transposed() == p;
    }
    const auto me = matrix_exponent(m);
    const bool deg_ok = (me.has_value() == rep.primitive) &&
                        (!me || static_cast<std::uint64_t>(*me) == *rep.gamma);
    lines.push_back({ok ? S::Pass : S::Fail, "lift-boolean-powers",
                     "k=1.." + std::to_string(steps)});
    lines.push_back({deg_ok ? S::Pass : S::Fail, "lift-matrix-exponent",
                     "engine=" + g + " matrix=" + (me ? std::to_string(*me) : "none")});
  } else {
    lines.push_back({S::Skipped, "lift-boolean-powers", "not a matrix lift"});
  }
  {
    const bool ok = !rep.primitive || !rep.violation;
    lines.push_back({ok ? S::Pass : S::Fail, "prechecks",
                     rep.violation ? std::string(kind_name(rep.violation->kind))
                                   : "no violation"});
  }
  return lines;
}

inline int run_oracle_check(const OracleCheckArgs &o, std::ostream &out,
                            std::ostream &err) {
  std::optional<Tensor> a;
  if (o.path) {
    a = detail::load(*o.path, err);
    if (!a) return kInputError;
  } else {
    try {
      if (o.kind == "lift") {
        if (!o.seed) throw std::invalid_argument("lift requires an explicit --seed");
        const Tensor shape = random_tensor(o.n, 2, o.density, *o.seed);
        a = lift_matrix(majorization(shape), o.m);
      } else {
        GenerateArgs g;
        g.kind = o.kind;
        g.n = o.n;
        g.m = o.m;
        g.density = o.density;
        g.seed = o.seed;
        a = generate_tensor(g);
      }
    } catch (const std::exception &e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
  }
  bool all_ok = true;
  for (const auto &line : oracle_checks(*a, o.power_rmax, o.max_entries)) {
    out << status_name(line.status) << "\t" << line.name << "\t" << line.detail
        << "\n";
    all_ok = all_ok && line.status != CheckLine::Status::Fail;
  }
  return all_ok ? 0 : 1;
}

struct ExperimentRow {
  std::size_t n;
  std::size_t m;
  double density;
  std::size_t trials;
  std::size_t primitive_count = 0;
  std::optional<std::uint64_t> max_gamma;
  std::uint64_t bound;
  std::size_t bound_hit_count = 0;
};

/// Seed of trial `t` in the row for (n, density index d).
inline std::uint64_t trial_seed(std::uint64_t master, std::size_t n,
                                std::size_t d, std::size_t t) {
  return SplitMix64::derive(SplitMix64::derive(SplitMix64::derive(master, n), d), t);
}

inline int run_experiment(const ExperimentArgs &x, std::ostream &out,
                          std::ostream &err) {
  if (!x.seed) {
    err << "error: experiment requires an explicit --seed\n";
    return kInputError;
  }
  if (x.n_min < 1 || x.n_max < x.n_min || x.m < 2 || x.densities.empty() ||
      x.trials < 1 || x.jobs < 1) {
    err << "error: invalid experiment parameters\n";
    return kInputError;
  }
  for (double d : x.densities) {
    if (!(d > 0.0 && d <= 1.0)) {
      err << "error: density " << d << " not in (0, 1]\n";
      return kInputError;
    }
  }

  out << "#n\tm\tdensity\ttrials\tprimitive_count\tmax_gamma\tbound\tbound_hit_count\n";
  for (std::size_t n = x.n_min; n <= x.n_max; ++n) {
    for (std::size_t d = 0; d < x.densities.size(); ++d) {
      const std::size_t count = x.trials + (x.include_wielandt && n >= 2 ? 1 : 0);
      std::vector<Tensor> tensors;
      tensors.reserve(count);
      for (std::size_t t = 0; t < x.trials; ++t)
        tensors.push_back(random_tensor(n, x.m, x.densities[d], trial_seed(*x.seed, n, d, t)));
      if (count > x.trials) tensors.push_back(wielandt_tensor(n, x.m));

      // Results are indexed by trial, so row contents do not depend on
      // which worker finishes first.
      std::vector<DegreeReport> reports(count);
      {
        std::vector<std::jthread> pool;
        const unsigned workers = std::min<std::size_t>(x.jobs, count);
        for (unsigned w = 0; w < workers; ++w) {
          pool.emplace_back([&, w] {
            for (std::size_t t = w; t < count; t += workers) reports[t] = analyze(tensors[t]);
          });
        }
      }

      ExperimentRow row{n, x.m, x.densities[d], count, 0, std::nullopt,
                        degree_bound(n), 0};
      for (std::size_t t = 0; t < count; ++t) {
        const DegreeReport &r = reports[t];
        if (!r.primitive) continue;
        ++row.primitive_count;
        row.max_gamma = std::max(row.max_gamma.value_or(0), *r.gamma);
        if (*r.gamma == row.bound) ++row.bound_hit_count;
        if (*r.gamma > row.bound) {
          err << "COUNTEREXAMPLE: gamma " << *r.gamma << " exceeds bound "
              << row.bound << " (n=" << n << ", m=" << x.m << ", trial " << t
              << ")\n";
          write_tensor(err, tensors[t]);
          AnalyzeArgs aa;
          aa.trace_column = 1;
          run_analyze_tensor(tensors[t], aa, err, err);
          return kBoundViolated;
        }
      }
      out << row.n << "\t" << row.m << "\t" << detail::density_str(row.density)
          << "\t" << row.trials << "\t" << row.primitive_count << "\t"
          << detail::opt_str(row.max_gamma) << "\t" << row.bound << "\t"
          << row.bound_hit_count << "\n";
    }
  }
  return 0;
}

} // namespace primdeg::cli

#endif // PRIMDEG_TOOLS_CLI_HPP
