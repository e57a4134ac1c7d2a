// Copyright 2026 The gbd Authors.
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

#include "cli.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gbd/benders_2ssmilp.h"
#include "gbd/benders_lp.h"
#include "gbd/benders_miblp.h"
#include "gbd/branch_bound.h"
#include "gbd/errors.h"
#include "gbd/instance_io.h"
#include "gbd/oracle.h"
#include "gbd/piecewise.h"
#include "gbd/random_instances.h"
#include "gbd/trace.h"
#include "json.hpp"

namespace gbd::cli {

namespace {

using nlohmann::json;

struct Flags {
  std::string instance;
  double tol = 1e-6;
  int max_iters = 200;
  std::string trace_out;
  std::string grid;
  std::optional<std::uint64_t> seed;
  std::string dump_cuts;
  std::string out;
  std::optional<double> beta;
  std::optional<double> dual_at;
};

json Num(double v) {
  if (std::isnan(v)) return "nan";
  if (v == kInfinity) return "inf";
  if (v == -kInfinity) return "-inf";
  return v;
}

json Vec(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(Num(x));
  return out;
}

json Rows(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out.push_back(Vec({m.Row(i).begin(), m.Row(i).end()}));
  }
  return out;
}

json LinearCutJson(const LinearCut& c) {
  return {{"iteration", c.iteration},
          {"kind", ToString(c.kind)},
          {"scenario", c.scenario},
          {"x_coeffs", Vec(c.x_coeffs)},
          {"z_coeff", c.z_coeff},
          {"rhs", Num(c.rhs)},
          {"multipliers", Vec(c.multipliers)}};
}

json DualJson(const MinAffineDual& d) {
  json terms = json::array();
  for (const AffineTerm& t : d.terms) {
    terms.push_back({{"beta1", Vec(t.beta1)},
                     {"beta2", Vec(t.beta2)},
                     {"phi", t.phi},
                     {"constant", t.constant}});
  }
  return {{"anchor1", Vec(d.anchor1)}, {"anchor2", Vec(d.anchor2)},
          {"terms", terms}};
}

json PrimalJson(const RestrictedPrimal& p) {
  return {{"eta", Vec(p.eta)},           {"integer_cost", p.integer_cost},
          {"offset", Vec(p.offset)},     {"domain", Rows(p.domain)},
          {"anchor", Vec(p.anchor)},     {"integer_part", Vec(p.integer_part)}};
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("", "cannot write " + path);
  f << text;
}

int BendersExit(BendersStatus s) {
  switch (s) {
    case BendersStatus::kOptimal:
      return kExitOk;
    case BendersStatus::kInfeasible:
      return kExitInfeasible;
    case BendersStatus::kUnbounded:
    case BendersStatus::kAssumptionViolated:
      return kExitUnbounded;
    case BendersStatus::kIterationLimit:
      return kExitLimit;
  }
  return kExitInput;
}

int MilpExit(MilpStatus s) {
  switch (s) {
    case MilpStatus::kOptimal:
      return kExitOk;
    case MilpStatus::kInfeasible:
      return kExitInfeasible;
    case MilpStatus::kUnbounded:
      return kExitUnbounded;
    case MilpStatus::kNodeLimit:
      return kExitLimit;
  }
  return kExitInput;
}

// Loads --instance, or generates from --seed when the kind allows it.
Instance Obtain(const Flags& f, const std::string& kind, std::ostream& err) {
  if (f.seed.has_value() && f.instance.empty()) {
    if (kind == "lp-benders") return RandomLpBenders(*f.seed);
    if (kind == "2ssmilp") return RandomTwoStage(*f.seed);
    if (kind == "miblp") return RandomMiblp(*f.seed);
    throw InputError("--seed", "no random generator for kind " + kind);
  }
  if (f.instance.empty()) throw InputError("--instance", "required");
  Instance inst = LoadInstance(f.instance);
  for (const std::string& w : LastParseWarnings()) err << "warning: " << w << "\n";
  if (KindOf(inst) != kind) {
    throw InputError("kind", "instance is " + KindOf(inst) + ", command expects " +
                                 kind);
  }
  return inst;
}

BendersOptions Options(const Flags& f) {
  if (!(f.tol > 0.0)) throw InputError("--tol", "must be positive");
  if (f.max_iters < 1) throw InputError("--max-iters", "must be at least 1");
  BendersOptions o;
  o.tol = f.tol;
  o.max_iters = f.max_iters;
  return o;
}

void Emit(std::ostream& out, const Flags& f, const json& doc) {
  const std::string text = doc.dump(2) + "\n";
  out << text;
  if (!f.out.empty()) WriteFile(f.out, text);
}

void EmitTrace(const Flags& f,
               const std::function<void(std::ostream&)>& writer) {
  if (f.trace_out.empty()) return;
  std::ostringstream s;
  writer(s);
  WriteFile(f.trace_out, s.str());
}

void EmitWarnings(json& doc, const std::vector<std::string>& warnings,
                  std::ostream& err) {
  doc["warnings"] = warnings;
  for (const std::string& w : warnings) err << "warning: " << w << "\n";
}

int SolveLpCmd(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto inst = std::get<LpBendersInstance>(Obtain(f, "lp-benders", err));
  const LpBendersResult r = SolveLpBenders(inst, Options(f));
  json doc{{"kind", "lp-benders"},  {"status", ToString(r.status)},
           {"value", Num(r.value)}, {"x", Vec(r.x)},
           {"y", Vec(r.y)},         {"iterations", r.iterations}};
  EmitWarnings(doc, r.warnings, err);
  Emit(out, f, doc);
  EmitTrace(f, [&](std::ostream& s) { WriteLpTraceCsv(s, r.trace); });
  if (!f.dump_cuts.empty()) {
    json cuts = json::array();
    for (const LinearCut& c : r.cuts) cuts.push_back(LinearCutJson(c));
    WriteFile(f.dump_cuts, json{{"cuts", cuts}}.dump(2) + "\n");
  }
  return BendersExit(r.status);
}

int SolveTwoStageCmd(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto inst = std::get<TwoStageInstance>(Obtain(f, "2ssmilp", err));
  const TwoStageResult r = SolveTwoStage(inst, Options(f));
  json ys = json::array();
  for (const auto& y : r.y) ys.push_back(Vec(y));
  json doc{{"kind", "2ssmilp"},     {"status", ToString(r.status)},
           {"value", Num(r.value)}, {"x", Vec(r.x)},
           {"y", ys},               {"iterations", r.iterations}};
  EmitWarnings(doc, r.warnings, err);
  Emit(out, f, doc);
  EmitTrace(f, [&](std::ostream& s) { WriteTwoStageTraceCsv(s, r.trace); });
  if (!f.dump_cuts.empty()) {
    json opt = json::array();
    for (const ScenarioCut& c : r.cuts) {
      opt.push_back({{"iteration", c.iteration},
                     {"scenario", c.scenario},
                     {"big_m", c.big_m},
                     {"dual", DualJson(c.dual)}});
    }
    json feas = json::array();
    for (const LinearCut& c : r.feasibility_cuts) feas.push_back(LinearCutJson(c));
    WriteFile(f.dump_cuts,
              json{{"optimality", opt}, {"feasibility", feas}}.dump(2) + "\n");
  }
  return BendersExit(r.status);
}

int SolveMiblpCmd(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto inst = std::get<MiblpInstance>(Obtain(f, "miblp", err));
  const MiblpResult r = SolveMiblp(inst, Options(f));
  json doc{{"kind", "miblp"},       {"status", ToString(r.status)},
           {"value", Num(r.value)}, {"x", Vec(r.x)},
           {"y", Vec(r.y)},         {"iterations", r.iterations}};
  EmitWarnings(doc, r.warnings, err);
  Emit(out, f, doc);
  EmitTrace(f, [&](std::ostream& s) { WriteMiblpTraceCsv(s, r.trace); });
  if (!f.dump_cuts.empty()) {
    json cuts = json::array();
    for (const ReactionCut& c : r.cuts) {
      cuts.push_back({{"iteration", c.iteration},
                      {"anchor_x", Vec(c.anchor_x)},
                      {"dual", DualJson(c.dual)},
                      {"primal", c.primal ? PrimalJson(*c.primal) : json(nullptr)},
                      {"m_dual", c.m_dual},
                      {"m_primal", c.m_primal},
                      {"m_domain_lo", Vec(c.m_domain_lo)},
                      {"m_domain_hi", Vec(c.m_domain_hi)},
                      {"epsilon", c.epsilon}});
    }
    json feas = json::array();
    for (const LinearCut& c : r.feasibility_cuts) feas.push_back(LinearCutJson(c));
    json excluded = json::array();
    for (const auto& p : r.excluded_points) excluded.push_back(Vec(p));
    WriteFile(f.dump_cuts, json{{"z_floor", Num(r.z_floor)},
                                {"cuts", cuts},
                                {"feasibility", feas},
                                {"excluded_points", excluded}}
                                   .dump(2) +
                               "\n");
  }
  return BendersExit(r.status);
}

MilpProblem AtBeta(const MilpInstance& inst, double beta) {
  MilpProblem p = inst.problem;
  for (std::size_t i = 0; i < p.lp.rhs.size(); ++i) {
    p.lp.rhs[i] += beta * inst.direction[i];
  }
  return p;
}

int SolveMilpCmd(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto inst = std::get<MilpInstance>(Obtain(f, "milp", err));
  const MilpResult r = SolveMilp(AtBeta(inst, f.beta.value_or(0.0)));
  json leaves = json::array();
  for (const BnbLeaf& leaf : r.tree.leaves) {
    leaves.push_back({{"status", ToString(leaf.status)},
                      {"lower", Vec(leaf.lower)},
                      {"upper", Vec(leaf.upper)},
                      {"duals", Vec(leaf.duals)},
                      {"alpha", leaf.alpha}});
  }
  json doc{{"kind", "milp"},          {"status", ToString(r.status)},
           {"value", Num(r.value)},   {"solution", Vec(r.solution)},
           {"nodes", r.nodes},        {"rhs", Vec(r.tree.rhs)},
           {"leaves", leaves}};
  Emit(out, f, doc);
  return MilpExit(r.status);
}

std::vector<double> ParseGrid(const std::string& text) {
  if (text.empty()) throw InputError("--grid", "required (LO:HI:STEP)");
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ':')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != piece.size()) {
      throw InputError("--grid", "expected LO:HI:STEP, got \"" + text + "\"");
    }
    parts.push_back(v);
  }
  if (parts.size() != 3) {
    throw InputError("--grid", "expected LO:HI:STEP, got \"" + text + "\"");
  }
  try {
    return GridPoints(parts[0], parts[1], parts[2]);
  } catch (const BadRange& e) {
    throw InputError("--grid", e.what());
  }
}

void EmitCsv(std::ostream& out, const Flags& f, const std::vector<Sample>& s) {
  std::ostringstream text;
  WriteSamplesCsv(text, s);
  out << text.str();
  if (!f.out.empty()) WriteFile(f.out, text.str());
}

int OracleVfGrid(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto inst = std::get<MilpInstance>(Obtain(f, "milp", err));
  EmitCsv(out, f,
          OracleValueFunctionGrid(inst.problem, inst.direction, ParseGrid(f.grid)));
  return kExitOk;
}

int OracleMiblpEnum(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto inst = std::get<MiblpInstance>(Obtain(f, "miblp", err));
  const MiblpOracleResult r = OracleMiblp(inst);
  json doc{{"kind", "miblp"},       {"feasible", r.feasible},
           {"value", Num(r.value)}, {"x", Vec(r.x)},
           {"y", Vec(r.y)},         {"points", r.points}};
  Emit(out, f, doc);
  return r.feasible ? kExitOk : kExitInfeasible;
}

int OracleExtensive(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto inst = std::get<TwoStageInstance>(Obtain(f, "2ssmilp", err));
  const MilpResult r = OracleTwoStage(inst);
  json doc{{"kind", "2ssmilp"},     {"status", ToString(r.status)},
           {"value", Num(r.value)}, {"solution", Vec(r.solution)},
           {"nodes", r.nodes}};
  if (r.status == MilpStatus::kOptimal) {
    doc["x"] = Vec({r.solution.begin(), r.solution.begin() + inst.n1()});
  }
  Emit(out, f, doc);
  return MilpExit(r.status);
}

int SampleVf(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto inst = std::get<MilpInstance>(Obtain(f, "milp", err));
  const std::vector<double> grid = ParseGrid(f.grid);
  std::vector<Sample> samples;
  if (f.dual_at.has_value()) {
    // The branch-and-bound dual function built at the given beta.
    const MilpResult r = SolveMilp(AtBeta(inst, *f.dual_at));
    if (r.status != MilpStatus::kOptimal) {
      err << "error: no dual function; the problem at beta=" << *f.dual_at
          << " is " << ToString(r.status) << "\n";
      return MilpExit(r.status);
    }
    const MinAffineDual d = ExtractDualFunction(r.tree);
    for (double b : grid) {
      std::vector<double> rhs = inst.problem.lp.rhs;
      for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += b * inst.direction[i];
      samples.push_back({b, EvalDual(d, {}, rhs)});
    }
  } else {
    for (double b : grid) {
      const MilpResult r = SolveMilp(AtBeta(inst, b));
      ExtendedReal v = r.value;
      if (r.status == MilpStatus::kInfeasible) v = ExtendedReal::PosInf();
      if (r.status == MilpStatus::kUnbounded) v = ExtendedReal::NegInf();
      samples.push_back({b, v});
    }
  }
  EmitCsv(out, f, samples);
  return kExitOk;
}

// rho along beta1 = b1, beta2 = b2 + beta * (1, ..., 1).
int SampleRho(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto inst = std::get<MiblpInstance>(Obtain(f, "miblp", err));
  const std::vector<double> grid = ParseGrid(f.grid);
  auto beta2_at = [&](double b) {
    std::vector<double> v = inst.b2;
    for (double& x : v) x += b;
    return v;
  };
  std::vector<Sample> samples;
  if (f.dual_at.has_value()) {
    const ReactionCertificate c =
        EvaluateReaction(inst, inst.b1, beta2_at(*f.dual_at));
    if (c.status != ReactionStatus::kOptimal || !c.dual.has_value()) {
      err << "error: no reaction dual at beta=" << *f.dual_at << " ("
          << ToString(c.status) << ")\n";
      return c.status == ReactionStatus::kUnbounded ? kExitUnbounded
                                                    : kExitInfeasible;
    }
    for (double b : grid) {
      const std::vector<double> b2 = beta2_at(b);
      ExtendedReal phi = 0.0;
      if (c.primal.has_value()) phi = EvalPrimal(*c.primal, b2);
      samples.push_back({b, EvalDual(*c.dual, inst.b1, b2, phi)});
    }
  } else {
    for (double b : grid) {
      const ReactionCertificate c = EvaluateReaction(inst, inst.b1, beta2_at(b));
      ExtendedReal v = c.rho_value;
      if (c.status == ReactionStatus::kSecondStageInfeasible ||
          c.status == ReactionStatus::kLinkInfeasible) {
        v = ExtendedReal::PosInf();
      }
      samples.push_back({b, v});
    }
  }
  EmitCsv(out, f, samples);
  return kExitOk;
}

// A value like "-2:10:0.25" after --grid looks like a flag to the parser;
// glue such values onto their option.
std::vector<std::string> GlueNegativeValues(std::vector<std::string> args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const bool takes_value = a == "--grid" || a == "--tol" || a == "--beta" ||
                             a == "--dual-at";
    if (takes_value && i + 1 < args.size() && args[i + 1].size() > 1 &&
        args[i + 1][0] == '-') {
      out.push_back(a + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

int Run(const std::vector<std::string>& raw_args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Generalized Benders decomposition solvers and oracles", "gbd"};
  app.require_subcommand(1);
  Flags f;
  std::string solve_kind;
  std::string oracle_kind;
  std::string sample_kind;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--instance", f.instance, "instance JSON file");
    sub->add_option("--seed", f.seed, "generate a random instance instead");
    sub->add_option("--out", f.out, "also write the result to this file");
  };
  CLI::App* solve = app.add_subcommand("solve", "run a decomposition driver");
  solve->add_option("kind", solve_kind, "lp-benders | 2ssmilp | miblp | milp")
      ->required()
      ->check(CLI::IsMember({"lp-benders", "2ssmilp", "miblp", "milp"}));
  add_common(solve);
  solve->add_option("--tol", f.tol, "termination gap (default 1e-6)");
  solve->add_option("--max-iters", f.max_iters, "iteration limit (default 200)");
  solve->add_option("--trace-out", f.trace_out, "CSV trace file");
  solve->add_option("--dump-cuts", f.dump_cuts, "JSON dump of every cut");
  solve->add_option("--beta", f.beta, "milp only: shift rhs by beta*direction");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference solves");
  oracle->add_option("kind", oracle_kind, "vf-grid | miblp-enum | 2ssmilp-ef")
      ->required()
      ->check(CLI::IsMember({"vf-grid", "miblp-enum", "2ssmilp-ef"}));
  add_common(oracle);
  oracle->add_option("--grid", f.grid, "LO:HI:STEP");

  CLI::App* sample = app.add_subcommand("sample", "sample a function on a grid");
  sample->add_option("kind", sample_kind, "vf | rho")
      ->required()
      ->check(CLI::IsMember({"vf", "rho"}));
  add_common(sample);
  sample->add_option("--grid", f.grid, "LO:HI:STEP")->required();
  sample->add_option("--dual-at", f.dual_at,
                     "sample the dual function built at this beta instead");

  std::vector<std::string> args = GlueNegativeValues(raw_args);
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (solve->parsed()) {
      if (solve_kind == "lp-benders") return SolveLpCmd(f, out, err);
      if (solve_kind == "2ssmilp") return SolveTwoStageCmd(f, out, err);
      if (solve_kind == "miblp") return SolveMiblpCmd(f, out, err);
      return SolveMilpCmd(f, out, err);
    }
    if (oracle->parsed()) {
      if (oracle_kind == "vf-grid") return OracleVfGrid(f, out, err);
      if (oracle_kind == "miblp-enum") return OracleMiblpEnum(f, out, err);
      return OracleExtensive(f, out, err);
    }
    if (sample_kind == "vf") return SampleVf(f, out, err);
    return SampleRho(f, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const BoxTooLarge& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DimensionMismatch& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnbounded;
  }
}

}  // namespace gbd::cli
