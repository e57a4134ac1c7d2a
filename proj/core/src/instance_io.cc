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

#include "gbd/instance_io.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <fstream>
#include <sstream>

#include "gbd/errors.h"
#include "json.hpp"

namespace gbd {

namespace {

using nlohmann::json;

thread_local std::vector<std::string> g_warnings;

double ToNumber(const json& v, const std::string& field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_null()) {
    throw InputError(field, "null is only allowed for bounds");
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf" || s == "+inf") return kInfinity;
    if (s == "-inf") return -kInfinity;
  }
  throw InputError(field, "expected a number");
}

const json& Require(const json& doc, const std::string& key,
                    const std::string& prefix = "") {
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(prefix + key, "missing required field");
  return *it;
}

std::vector<double> Vector(const json& v, const std::string& field) {
  if (!v.is_array()) throw InputError(field, "expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(ToNumber(v[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// Bounds accept null for "unbounded in this direction".
std::vector<double> Bounds(const json& v, const std::string& field,
                           double null_value) {
  if (!v.is_array()) throw InputError(field, "expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(v[i].is_null()
                      ? null_value
                      : ToNumber(v[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Matrix MatrixField(const json& v, const std::string& field, std::size_t cols) {
  if (!v.is_array()) throw InputError(field, "expected an array of rows");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    rows.push_back(Vector(v[i], field + "[" + std::to_string(i) + "]"));
    if (rows.back().size() != rows.front().size()) {
      throw InputError(field, "rows have different lengths");
    }
  }
  if (rows.empty()) return Matrix(0, cols);
  return Matrix::FromRows(rows);
}

std::vector<bool> Mask(const json& v, const std::string& field) {
  if (!v.is_array()) throw InputError(field, "expected an array");
  std::vector<bool> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_boolean()) {
      out.push_back(v[i].get<bool>());
    } else if (v[i].is_number_integer() &&
               (v[i].get<int>() == 0 || v[i].get<int>() == 1)) {
      out.push_back(v[i].get<int>() == 1);
    } else {
      throw InputError(field + "[" + std::to_string(i) + "]",
                       "expected true/false or 0/1");
    }
  }
  return out;
}

std::optional<double> OptionalNumber(const json& doc, const std::string& key) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  return ToNumber(*it, key);
}

// Wraps library dimension errors as input errors.
template <typename T>
void ValidateAsInput(const T& inst) {
  try {
    inst.Validate();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError("", e.what());
  }
}

LpBendersInstance ParseLp(const json& doc) {
  LpBendersInstance inst;
  inst.c = Vector(Require(doc, "c"), "c");
  inst.d = Vector(Require(doc, "d"), "d");
  inst.b = Vector(Require(doc, "b"), "b");
  inst.a = MatrixField(Require(doc, "A"), "A", inst.c.size());
  inst.g = MatrixField(Require(doc, "G"), "G", inst.d.size());
  if (doc.contains("x_upper")) {
    inst.x_upper = Vector(doc["x_upper"], "x_upper");
  } else {
    inst.x_upper.assign(inst.c.size(), 1e6);
    g_warnings.push_back("x_upper missing; using 1e6 for every x");
  }
  ValidateAsInput(inst);
  return inst;
}

TwoStageInstance ParseTwoStage(const json& doc) {
  TwoStageInstance inst;
  inst.c = Vector(Require(doc, "c"), "c");
  inst.d2 = Vector(Require(doc, "d2"), "d2");
  inst.b1 = doc.contains("b1") ? Vector(doc["b1"], "b1") : std::vector<double>{};
  inst.a1 = doc.contains("A1") ? MatrixField(doc["A1"], "A1", inst.c.size())
                               : Matrix(0, inst.c.size());
  inst.g2 = MatrixField(Require(doc, "G2"), "G2", inst.d2.size());
  const json& sc = Require(doc, "scenarios");
  if (!sc.is_array()) throw InputError("scenarios", "expected an array");
  for (std::size_t w = 0; w < sc.size(); ++w) {
    const std::string p = "scenarios[" + std::to_string(w) + "].";
    Scenario s;
    s.probability = ToNumber(Require(sc[w], "probability", p), p + "probability");
    s.a2 = MatrixField(Require(sc[w], "A2", p), p + "A2", inst.c.size());
    s.b2 = Vector(Require(sc[w], "b2", p), p + "b2");
    inst.scenarios.push_back(std::move(s));
  }
  inst.x_integer = Mask(Require(doc, "x_integer"), "x_integer");
  inst.y_integer = Mask(Require(doc, "y_integer"), "y_integer");
  inst.x_lower = Vector(Require(doc, "x_lower"), "x_lower");
  inst.x_upper = Vector(Require(doc, "x_upper"), "x_upper");
  inst.big_m = OptionalNumber(doc, "big_m");
  ValidateAsInput(inst);
  return inst;
}

MiblpInstance ParseMiblp(const json& doc) {
  MiblpInstance inst;
  inst.c = Vector(Require(doc, "c"), "c");
  inst.d1 = Vector(Require(doc, "d1"), "d1");
  inst.d2 = Vector(Require(doc, "d2"), "d2");
  const std::size_t n1 = inst.c.size();
  const std::size_t n2 = inst.d1.size();
  inst.b1 = doc.contains("b1") ? Vector(doc["b1"], "b1") : std::vector<double>{};
  inst.a1 = doc.contains("A1") ? MatrixField(doc["A1"], "A1", n1) : Matrix(0, n1);
  inst.g1 = doc.contains("G1") ? MatrixField(doc["G1"], "G1", n2) : Matrix(0, n2);
  inst.b2 = Vector(Require(doc, "b2"), "b2");
  inst.a2 = MatrixField(Require(doc, "A2"), "A2", n1);
  inst.g2 = MatrixField(Require(doc, "G2"), "G2", n2);
  inst.x_integer = doc.contains("x_integer") ? Mask(doc["x_integer"], "x_integer")
                                             : std::vector<bool>(n1, true);
  inst.y_integer = Mask(Require(doc, "y_integer"), "y_integer");
  inst.x_lower = Vector(Require(doc, "x_lower"), "x_lower");
  inst.x_upper = Vector(Require(doc, "x_upper"), "x_upper");
  inst.big_m = OptionalNumber(doc, "big_m");
  inst.epsilon = OptionalNumber(doc, "epsilon");
  ValidateAsInput(inst);
  return inst;
}

RowSense ParseSense(const json& v, const std::string& field) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == ">=") return RowSense::kGreaterEqual;
    if (s == "<=") return RowSense::kLessEqual;
    if (s == "=" || s == "==") return RowSense::kEqual;
  }
  throw InputError(field, "expected \">=\", \"<=\" or \"=\"");
}

MilpInstance ParseMilp(const json& doc) {
  MilpInstance inst;
  LpProblem& lp = inst.problem.lp;
  lp.objective = Vector(Require(doc, "objective"), "objective");
  const std::size_t n = lp.objective.size();
  lp.rhs = Vector(Require(doc, "rhs"), "rhs");
  lp.constraints = MatrixField(Require(doc, "constraints"), "constraints", n);
  if (doc.contains("senses")) {
    const json& s = doc["senses"];
    if (!s.is_array()) throw InputError("senses", "expected an array");
    for (std::size_t i = 0; i < s.size(); ++i) {
      lp.senses.push_back(ParseSense(s[i], "senses[" + std::to_string(i) + "]"));
    }
  } else {
    lp.senses.assign(lp.rhs.size(), RowSense::kGreaterEqual);
  }
  lp.lower = doc.contains("lower") ? Bounds(doc["lower"], "lower", -kInfinity)
                                   : std::vector<double>(n, 0.0);
  lp.upper = doc.contains("upper") ? Bounds(doc["upper"], "upper", kInfinity)
                                   : std::vector<double>(n, kInfinity);
  inst.problem.integer = doc.contains("integer") ? Mask(doc["integer"], "integer")
                                                 : std::vector<bool>(n, false);
  inst.direction = doc.contains("direction") ? Vector(doc["direction"], "direction")
                                             : std::vector<double>(lp.rhs.size(), 1.0);
  if (inst.direction.size() != lp.rhs.size()) {
    throw InputError("direction", "must have one entry per row");
  }
  ValidateAsInput(inst.problem);
  return inst;
}

json Num(double v) {
  if (v == kInfinity) return "inf";
  if (v == -kInfinity) return "-inf";
  return v;
}

json VecJson(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(Num(x));
  return out;
}

json MatJson(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out.push_back(VecJson({m.Row(i).begin(), m.Row(i).end()}));
  }
  return out;
}

json MaskJson(const std::vector<bool>& v) {
  json out = json::array();
  for (bool b : v) out.push_back(b);
  return out;
}

const char* SenseString(RowSense s) {
  switch (s) {
    case RowSense::kGreaterEqual:
      return ">=";
    case RowSense::kLessEqual:
      return "<=";
    case RowSense::kEqual:
      return "=";
  }
  return ">=";
}

}  // namespace

std::string KindOf(const Instance& inst) {
  switch (inst.index()) {
    case 0:
      return "lp-benders";
    case 1:
      return "2ssmilp";
    case 2:
      return "miblp";
    default:
      return "milp";
  }
}

const std::vector<std::string>& LastParseWarnings() { return g_warnings; }

Instance ParseInstance(const std::string& text) {
  g_warnings.clear();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("", "JSON syntax error at line " + std::to_string(line) +
                             ", column " + std::to_string(col));
  }
  if (!doc.is_object()) throw InputError("", "top level must be an object");
  const json& kind = Require(doc, "kind");
  if (!kind.is_string()) throw InputError("kind", "expected a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "lp-benders") return ParseLp(doc);
    if (k == "2ssmilp") return ParseTwoStage(doc);
    if (k == "miblp") return ParseMiblp(doc);
    if (k == "milp") return ParseMilp(doc);
  } catch (const json::exception& e) {
    throw InputError("", e.what());
  }
  throw InputError("kind", "unknown kind \"" + k +
                               "\" (expected lp-benders, 2ssmilp, miblp or milp)");
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseInstance(ss.str());
}

std::string SerializeInstance(const Instance& inst) {
  json doc;
  doc["kind"] = KindOf(inst);
  if (const auto* p = std::get_if<LpBendersInstance>(&inst)) {
    doc["c"] = VecJson(p->c);
    doc["d"] = VecJson(p->d);
    doc["A"] = MatJson(p->a);
    doc["G"] = MatJson(p->g);
    doc["b"] = VecJson(p->b);
    doc["x_upper"] = VecJson(p->x_upper);
  } else if (const auto* p = std::get_if<TwoStageInstance>(&inst)) {
    doc["c"] = VecJson(p->c);
    doc["d2"] = VecJson(p->d2);
    doc["A1"] = MatJson(p->a1);
    doc["b1"] = VecJson(p->b1);
    doc["G2"] = MatJson(p->g2);
    json sc = json::array();
    for (const Scenario& s : p->scenarios) {
      sc.push_back({{"probability", s.probability},
                    {"A2", MatJson(s.a2)},
                    {"b2", VecJson(s.b2)}});
    }
    doc["scenarios"] = sc;
    doc["x_integer"] = MaskJson(p->x_integer);
    doc["y_integer"] = MaskJson(p->y_integer);
    doc["x_lower"] = VecJson(p->x_lower);
    doc["x_upper"] = VecJson(p->x_upper);
    if (p->big_m) doc["big_m"] = *p->big_m;
  } else if (const auto* p = std::get_if<MiblpInstance>(&inst)) {
    doc["c"] = VecJson(p->c);
    doc["d1"] = VecJson(p->d1);
    doc["d2"] = VecJson(p->d2);
    doc["A1"] = MatJson(p->a1);
    doc["G1"] = MatJson(p->g1);
    doc["b1"] = VecJson(p->b1);
    doc["A2"] = MatJson(p->a2);
    doc["G2"] = MatJson(p->g2);
    doc["b2"] = VecJson(p->b2);
    doc["x_integer"] = MaskJson(p->x_integer);
    doc["y_integer"] = MaskJson(p->y_integer);
    doc["x_lower"] = VecJson(p->x_lower);
    doc["x_upper"] = VecJson(p->x_upper);
    if (p->big_m) doc["big_m"] = *p->big_m;
    if (p->epsilon) doc["epsilon"] = *p->epsilon;
  } else {
    const auto& m = std::get<MilpInstance>(inst);
    doc["objective"] = VecJson(m.problem.lp.objective);
    doc["constraints"] = MatJson(m.problem.lp.constraints);
    doc["rhs"] = VecJson(m.problem.lp.rhs);
    json senses = json::array();
    for (RowSense s : m.problem.lp.senses) senses.push_back(SenseString(s));
    doc["senses"] = senses;
    doc["lower"] = VecJson(m.problem.lp.lower);
    doc["upper"] = VecJson(m.problem.lp.upper);
    doc["integer"] = MaskJson(m.problem.integer);
    doc["direction"] = VecJson(m.direction);
  }
  return doc.dump(2) + "\n";
}

}  // namespace gbd
