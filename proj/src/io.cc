// Copyright 2026 The secgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "secgame/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace secgame {
namespace {

using nlohmann::json;

const json& Field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) {
    throw Error(ErrorCode::kParseError, std::string("missing field \"") + name + "\"");
  }
  return *it;
}

int IntField(const json& doc, const char* name) {
  const json& v = Field(doc, name);
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::kParseError,
                std::string("field \"") + name + "\" must be an integer");
  }
  return v.get<int>();
}

std::vector<double> NumberArray(const json& v, const char* name) {
  if (!v.is_array()) {
    throw Error(ErrorCode::kParseError,
                std::string("field \"") + name + "\" must be an array");
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const json& x : v) {
    if (!x.is_number()) {
      throw Error(ErrorCode::kParseError,
                  std::string("field \"") + name + "\" holds a non-number");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<int> IdArray(const json& v, const char* name) {
  std::vector<int> ids;
  if (!v.is_array()) {
    throw Error(ErrorCode::kParseError,
                std::string("field \"") + name + "\" must be an array");
  }
  for (const json& x : v) {
    if (!x.is_number_integer() || x.get<long long>() < 1) {
      throw Error(ErrorCode::kParseError,
                  std::string("field \"") + name + "\" holds a bad target id");
    }
    ids.push_back(x.get<int>() - 1);
  }
  return ids;
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

void AppendNumbers(std::string& out, std::span<const double> values) {
  out += '[';
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j > 0) out += ", ";
    out += FormatDouble(values[j]);
  }
  out += ']';
}

void AppendIds(std::string& out, std::span<const int> ids) {
  out += '[';
  for (std::size_t j = 0; j < ids.size(); ++j) {
    if (j > 0) out += ", ";
    out += std::to_string(ids[j] + 1);
  }
  out += ']';
}

void AppendStrategy(std::string& out, const SparseMixedStrategy& strategy) {
  out += '[';
  for (int a = 0; a < strategy.num_atoms(); ++a) {
    const StrategyAtom& atom = strategy.atoms()[a];
    out += a > 0 ? ",\n    " : "\n    ";
    out += "{\"targets\": ";
    AppendIds(out, atom.subset.members());
    out += ", \"prob\": " + FormatDouble(atom.probability) + "}";
  }
  out += strategy.num_atoms() > 0 ? "\n  ]" : "]";
}

SparseMixedStrategy ParseStrategy(const json& v, const char* name) {
  if (!v.is_array() || v.empty()) {
    throw Error(ErrorCode::kParseError,
                std::string("field \"") + name + "\" must be a non-empty array");
  }
  std::vector<StrategyAtom> atoms;
  int size = -1;
  for (const json& atom : v) {
    if (!atom.is_object()) {
      throw Error(ErrorCode::kParseError,
                  std::string("field \"") + name + "\" holds a non-object");
    }
    std::vector<int> ids = IdArray(Field(atom, "targets"), "targets");
    const json& prob = Field(atom, "prob");
    if (!prob.is_number()) {
      throw Error(ErrorCode::kParseError, "atom probability must be a number");
    }
    if (size < 0) size = static_cast<int>(ids.size());
    atoms.push_back({TargetSubset(std::move(ids)), prob.get<double>()});
  }
  return SparseMixedStrategy(std::move(atoms), size);
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

InstanceData ParseInstance(std::string_view text) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError, "instance must be a JSON object");
  }
  InstanceData instance;
  instance.costs = NumberArray(Field(doc, "costs"), "costs");
  instance.attack_budget = IntField(doc, "k_a");
  instance.defense_budget = IntField(doc, "k_d");
  return instance;
}

std::string EmitInstance(const InstanceData& instance) {
  std::string out = "{\"costs\": ";
  AppendNumbers(out, instance.costs);
  out += ", \"k_a\": " + std::to_string(instance.attack_budget);
  out += ", \"k_d\": " + std::to_string(instance.defense_budget) + "}\n";
  return out;
}

std::string EmitCertificate(const SaddleCertificate& cert,
                            std::int64_t runtime_ns) {
  std::string out = "{\n  \"value\": " + FormatDouble(cert.value);
  out += ",\n  \"alpha\": ";
  AppendNumbers(out, cert.alpha.values());
  out += ",\n  \"beta\": ";
  AppendNumbers(out, cert.beta.values());
  out += ",\n  \"s_star\": " + std::to_string(cert.s_star);
  out += ",\n  \"r_star\": " + std::to_string(cert.r_star);
  out += ",\n  \"attacker_active\": ";
  AppendIds(out, cert.attacker_active);
  out += ",\n  \"defender_active\": ";
  AppendIds(out, cert.defender_active);
  out += ",\n  \"defender_pure\": ";
  out += cert.defender_pure ? "true" : "false";
  if (cert.attacker_strategy) {
    out += ",\n  \"attacker_strategy\": ";
    AppendStrategy(out, *cert.attacker_strategy);
  }
  if (cert.defender_strategy) {
    out += ",\n  \"defender_strategy\": ";
    AppendStrategy(out, *cert.defender_strategy);
  }
  out += ",\n  \"method\": \"";
  out += SolveMethodName(cert.method);
  out += "\",\n  \"runtime_ns\": " + std::to_string(runtime_ns) + "\n}\n";
  return out;
}

CertificateRecord ParseCertificate(std::string_view text) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError, "certificate must be a JSON object");
  }
  CertificateRecord record;
  SaddleCertificate& cert = record.certificate;
  const json& value = Field(doc, "value");
  if (!value.is_number()) throw Error(ErrorCode::kParseError, "value must be a number");
  cert.value = value.get<double>();
  try {
    for (auto [field, target] : {std::pair{"alpha", &cert.alpha},
                                 std::pair{"beta", &cert.beta}}) {
      std::vector<double> v = NumberArray(Field(doc, field), field);
      long double sum = 0;
      for (double x : v) sum += x;
      *target = MarginalVector(std::move(v), std::round(static_cast<double>(sum)));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    throw Error(ErrorCode::kParseError, e.what());
  }
  cert.s_star = IntField(doc, "s_star");
  cert.r_star = IntField(doc, "r_star");
  cert.attacker_active = IdArray(Field(doc, "attacker_active"), "attacker_active");
  cert.defender_active = IdArray(Field(doc, "defender_active"), "defender_active");
  const json& pure = Field(doc, "defender_pure");
  if (!pure.is_boolean()) {
    throw Error(ErrorCode::kParseError, "defender_pure must be a boolean");
  }
  cert.defender_pure = pure.get<bool>();
  try {
    if (doc.contains("attacker_strategy")) {
      cert.attacker_strategy =
          ParseStrategy(doc.at("attacker_strategy"), "attacker_strategy");
    }
    if (doc.contains("defender_strategy")) {
      cert.defender_strategy =
          ParseStrategy(doc.at("defender_strategy"), "defender_strategy");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    throw Error(ErrorCode::kParseError, e.what());
  }
  const json& method = Field(doc, "method");
  if (method == "linear") {
    cert.method = SolveMethod::kLinear;
  } else if (method == "oracle") {
    cert.method = SolveMethod::kOracle;
  } else {
    throw Error(ErrorCode::kParseError, "unknown method");
  }
  const json& runtime = Field(doc, "runtime_ns");
  if (!runtime.is_number_integer()) {
    throw Error(ErrorCode::kParseError, "runtime_ns must be an integer");
  }
  record.runtime_ns = runtime.get<std::int64_t>();
  return record;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kInvalidArgument, "write failed: " + path);
}

}  // namespace secgame
