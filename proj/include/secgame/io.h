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


#ifndef SECGAME_IO_H_
#define SECGAME_IO_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "secgame/game.h"

namespace secgame {

struct InstanceData {
  std::vector<double> costs;
  int attack_budget = 0;
  int defense_budget = 0;
};

// JSON {"costs": [...], "k_a": int, "k_d": int}. Throws kParseError.
InstanceData ParseInstance(std::string_view text);
std::string EmitInstance(const InstanceData& instance);

// Certificate JSON. Marginals are in original order and target ids are
// 1-based; numbers carry 17 significant digits.
std::string EmitCertificate(const SaddleCertificate& certificate,
                            std::int64_t runtime_ns);

struct CertificateRecord {
  SaddleCertificate certificate;
  std::int64_t runtime_ns = 0;
};
CertificateRecord ParseCertificate(std::string_view text);

// %.17g formatting.
std::string FormatDouble(double value);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view text);

}  // namespace secgame

#endif  // SECGAME_IO_H_
