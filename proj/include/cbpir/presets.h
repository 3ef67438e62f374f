// Copyright 2026 The cbpir Authors.
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

#ifndef CBPIR_PRESETS_H_
#define CBPIR_PRESETS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cbpir/params.h"

namespace cbpir {

struct Preset {
  std::string name;
  SchemeDims dims;
  std::string note;
};

// Built-in presets in a fixed order: table1-row1..row6, xpir-comparison,
// simplepir-comparison, toy16, toy32.
const std::vector<Preset>& BuiltinPresets();

// Throws Error(kUnknownPreset).
const Preset& FindPreset(std::string_view name);

// Parses key=value lines. Required keys: q_base, q_exp, s, v, n, k, m, L.
// Optional: f (default 1) and delta, which must equal (s-v)(n-k). Blank
// lines and lines starting with '#' are skipped. Throws
// Error(kMalformedInput) on syntax errors and Error(kInvalidArgument) on
// parameter violations.
Preset ParsePreset(std::string_view text, std::string name);

// A built-in name, or otherwise a path to a preset file (Error(kIo) if it
// cannot be read, Error(kUnknownPreset) if it is neither).
Preset LoadPreset(const std::string& name_or_path);

}  // namespace cbpir

#endif  // CBPIR_PRESETS_H_
