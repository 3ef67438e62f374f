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

#include "cbpir/presets.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "cbpir/error.h"

namespace cbpir {

namespace {

// Table rows use the smallest database the rank attack applies to,
// m = ns - delta + 1, and a single row per file.
Preset TableRow(int row, std::uint64_t p, unsigned e, unsigned s, std::size_t v,
                std::size_t n, std::size_t k, std::string note) {
  SchemeDims dims{p, e, s, v, n, k, 1, 1, 1};
  dims.m = s * n - dims.delta() + 1;
  return {"table1-row" + std::to_string(row), dims, std::move(note)};
}

std::vector<Preset> MakeBuiltins() {
  std::vector<Preset> presets = {
      TableRow(1, 2, 5, 32, 31, 100, 50, "q=32 parameter row, rate 1/128"),
      TableRow(2, 2, 5, 32, 30, 100, 50, "q=32 parameter row, rate 1/64"),
      TableRow(3, 2, 16, 12, 10, 100, 50, "q=2^16 parameter row, rate 1/24"),
      TableRow(4, 4294967291ULL, 1, 6, 4, 120, 60,
               "q=2^32-5 parameter row, rate 1/12"),
      TableRow(5, 2, 32, 5, 3, 100, 50, "q=2^32 parameter row, rate 1/10"),
      TableRow(6, 2305843009213693951ULL, 1, 6, 2, 100, 50,
               "q=2^61-1 parameter row, rate 1/6"),
      {"xpir-comparison", {2, 104, 6, 4, 100, 50, 1000, 1, 1},
       "CB-cPIR set compared against XPIR (n, log q) = (1024, 60)"},
      {"simplepir-comparison", {2, 135, 6, 4, 120, 60, 1000, 1, 1},
       "CB-cPIR set compared against SimplePIR (q, p, n) = (2^32, 495, 1024)"},
      {"toy16", {2, 4, 4, 2, 12, 6, 40, 5, 1},
       "desk-scale instance: q=16, ns-delta=36 < m=40"},
      {"toy32", {2, 5, 8, 7, 20, 10, 160, 4, 1},
       "desk-scale q=32 instance: ns-delta=150 < m=160"},
  };
  return presets;
}

std::string Trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

std::uint64_t ParseNumber(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::kMalformedInput,
                "preset key " + key + " has non-numeric value '" + value + "'");
  }
  return out;
}

}  // namespace

const std::vector<Preset>& BuiltinPresets() {
  static const std::vector<Preset> presets = MakeBuiltins();
  return presets;
}

const Preset& FindPreset(std::string_view name) {
  for (const Preset& preset : BuiltinPresets()) {
    if (preset.name == name) return preset;
  }
  throw Error(ErrorCode::kUnknownPreset,
              "unknown preset '" + std::string(name) + "'");
}

Preset ParsePreset(std::string_view text, std::string name) {
  static const char* const kKeys[] = {"q_base", "q_exp", "s", "v",    "n",
                                      "k",      "m",     "L", "f",    "delta"};
  std::map<std::string, std::uint64_t> values;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kMalformedInput,
                  "preset line " + std::to_string(line_no) + " lacks '='");
    }
    const std::string key = Trim(trimmed.substr(0, eq));
    const std::string value = Trim(trimmed.substr(eq + 1));
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw Error(ErrorCode::kMalformedInput, "unknown preset key '" + key + "'");
    }
    if (!values.emplace(key, ParseNumber(key, value)).second) {
      throw Error(ErrorCode::kMalformedInput, "duplicate preset key '" + key + "'");
    }
  }
  for (const char* key : {"q_base", "q_exp", "s", "v", "n", "k", "m", "L"}) {
    if (!values.contains(key)) {
      throw Error(ErrorCode::kMalformedInput,
                  std::string("preset is missing key '") + key + "'");
    }
  }
  SchemeDims dims;
  dims.p = values["q_base"];
  dims.e = static_cast<unsigned>(values["q_exp"]);
  dims.s = static_cast<unsigned>(values["s"]);
  dims.v = values["v"];
  dims.n = values["n"];
  dims.k = values["k"];
  dims.m = values["m"];
  dims.L = values["L"];
  dims.f = values.contains("f") ? values["f"] : 1;
  dims.Validate();
  if (values.contains("delta") && values["delta"] != dims.delta()) {
    throw Error(ErrorCode::kInvalidArgument,
                "stored delta " + std::to_string(values["delta"]) +
                    " differs from (s-v)(n-k) = " +
                    std::to_string(dims.delta()));
  }
  return {std::move(name), dims, "loaded from file"};
}

Preset LoadPreset(const std::string& name_or_path) {
  for (const Preset& preset : BuiltinPresets()) {
    if (preset.name == name_or_path) return preset;
  }
  const std::filesystem::path path(name_or_path);
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kUnknownPreset,
                "unknown preset '" + name_or_path + "'");
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ParsePreset(text.str(), path.stem().string());
}

}  // namespace cbpir
