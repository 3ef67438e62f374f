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

#ifndef CBPIR_SERIALIZATION_H_
#define CBPIR_SERIALIZATION_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "cbpir/field.h"
#include "cbpir/matrix.h"
#include "cbpir/pir_scheme.h"

namespace cbpir {

// Framed binary container for databases, queries and responses. See
// docs/wire_format.md for the byte layout. Output depends only on the
// inputs, so identical objects serialize to identical bytes.
enum class FrameKind : std::uint8_t {
  kDatabase = 1,
  kQuery = 2,
  kResponse = 3,
};

inline constexpr std::uint8_t kWireVersion = 1;

std::vector<std::uint8_t> Serialize(const Database& db, const FieldSpec& field);
std::vector<std::uint8_t> Serialize(const QueryBundle& query,
                                    const ExtFieldSpec& ext);
std::vector<std::uint8_t> Serialize(const Response& response,
                                    const ExtFieldSpec& ext);

// Throw Error(kMalformedInput) on bad magic, version, kind, field mismatch,
// truncation or out-of-range symbols.
Database DeserializeDatabase(std::span<const std::uint8_t> bytes,
                             const FieldSpec& field);
QueryBundle DeserializeQuery(std::span<const std::uint8_t> bytes,
                             const ExtFieldSpec& ext);
Response DeserializeResponse(std::span<const std::uint8_t> bytes,
                             const ExtFieldSpec& ext);

// Byte strings to file symbols: each symbol takes floor(log2 q) bits of the
// stream, least significant bit first, and symbols fill the L x delta file
// row by row; unused trailing symbols are zero. Throws
// Error(kSizeLimit) if the bytes do not fit.
MatFq FileFromBytes(std::span<const std::uint8_t> bytes, const FieldSpec& field,
                    std::size_t rows, std::size_t width);
// Inverse of FileFromBytes for the first byte_count bytes.
std::vector<std::uint8_t> FileToBytes(const MatFq& file, const FieldSpec& field,
                                      std::size_t byte_count);

// Throw Error(kIo) with the path in the message.
std::vector<std::uint8_t> ReadBinaryFile(const std::filesystem::path& path);
void WriteBinaryFile(const std::filesystem::path& path,
                     std::span<const std::uint8_t> bytes);

}  // namespace cbpir

#endif  // CBPIR_SERIALIZATION_H_
