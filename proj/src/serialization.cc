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

#include "cbpir/serialization.h"

#include <bit>
#include <fstream>
#include <iterator>
#include <string>

#include "cbpir/error.h"

namespace cbpir {

namespace {

constexpr std::uint8_t kMagic[4] = {'C', 'B', 'P', 'R'};

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, "malformed frame: " + what);
}

class BitWriter {
 public:
  explicit BitWriter(std::vector<std::uint8_t>& out) : out_(out) {}

  void Put(std::uint64_t value, unsigned bits) {
    for (unsigned i = 0; i < bits; ++i) {
      if (used_ == 0) out_.push_back(0);
      out_.back() |= static_cast<std::uint8_t>(((value >> i) & 1) << used_);
      used_ = (used_ + 1) % 8;
    }
  }
  void Flush() { used_ = 0; }

 private:
  std::vector<std::uint8_t>& out_;
  unsigned used_ = 0;
};

class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint64_t Get(unsigned bits) {
    std::uint64_t value = 0;
    for (unsigned i = 0; i < bits; ++i) {
      const std::size_t byte = pos_ / 8;
      if (byte >= in_.size()) Malformed("truncated symbol data");
      value |= static_cast<std::uint64_t>((in_[byte] >> (pos_ % 8)) & 1) << i;
      ++pos_;
    }
    return value;
  }
  // Skips to the next byte boundary.
  void Align() { pos_ = (pos_ + 7) / 8 * 8; }
  std::size_t byte_pos() const { return (pos_ + 7) / 8; }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

void PutLe(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t GetLe(std::span<const std::uint8_t> in, std::size_t& pos,
                    int bytes) {
  if (pos + bytes > in.size()) Malformed("truncated header");
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(in[pos + i]) << (8 * i);
  pos += bytes;
  return v;
}

struct RawMatrix {
  std::uint32_t rows;
  std::uint32_t cols;
  std::uint32_t degree;
  std::span<const FqElem> symbols;
};

std::vector<std::uint8_t> EncodeFrame(FrameKind kind, const FieldSpec& field,
                                      unsigned s, std::uint64_t aux,
                                      const std::vector<RawMatrix>& mats) {
  std::vector<std::uint8_t> out(kMagic, kMagic + 4);
  out.push_back(kWireVersion);
  out.push_back(static_cast<std::uint8_t>(kind));
  PutLe(out, 0, 2);
  PutLe(out, field.p(), 8);
  PutLe(out, field.e(), 4);
  PutLe(out, s, 4);
  PutLe(out, aux, 8);
  PutLe(out, mats.size(), 4);
  const unsigned bits = field.bits();
  for (const RawMatrix& m : mats) {
    PutLe(out, m.rows, 4);
    PutLe(out, m.cols, 4);
    PutLe(out, m.degree, 4);
    BitWriter writer(out);
    for (FqElem x : m.symbols) writer.Put(x, bits);
    writer.Flush();
  }
  return out;
}

struct DecodedFrame {
  std::uint64_t aux;
  std::vector<MatFqs> mats;  // F_q matrices decoded with degree 1
};

DecodedFrame DecodeFrame(std::span<const std::uint8_t> in, FrameKind kind,
                         const FieldSpec& field, unsigned s) {
  if (in.size() < 4 || !std::equal(kMagic, kMagic + 4, in.begin())) {
    Malformed("bad magic");
  }
  std::size_t pos = 4;
  if (GetLe(in, pos, 1) != kWireVersion) Malformed("unsupported version");
  if (GetLe(in, pos, 1) != static_cast<std::uint8_t>(kind)) {
    Malformed("unexpected frame kind");
  }
  GetLe(in, pos, 2);
  const std::uint64_t p = GetLe(in, pos, 8);
  const std::uint64_t e = GetLe(in, pos, 4);
  const std::uint64_t frame_s = GetLe(in, pos, 4);
  if (p != field.p() || e != field.e() || frame_s != s) {
    Malformed("field parameters do not match");
  }
  DecodedFrame frame;
  frame.aux = GetLe(in, pos, 8);
  const std::uint64_t count = GetLe(in, pos, 4);
  if (count > 16) Malformed("too many matrices");
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t rows = GetLe(in, pos, 4);
    const std::uint64_t cols = GetLe(in, pos, 4);
    const std::uint64_t degree = GetLe(in, pos, 4);
    if (degree == 0) Malformed("zero entry degree");
    const std::uint64_t symbols = rows * cols * degree;
    if (symbols * field.bits() > 8 * (in.size() - pos)) {
      Malformed("truncated symbol data");
    }
    MatFqs m(rows, cols, static_cast<unsigned>(degree));
    BitReader reader(in.subspan(pos));
    for (FqElem& x : m.data()) {
      x = reader.Get(field.bits());
      if (!field.IsValid(x)) Malformed("symbol out of range");
    }
    pos += reader.byte_pos();
    frame.mats.push_back(std::move(m));
  }
  if (pos != in.size()) Malformed("trailing bytes");
  return frame;
}

RawMatrix Raw(const MatFqs& m) {
  return {static_cast<std::uint32_t>(m.rows()),
          static_cast<std::uint32_t>(m.cols()), m.degree(), m.data()};
}

void ExpectShape(const MatFqs& m, unsigned degree) {
  if (m.degree() != degree) Malformed("entry degree mismatch");
}

}  // namespace

std::vector<std::uint8_t> Serialize(const Database& db, const FieldSpec& field) {
  const MatFq& x = db.matrix();
  return EncodeFrame(FrameKind::kDatabase, field, 1, db.file_count(),
                     {RawMatrix{static_cast<std::uint32_t>(x.rows()),
                                static_cast<std::uint32_t>(x.cols()), 1,
                                x.data()}});
}

std::vector<std::uint8_t> Serialize(const QueryBundle& query,
                                    const ExtFieldSpec& ext) {
  std::vector<RawMatrix> mats{Raw(query.q)};
  if (query.q_beta) mats.push_back(Raw(*query.q_beta));
  return EncodeFrame(FrameKind::kQuery, ext.base(), ext.degree(), 0, mats);
}

std::vector<std::uint8_t> Serialize(const Response& response,
                                    const ExtFieldSpec& ext) {
  std::vector<RawMatrix> mats{Raw(response.r)};
  if (response.r_beta) mats.push_back(Raw(*response.r_beta));
  return EncodeFrame(FrameKind::kResponse, ext.base(), ext.degree(), 0, mats);
}

Database DeserializeDatabase(std::span<const std::uint8_t> bytes,
                             const FieldSpec& field) {
  DecodedFrame frame = DecodeFrame(bytes, FrameKind::kDatabase, field, 1);
  if (frame.mats.size() != 1) Malformed("database frame needs one matrix");
  ExpectShape(frame.mats[0], 1);
  MatFq x(frame.mats[0].rows(), frame.mats[0].cols());
  x.data() = std::move(frame.mats[0].data());
  if (frame.aux == 0 || x.cols() % frame.aux != 0) {
    Malformed("file count does not divide the database width");
  }
  return Database::FromMatrix(std::move(x), frame.aux);
}

QueryBundle DeserializeQuery(std::span<const std::uint8_t> bytes,
                             const ExtFieldSpec& ext) {
  DecodedFrame frame = DecodeFrame(bytes, FrameKind::kQuery, ext.base(),
                                   ext.degree());
  if (frame.mats.empty() || frame.mats.size() > 2) {
    Malformed("query frame needs one or two matrices");
  }
  for (const MatFqs& m : frame.mats) ExpectShape(m, ext.degree());
  QueryBundle query{std::move(frame.mats[0]), std::nullopt};
  if (frame.mats.size() == 2) query.q_beta = std::move(frame.mats[1]);
  return query;
}

Response DeserializeResponse(std::span<const std::uint8_t> bytes,
                             const ExtFieldSpec& ext) {
  DecodedFrame frame = DecodeFrame(bytes, FrameKind::kResponse, ext.base(),
                                   ext.degree());
  if (frame.mats.empty() || frame.mats.size() > 2) {
    Malformed("response frame needs one or two matrices");
  }
  for (const MatFqs& m : frame.mats) ExpectShape(m, ext.degree());
  Response response{std::move(frame.mats[0]), std::nullopt};
  if (frame.mats.size() == 2) response.r_beta = std::move(frame.mats[1]);
  return response;
}

namespace {

unsigned PayloadBits(const FieldSpec& field) {
  return static_cast<unsigned>(std::bit_width(field.q())) - 1;
}

}  // namespace

MatFq FileFromBytes(std::span<const std::uint8_t> bytes, const FieldSpec& field,
                    std::size_t rows, std::size_t width) {
  const unsigned bits = PayloadBits(field);
  const std::size_t capacity = rows * width * bits;
  if (bytes.size() * 8 > capacity) {
    throw Error(ErrorCode::kSizeLimit,
                std::to_string(bytes.size()) + " bytes do not fit a " +
                    std::to_string(rows) + "x" + std::to_string(width) +
                    " file");
  }
  MatFq file(rows, width);
  std::vector<std::uint8_t> padded(bytes.begin(), bytes.end());
  padded.resize((capacity + 7) / 8, 0);
  BitReader reader(padded);
  for (FqElem& x : file.data()) x = reader.Get(bits);
  return file;
}

std::vector<std::uint8_t> FileToBytes(const MatFq& file, const FieldSpec& field,
                                      std::size_t byte_count) {
  const unsigned bits = PayloadBits(field);
  std::vector<std::uint8_t> out;
  BitWriter writer(out);
  for (FqElem x : file.data()) writer.Put(x, bits);
  if (out.size() < byte_count) {
    throw Error(ErrorCode::kSizeLimit, "file holds fewer bytes than requested");
  }
  out.resize(byte_count);
  return out;
}

std::vector<std::uint8_t> ReadBinaryFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for reading");
  }
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

void WriteBinaryFile(const std::filesystem::path& path,
                     std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace cbpir
