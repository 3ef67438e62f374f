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

#ifndef CBPIR_PIR_SCHEME_H_
#define CBPIR_PIR_SCHEME_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cbpir/gamma_basis.h"
#include "cbpir/linear_code.h"
#include "cbpir/matrix.h"
#include "cbpir/params.h"
#include "cbpir/random.h"

namespace cbpir {

// The database X = [X^1 | ... | X^m], every file an L x delta matrix over
// F_q. File t occupies columns t*delta .. (t+1)*delta - 1.
class Database {
 public:
  // Throws Error(kShapeMismatch) if the files disagree in shape and
  // Error(kInvalidArgument) for an empty list.
  static Database Pack(const std::vector<MatFq>& files);
  static Database FromMatrix(MatFq x, std::size_t file_count);
  // Uniformly random contents.
  static Database Random(const SchemeParams& params, Rng& rng);

  const MatFq& matrix() const { return x_; }
  std::size_t file_count() const { return m_; }
  std::size_t file_width() const { return x_.cols() / m_; }
  std::size_t rows() const { return x_.rows(); }

  MatFq File(std::size_t t) const;
  std::vector<MatFq> Unpack() const;

 private:
  Database(MatFq x, std::size_t m) : x_(std::move(x)), m_(m) {}

  MatFq x_;
  std::size_t m_;
};

// Everything the client keeps about one masked matrix D + E + c (x) Delta.
struct MaskSecret {
  LinearCode code;
  GammaBasis gamma;
  MatFqs delta;                // delta x n over W, zero on the information set
  MatFq delta_flat_inverse;    // inverse of the delta x delta flattening
};

// A masked matrix with its components, for inspection and tests.
struct MaskedMatrix {
  MatFqs q;         // d + e + c (x) delta
  MatFqs d;         // rows are codewords
  MatFqs e;         // entries in V, zero on the information set
  MaskSecret secret;
};

// Flattening of delta x n entries of W (zero on the information set) to a
// delta x delta matrix over F_q: columns run position-major over the
// redundancy set, then over the W-coordinates gamma_{v+1..s}.
MatFq FlattenPayload(const MatFqs& delta, const MaskSecret& secret);

// Samples code, basis, E and Delta and assembles D + E + c (x) Delta for a
// length-m vector c over F_q.
MaskedMatrix BuildMaskedMatrix(const SchemeParams& params,
                               std::span<const FqElem> c, Rng& rng);

enum class SchemeKind { kOriginal, kCbcpir };

struct ClientSecret {
  SchemeKind kind = SchemeKind::kOriginal;
  std::size_t index = 0;  // requested file, 0-based
  MaskSecret main;
  std::optional<MaskSecret> beta_side;  // set when the query carries Q_beta
  std::vector<FqElem> beta;             // CB-cPIR only
  std::vector<FqElem> c;                // e_index (+ beta)
};

struct QueryBundle {
  MatFqs q;
  std::optional<MatFqs> q_beta;
};

struct Response {
  MatFqs r;
  std::optional<MatFqs> r_beta;
};

// Q = D + E + e_index (x) Delta.
std::pair<QueryBundle, ClientSecret> QueryOriginal(const SchemeParams& params,
                                                   std::size_t index, Rng& rng);

// Q = D + E + c (x) Delta with c = e_index + beta, and
// Q_beta = D_beta + E_beta + beta (x) Delta_beta. beta is uniform over
// (F_q^x)^m with beta_index resampled until c_index != 0. Requires q > 2.
std::pair<QueryBundle, ClientSecret> QueryCbcpir(const SchemeParams& params,
                                                 std::size_t index, Rng& rng);

// R = X Q (and R_beta = X Q_beta). Throws Error(kShapeMismatch).
Response ServerAnswer(const FieldSpec& field, const Database& db,
                      const QueryBundle& query);

// For every row j, recovers X_j (c (x) I_delta) from R_j: interpolates the
// codeword on the information set, projects the remainder onto W and
// undoes the flattened Delta. Returns L x delta.
MatFq RecoverCombination(const SchemeParams& params, const MaskSecret& secret,
                         const MatFqs& r);

MatFq ExtractOriginal(const SchemeParams& params, const Response& response,
                      const ClientSecret& secret);
// Throws Error(kInvalidArgument) if the response or secret lacks the beta
// side.
MatFq ExtractCbcpir(const SchemeParams& params, const Response& response,
                    const ClientSecret& secret);

// Several CB-cPIR queries under one beta: Q_beta is sent with the first
// query only, and the client keeps X (beta (x) I_delta) from the first
// response. Every beta_t avoids -1 so that any index may be requested.
class CbcpirSession {
 public:
  CbcpirSession(const SchemeParams& params, Rng& rng);

  // Throws Error(kSessionExhausted) after params.f() queries.
  std::pair<QueryBundle, ClientSecret> NextQuery(std::size_t index, Rng& rng);
  // The first response of the session must carry R_beta.
  MatFq Extract(const Response& response, const ClientSecret& secret);

  std::size_t queries_issued() const { return issued_; }
  const std::vector<FqElem>& beta() const { return beta_; }

 private:
  SchemeParams params_;
  std::vector<FqElem> beta_;
  std::optional<MaskSecret> beta_side_;
  std::optional<MatFq> beta_combination_;
  std::size_t issued_ = 0;
};

// Upload/download volume of a session of f CB-cPIR queries (f from dims).
struct Traffic {
  BigInt upload_symbols;    // F_q symbols
  BigInt download_symbols;  // F_q symbols
  BigInt file_symbols;      // F_q symbols retrieved
  double upload_bits = 0;
  double download_bits = 0;
  // file bits / (upload + download bits), exact since log2 q cancels.
  Rational rate;
};
Traffic AccountTraffic(const SchemeDims& dims);

}  // namespace cbpir

#endif  // CBPIR_PIR_SCHEME_H_
