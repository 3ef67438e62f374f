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

#include "cbpir/pir_scheme.h"

#include <string>

#include "cbpir/error.h"

namespace cbpir {

Database Database::Pack(const std::vector<MatFq>& files) {
  if (files.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "database needs at least one file");
  }
  const std::size_t rows = files[0].rows();
  const std::size_t width = files[0].cols();
  for (std::size_t t = 1; t < files.size(); ++t) {
    if (files[t].rows() != rows || files[t].cols() != width) {
      throw Error(ErrorCode::kShapeMismatch,
                  "file " + std::to_string(t) + " has shape " +
                      std::to_string(files[t].rows()) + "x" +
                      std::to_string(files[t].cols()) + ", expected " +
                      std::to_string(rows) + "x" + std::to_string(width));
    }
  }
  MatFq x(rows, width * files.size());
  for (std::size_t t = 0; t < files.size(); ++t) {
    for (std::size_t r = 0; r < rows; ++r) {
      std::copy(files[t].row(r).begin(), files[t].row(r).end(),
                x.row(r).begin() + t * width);
    }
  }
  return Database(std::move(x), files.size());
}

Database Database::FromMatrix(MatFq x, std::size_t file_count) {
  if (file_count == 0 || x.cols() % file_count != 0) {
    throw Error(ErrorCode::kShapeMismatch,
                "database width is not a multiple of the file count");
  }
  return Database(std::move(x), file_count);
}

Database Database::Random(const SchemeParams& params, Rng& rng) {
  MatFq x(params.L(), params.m() * params.delta());
  for (FqElem& a : x.data()) a = params.base().Random(rng);
  return Database(std::move(x), params.m());
}

MatFq Database::File(std::size_t t) const {
  if (t >= m_) {
    throw Error(ErrorCode::kInvalidArgument, "file index out of range");
  }
  const std::size_t width = file_width();
  MatFq out(rows(), width);
  for (std::size_t r = 0; r < rows(); ++r) {
    auto src = x_.row(r).subspan(t * width, width);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

std::vector<MatFq> Database::Unpack() const {
  std::vector<MatFq> files;
  files.reserve(m_);
  for (std::size_t t = 0; t < m_; ++t) files.push_back(File(t));
  return files;
}

MatFq FlattenPayload(const MatFqs& delta, const MaskSecret& secret) {
  const std::vector<std::size_t>& positions = secret.code.redundancy_set();
  const unsigned s = secret.gamma.degree();
  const unsigned v = secret.gamma.v();
  const std::size_t w = s - v;
  MatFq flat(delta.rows(), positions.size() * w);
  for (std::size_t r = 0; r < delta.rows(); ++r) {
    for (std::size_t u = 0; u < positions.size(); ++u) {
      std::vector<FqElem> coords = secret.gamma.ToGamma(delta.at(r, positions[u]));
      for (std::size_t t = 0; t < w; ++t) flat(r, u * w + t) = coords[v + t];
    }
  }
  return flat;
}

MaskedMatrix BuildMaskedMatrix(const SchemeParams& params,
                               std::span<const FqElem> c, Rng& rng) {
  const ExtFieldSpec& ext = params.ext();
  const FieldSpec& f = params.base();
  const unsigned s = params.s();
  const std::size_t n = params.n();
  const std::size_t k = params.k();
  const std::size_t delta = params.delta();
  const std::size_t rows = c.size() * delta;

  LinearCode code = LinearCode::Sample(ext, n, k, rng);
  GammaBasis gamma = GammaBasis::Sample(ext, params.v(), rng);

  MatFqs msgs(rows, k, s);
  for (FqElem& x : msgs.data()) x = f.Random(rng);
  MatFqs d = code.EncodeRows(msgs);

  MatFqs e(rows, n, s);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t u : code.redundancy_set()) {
      e.set(r, u, gamma.RandomIn(Subspace::kV, rng));
    }
  }

  MaskSecret secret{std::move(code), std::move(gamma), MatFqs(delta, n, s),
                    MatFq()};
  while (true) {
    for (std::size_t r = 0; r < delta; ++r) {
      for (std::size_t u : secret.code.redundancy_set()) {
        secret.delta.set(r, u, secret.gamma.RandomIn(Subspace::kW, rng));
      }
    }
    try {
      secret.delta_flat_inverse = InvertFq(f, FlattenPayload(secret.delta, secret));
      break;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kSingularMatrix) throw;
    }
  }

  MatFqs q = AddFqs(f, AddFqs(f, d, e), KronVec(f, c, secret.delta));
  return MaskedMatrix{std::move(q), std::move(d), std::move(e),
                      std::move(secret)};
}

namespace {

void CheckIndex(const SchemeParams& params, std::size_t index) {
  if (index >= params.m()) {
    throw Error(ErrorCode::kInvalidArgument,
                "requested index " + std::to_string(index) +
                    " outside database of " + std::to_string(params.m()) +
                    " files");
  }
}

void CheckBetaSupport(const SchemeParams& params) {
  if (params.base().q() <= 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "CB-cPIR needs q > 2 so that c = e_i + beta has no zero entry");
  }
}

}  // namespace

std::pair<QueryBundle, ClientSecret> QueryOriginal(const SchemeParams& params,
                                                   std::size_t index, Rng& rng) {
  CheckIndex(params, index);
  std::vector<FqElem> c(params.m(), 0);
  c[index] = 1;
  MaskedMatrix main = BuildMaskedMatrix(params, c, rng);
  ClientSecret secret{SchemeKind::kOriginal, index, std::move(main.secret),
                      std::nullopt, {}, std::move(c)};
  return {QueryBundle{std::move(main.q), std::nullopt}, std::move(secret)};
}

std::pair<QueryBundle, ClientSecret> QueryCbcpir(const SchemeParams& params,
                                                 std::size_t index, Rng& rng) {
  CheckIndex(params, index);
  CheckBetaSupport(params);
  const FieldSpec& f = params.base();
  std::vector<FqElem> beta(params.m());
  for (FqElem& b : beta) b = f.RandomNonzero(rng);
  while (f.Add(1, beta[index]) == 0) beta[index] = f.RandomNonzero(rng);
  std::vector<FqElem> c = beta;
  c[index] = f.Add(1, beta[index]);

  MaskedMatrix main = BuildMaskedMatrix(params, c, rng);
  MaskedMatrix side = BuildMaskedMatrix(params, beta, rng);
  ClientSecret secret{SchemeKind::kCbcpir, index, std::move(main.secret),
                      std::move(side.secret), std::move(beta), std::move(c)};
  return {QueryBundle{std::move(main.q), std::move(side.q)}, std::move(secret)};
}

Response ServerAnswer(const FieldSpec& field, const Database& db,
                      const QueryBundle& query) {
  Response resp{MultiplyFqByFqs(field, db.matrix(), query.q), std::nullopt};
  if (query.q_beta) {
    resp.r_beta = MultiplyFqByFqs(field, db.matrix(), *query.q_beta);
  }
  return resp;
}

MatFq RecoverCombination(const SchemeParams& params, const MaskSecret& secret,
                         const MatFqs& r) {
  if (r.cols() != params.n() || r.degree() != params.s()) {
    throw Error(ErrorCode::kShapeMismatch,
                "response width does not match the code length");
  }
  const LinearCode& code = secret.code;
  MatFqs codewords = code.CodewordFromInfo(SelectColumns(r, code.info_set()));
  MatFqs rest = SubFqs(params.base(), r, codewords);
  return MultiplyFq(params.base(), FlattenPayload(rest, secret),
                    secret.delta_flat_inverse);
}

MatFq ExtractOriginal(const SchemeParams& params, const Response& response,
                      const ClientSecret& secret) {
  if (secret.kind != SchemeKind::kOriginal) {
    throw Error(ErrorCode::kInvalidArgument,
                "secret belongs to a CB-cPIR query");
  }
  return RecoverCombination(params, secret.main, response.r);
}

namespace {

MatFq Difference(const FieldSpec& f, MatFq a, const MatFq& b) {
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    a.data()[i] = f.Sub(a.data()[i], b.data()[i]);
  }
  return a;
}

}  // namespace

MatFq ExtractCbcpir(const SchemeParams& params, const Response& response,
                    const ClientSecret& secret) {
  if (secret.kind != SchemeKind::kCbcpir || !secret.beta_side) {
    throw Error(ErrorCode::kInvalidArgument, "secret has no beta side");
  }
  if (!response.r_beta) {
    throw Error(ErrorCode::kInvalidArgument, "response is missing R_beta");
  }
  MatFq with_index = RecoverCombination(params, secret.main, response.r);
  MatFq beta_only = RecoverCombination(params, *secret.beta_side, *response.r_beta);
  return Difference(params.base(), std::move(with_index), beta_only);
}

CbcpirSession::CbcpirSession(const SchemeParams& params, Rng& rng)
    : params_(params) {
  CheckBetaSupport(params);
  const FieldSpec& f = params.base();
  beta_.resize(params.m());
  for (FqElem& b : beta_) {
    do {
      b = f.RandomNonzero(rng);
    } while (f.Add(1, b) == 0);
  }
}

std::pair<QueryBundle, ClientSecret> CbcpirSession::NextQuery(std::size_t index,
                                                              Rng& rng) {
  CheckIndex(params_, index);
  if (issued_ >= params_.f()) {
    throw Error(ErrorCode::kSessionExhausted,
                "session already issued f=" + std::to_string(params_.f()) +
                    " queries");
  }
  const FieldSpec& f = params_.base();
  std::vector<FqElem> c = beta_;
  c[index] = f.Add(1, beta_[index]);
  MaskedMatrix main = BuildMaskedMatrix(params_, c, rng);
  QueryBundle bundle{std::move(main.q), std::nullopt};
  ClientSecret secret{SchemeKind::kCbcpir, index, std::move(main.secret),
                      std::nullopt, beta_, std::move(c)};
  if (issued_ == 0) {
    MaskedMatrix side = BuildMaskedMatrix(params_, beta_, rng);
    bundle.q_beta = std::move(side.q);
    beta_side_ = side.secret;
    secret.beta_side = std::move(side.secret);
  }
  ++issued_;
  return {std::move(bundle), std::move(secret)};
}

MatFq CbcpirSession::Extract(const Response& response,
                             const ClientSecret& secret) {
  if (response.r_beta) {
    if (!beta_side_) {
      throw Error(ErrorCode::kInvalidArgument, "session has not issued Q_beta");
    }
    beta_combination_ = RecoverCombination(params_, *beta_side_, *response.r_beta);
  }
  if (!beta_combination_) {
    throw Error(ErrorCode::kInvalidArgument,
                "no R_beta seen yet in this session");
  }
  MatFq with_index = RecoverCombination(params_, secret.main, response.r);
  return Difference(params_.base(), std::move(with_index), *beta_combination_);
}

Traffic AccountTraffic(const SchemeDims& dims) {
  const BigInt f = dims.f;
  const BigInt s = dims.s;
  const BigInt query = BigInt(dims.m) * dims.delta() * dims.n;
  const BigInt answer = BigInt(dims.L) * dims.n;
  Traffic t;
  t.upload_symbols = (f + 1) * query * s;
  t.download_symbols = (f + 1) * answer * s;
  t.file_symbols = f * dims.L * dims.delta();
  const double log2_q = dims.log2_q();
  t.upload_bits = t.upload_symbols.convert_to<double>() * log2_q;
  t.download_bits = t.download_symbols.convert_to<double>() * log2_q;
  t.rate = Rational(t.file_symbols, t.upload_symbols + t.download_symbols);
  return t;
}

}  // namespace cbpir
