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

// Command-line front end for the cbpir library.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cbpir/cryptanalysis.h"
#include "cbpir/echelon.h"
#include "cbpir/error.h"
#include "cbpir/field.h"
#include "cbpir/pir_scheme.h"
#include "cbpir/presets.h"
#include "cbpir/random.h"
#include "cbpir/rate_analysis.h"
#include "cbpir/serialization.h"

namespace cbpir {
namespace {

enum ExitCode : int {
  kExitOk = 0,
  kExitOther = 1,
  kExitUsage = 2,
  kExitUnknownPreset = 3,
  kExitInvalidParams = 4,
  kExitInfeasible = 5,
  kExitIo = 6,
  kExitVerification = 7,
  kExitUndecided = 8,
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownPreset:
      return kExitUnknownPreset;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kShapeMismatch:
      return kExitInvalidParams;
    case ErrorCode::kDatabaseTooSmall:
    case ErrorCode::kSizeLimit:
    case ErrorCode::kSessionExhausted:
      return kExitInfeasible;
    case ErrorCode::kIo:
    case ErrorCode::kMalformedInput:
      return kExitIo;
    case ErrorCode::kInconsistent:
      return kExitVerification;
    default:
      return kExitOther;
  }
}

// Failure raised by the front end itself, outside the library.
struct CliFailure {
  int exit_code;
  std::string name;
  std::string reason;
};

struct CommonOptions {
  std::string preset = "toy16";
  std::uint64_t seed = 1;
  std::string out;
  std::optional<std::size_t> m;
  std::optional<std::size_t> L;
  std::optional<std::size_t> f;
  std::optional<std::size_t> index;
  unsigned workers = 1;
  std::size_t rows_per_block = 0;
  bool timing = false;
};

SchemeDims ResolveDims(const CommonOptions& opts) {
  SchemeDims dims = LoadPreset(opts.preset).dims;
  if (opts.m) dims.m = *opts.m;
  if (opts.L) dims.L = *opts.L;
  if (opts.f) dims.f = *opts.f;
  dims.Validate();
  return dims;
}

void Emit(const CommonOptions& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out, std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + opts.out + " for writing");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + opts.out);
}

std::size_t PickIndex(const CommonOptions& opts, const SchemeDims& dims,
                      Rng& rng) {
  const std::size_t index =
      opts.index ? *opts.index : static_cast<std::size_t>(UniformBelow(rng, dims.m));
  if (index >= dims.m) {
    throw Error(ErrorCode::kInvalidArgument,
                "index " + std::to_string(index) + " out of range for m=" +
                    std::to_string(dims.m));
  }
  return index;
}

std::string FormatDims(const std::string& preset, const SchemeDims& d) {
  std::ostringstream out;
  out << "preset=" << preset << '\n'
      << "q=" << d.q().str() << '\n'
      << "s=" << d.s << "\nv=" << d.v << "\nn=" << d.n << "\nk=" << d.k
      << "\nm=" << d.m << "\nL=" << d.L << "\nf=" << d.f
      << "\ndelta=" << d.delta() << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------

int RunDemo(const CommonOptions& opts, const std::string& scheme,
            const std::string& dump_dir) {
  const SchemeDims dims = ResolveDims(opts);
  const SchemeParams params = SchemeParams::Create(dims);
  Rng rng(opts.seed);
  const Database db = Database::Random(params, rng);
  const std::size_t index = PickIndex(opts, dims, rng);
  const bool cbcpir = scheme == "cbcpir";
  auto [query, secret] = cbcpir ? QueryCbcpir(params, index, rng)
                                : QueryOriginal(params, index, rng);
  const Response response = ServerAnswer(params.base(), db, query);
  const MatFq file = cbcpir ? ExtractCbcpir(params, response, secret)
                            : ExtractOriginal(params, response, secret);
  const bool match = file == db.File(index);
  if (!dump_dir.empty()) {
    const std::filesystem::path dir(dump_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string());
    WriteBinaryFile(dir / "database.cbpr", Serialize(db, params.base()));
    WriteBinaryFile(dir / "query.cbpr", Serialize(query, params.ext()));
    WriteBinaryFile(dir / "response.cbpr", Serialize(response, params.ext()));
  }
  const Traffic traffic = AccountTraffic(dims);
  std::ostringstream out;
  out << FormatDims(opts.preset, dims) << "scheme=" << scheme << '\n'
      << "seed=" << opts.seed << '\n'
      << "index=" << index << '\n'
      << "upload_symbols=" << traffic.upload_symbols.str() << '\n'
      << "download_symbols=" << traffic.download_symbols.str() << '\n'
      << "rate=" << boost::multiprecision::numerator(traffic.rate).str() << '/'
      << boost::multiprecision::denominator(traffic.rate).str() << '\n'
      << "match=" << (match ? 1 : 0) << '\n';
  Emit(opts, out.str());
  return match ? kExitOk : kExitVerification;
}

void RejectDeskInfeasible(const SchemeDims& dims) {
  if (dims.q() >= 65536) {
    const AttackCost cost = ComputeAttackCost(dims);
    throw CliFailure{kExitInfeasible, "infeasible",
                     "q >= 2^16 is outside desk scale; estimated cost 2^" +
                         FormatSig12(cost.log2_fq_ops) +
                         " F_q operations, use the cost subcommand"};
  }
}

int RunAttack(const CommonOptions& opts, const std::string& query_path,
              bool shuffle_alphas) {
  const SchemeDims dims = ResolveDims(opts);
  RejectDeskInfeasible(dims);
  const SchemeParams params = SchemeParams::Create(dims);
  AttackConfig config;
  config.rows_per_block = opts.rows_per_block;
  config.workers = opts.workers;
  config.seed = opts.seed;
  config.shuffle_alphas = shuffle_alphas;
  ResolveRowsPerBlock(params, config);

  std::optional<std::size_t> planted;
  QueryBundle query;
  if (!query_path.empty()) {
    query = DeserializeQuery(ReadBinaryFile(query_path), params.ext());
    if (!query.q_beta) {
      throw Error(ErrorCode::kMalformedInput,
                  "query frame carries no Q_beta matrix");
    }
  } else {
    Rng rng(opts.seed);
    planted = PickIndex(opts, dims, rng);
    query = QueryCbcpir(params, *planted, rng).first;
  }
  const AttackReport report = RecoverIndex(params, query.q, *query.q_beta, config);
  std::ostringstream out;
  out << FormatDims(opts.preset, dims) << "seed=" << opts.seed << '\n'
      << "workers=" << opts.workers << '\n'
      << "planted_index="
      << (planted ? std::to_string(*planted) : std::string("unknown")) << '\n'
      << report.ToText(opts.timing);
  Emit(opts, out.str());
  if (!report.index) return kExitUndecided;
  if (planted && *report.index != *planted) return kExitVerification;
  return kExitOk;
}

int RunSubquery(const CommonOptions& opts, const std::string& scheme) {
  const SchemeDims dims = ResolveDims(opts);
  const SchemeParams params = SchemeParams::Create(dims);
  Rng rng(opts.seed);
  const std::size_t planted = PickIndex(opts, dims, rng);
  const QueryBundle query = scheme == "cbcpir"
                                ? QueryCbcpir(params, planted, rng).first
                                : QueryOriginal(params, planted, rng).first;
  const SubqueryResult result = SubqueryAttack(params, query.q);
  std::ostringstream out;
  out << FormatDims(opts.preset, dims) << "scheme=" << scheme << '\n'
      << "seed=" << opts.seed << '\n'
      << "planted_index=" << planted << '\n'
      << "threshold=" << result.threshold << '\n'
      << "status=" << (result.index ? "recovered" : "undecided") << '\n'
      << "index="
      << (result.index ? std::to_string(*result.index) : std::string("none"))
      << '\n'
      << "ranks=";
  for (std::size_t j = 0; j < result.ranks.size(); ++j) {
    out << (j ? "," : "") << result.ranks[j];
  }
  out << '\n';
  if (2 * dims.delta() <= dims.s * dims.n) {
    out << "subquery_failure_log2_bound=" << FormatSig12(SubqueryFailureBoundLog2(dims)) << '\n';
  }
  Emit(opts, out.str());
  if (!result.index) return kExitUndecided;
  return *result.index == planted ? kExitOk : kExitVerification;
}

int RunRates(const CommonOptions& opts, int table) {
  std::ostringstream out;
  if (table == 1) {
    WriteTableOneCsv(out, TableOne());
  } else {
    WriteTableTwoCsv(out, TableTwo());
  }
  Emit(opts, out.str());
  return kExitOk;
}

int RunCurves(const CommonOptions& opts, int figure, const std::string& fig5_q,
              const std::vector<std::string>& reuse, std::size_t points) {
  CurveConfig config = DefaultCurveConfig(
      figure == 4 ? Figure::kXpir : Figure::kSimplePir, fig5_q == "caption");
  if (opts.m) config.cbcpir.m = *opts.m;
  if (!reuse.empty()) {
    config.reuse.clear();
    for (const std::string& t : reuse) {
      config.reuse.push_back(t == "inf" ? kInfiniteReuse : std::stod(t));
    }
  }
  config.grid = LogGrid(6400, 1e10, points);
  std::ostringstream out;
  WriteCurveCsv(out, Curves(config));
  Emit(opts, out.str());
  return kExitOk;
}

int RunCost(const CommonOptions& opts) {
  const SchemeDims dims = ResolveDims(opts);
  const AttackCost cost = ComputeAttackCost(dims);
  std::ostringstream out;
  out << FormatDims(opts.preset, dims)
      << "batches=" << cost.batches.str() << '\n'
      << "log2_batches=" << FormatSig12(cost.log2_batches) << '\n'
      << "rank_ops=" << FormatSig12(cost.rank_ops) << '\n'
      << "fq_ops=" << FormatSig12(cost.fq_ops) << '\n'
      << "log2_fq_ops=" << FormatSig12(cost.log2_fq_ops) << '\n';
  if (2 * dims.delta() <= dims.s * dims.n) {
    out << "subquery_failure_log2_bound=" << FormatSig12(SubqueryFailureBoundLog2(dims)) << '\n';
  }
  Emit(opts, out.str());
  return kExitOk;
}

// Quick invariant suite; the full checks live in the test binaries.
int RunSelftest(const CommonOptions& opts) {
  std::ostringstream out;
  bool all = true;
  auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    all = all && ok;
  };

  {
    bool ok = true;
    for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{2, 4}, {3, 2}, {5, 1}}) {
      const FieldSpec f = FieldSpec::Create(p, e);
      for (FqElem a = 0; a < f.q(); ++a) {
        for (FqElem b = 0; b < f.q(); ++b) {
          ok = ok && f.Mul(a, b) == f.Mul(b, a) &&
               f.Sub(f.Add(a, b), b) == a &&
               (b == 0 || f.Mul(f.Div(a, b), b) == a);
        }
      }
    }
    report("field_axioms", ok);
  }
  {
    Rng rng(opts.seed);
    bool ok = true;
    for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 1}}) {
      const FieldSpec f = FieldSpec::Create(p, e);
      for (int trial = 0; trial < 50; ++trial) {
        MatFq m(6, 7);
        for (FqElem& x : m.data()) x = f.Random(rng);
        EchelonAccumulator acc(f, m.cols());
        acc.Append(m);
        ok = ok && acc.rank() == RankFq(f, m);
      }
    }
    report("accumulator_matches_batch_rank", ok);
  }
  {
    const SchemeParams params = SchemeParams::Create(FindPreset("toy16").dims);
    Rng rng(opts.seed);
    bool ok = true;
    for (int trial = 0; trial < 5; ++trial) {
      const Database db = Database::Random(params, rng);
      const std::size_t i = UniformBelow(rng, params.m());
      auto [q1, s1] = QueryOriginal(params, i, rng);
      auto [q2, s2] = QueryCbcpir(params, i, rng);
      ok = ok &&
           ExtractOriginal(params, ServerAnswer(params.base(), db, q1), s1) ==
               db.File(i) &&
           ExtractCbcpir(params, ServerAnswer(params.base(), db, q2), s2) ==
               db.File(i);
    }
    report("round_trip_toy16", ok);
  }
  {
    const SchemeParams params = SchemeParams::Create(FindPreset("toy16").dims);
    bool ok = true;
    for (std::uint64_t seed = opts.seed; seed < opts.seed + 5; ++seed) {
      Rng rng(seed);
      const std::size_t i = UniformBelow(rng, params.m());
      const QueryBundle q = QueryCbcpir(params, i, rng).first;
      AttackConfig config;
      config.seed = seed;
      const AttackReport r = RecoverIndex(params, q.q, *q.q_beta, config);
      ok = ok && r.index && *r.index == i;
    }
    report("rank_attack_toy16", ok);
  }
  {
    const std::vector<TableOneRow> rows = TableOne();
    const int denominators[] = {128, 64, 24, 12, 10, 6};
    bool ok = rows.size() == 6;
    for (std::size_t r = 0; ok && r < rows.size(); ++r) {
      ok = rows[r].rate == Rational(1, denominators[r]);
    }
    report("table_one_rates", ok);
  }
  {
    bool ok = QBinomial(4, 2, 2) == 35 && QBinomial(8, 4, 2) == 200787;
    report("q_binomial", ok);
  }
  Emit(opts, out.str());
  return all ? kExitOk : kExitVerification;
}

void AddCommon(CLI::App* app, CommonOptions& opts, bool scheme_params) {
  app->add_option("--seed", opts.seed, "RNG seed");
  app->add_option("--out", opts.out, "Write output to this path");
  if (!scheme_params) return;
  app->add_option("--preset", opts.preset, "Built-in preset or key=value file");
  app->add_option("--m", opts.m, "Override the number of files");
  app->add_option("--L", opts.L, "Override the rows per file");
  app->add_option("--f", opts.f, "Override files per beta session");
}

int Run(int argc, char** argv) {
  CLI::App app{"cbpir: code-based PIR scheme, attacks and rate analysis"};
  app.require_subcommand(1);
  CommonOptions opts;

  CLI::App* demo = app.add_subcommand("demo", "Generate, query, answer, extract");
  AddCommon(demo, opts, true);
  std::string scheme = "cbcpir";
  std::string dump_dir;
  demo->add_option("--scheme", scheme, "original or cbcpir")
      ->check(CLI::IsMember({"original", "cbcpir"}));
  demo->add_option("--index", opts.index, "Requested file (0-based)");
  demo->add_option("--dump-dir", dump_dir, "Write database/query/response frames");

  CLI::App* attack = app.add_subcommand("attack", "Rank attack on CB-cPIR");
  AddCommon(attack, opts, true);
  std::string query_path;
  bool shuffle_alphas = false;
  attack->add_option("--index", opts.index, "Planted file index (0-based)");
  attack->add_option("--workers", opts.workers, "Parallel pair evaluations")
      ->check(CLI::Range(1u, 256u));
  attack->add_option("--rows-per-block", opts.rows_per_block,
                     "Rows p per block in the auxiliary matrix (0 = auto)");
  attack->add_option("--query", query_path, "Attack a serialized query frame");
  attack->add_flag("--shuffle-alphas", shuffle_alphas,
                   "Enumerate alpha candidates in seeded random order");
  attack->add_flag("--timing", opts.timing, "Include wall time in the report");

  CLI::App* subquery = app.add_subcommand("subquery", "Subquery rank attack");
  AddCommon(subquery, opts, true);
  std::string sub_scheme = "original";
  subquery->add_option("--scheme", sub_scheme, "original or cbcpir")
      ->check(CLI::IsMember({"original", "cbcpir"}));
  subquery->add_option("--index", opts.index, "Planted file index (0-based)");

  CLI::App* rates = app.add_subcommand("rates", "Rate and attack-cost tables");
  AddCommon(rates, opts, false);
  int table = 1;
  std::string format = "csv";
  rates->add_option("--table", table, "1 or 2")->check(CLI::IsMember({1, 2}));
  rates->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv"}));

  CLI::App* curves = app.add_subcommand("curves", "Rate curves over file size");
  AddCommon(curves, opts, false);
  int figure = 4;
  std::string fig5_q = "body";
  std::vector<std::string> reuse;
  std::size_t points = 100;
  curves->add_option("--figure", figure, "4 (XPIR) or 5 (SimplePIR)")
      ->check(CLI::IsMember({4, 5}));
  curves->add_option("--fig5-q", fig5_q, "body (q=2^135) or caption (q=2^104)")
      ->check(CLI::IsMember({"body", "caption"}));
  curves->add_option("--t", reuse, "SimplePIR hint reuse: 1, 100 or inf")
      ->check(CLI::IsMember({"1", "100", "inf"}));
  curves->add_option("--m", opts.m, "Number of files (default 1000)");
  curves->add_option("--points", points, "Grid points")->check(CLI::Range(2, 100000));
  curves->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv"}));

  CLI::App* cost = app.add_subcommand("cost", "Attack cost estimate");
  AddCommon(cost, opts, true);

  CLI::App* selftest = app.add_subcommand("selftest", "Quick invariant checks");
  AddCommon(selftest, opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: code=usage reason=" << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*demo) return RunDemo(opts, scheme, dump_dir);
    if (*attack) return RunAttack(opts, query_path, shuffle_alphas);
    if (*subquery) return RunSubquery(opts, sub_scheme);
    if (*rates) return RunRates(opts, table);
    if (*curves) return RunCurves(opts, figure, fig5_q, reuse, points);
    if (*cost) return RunCost(opts);
    if (*selftest) return RunSelftest(opts);
  } catch (const Error& e) {
    std::cerr << "error: code=" << ErrorCodeName(e.code())
              << " reason=" << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const CliFailure& e) {
    std::cerr << "error: code=" << e.name << " reason=" << e.reason << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: code=internal reason=" << e.what() << '\n';
    return kExitOther;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace cbpir

int main(int argc, char** argv) { return cbpir::Run(argc, argv); }
