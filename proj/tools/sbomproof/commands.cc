// Copyright 2026 The sbomproof Authors.
//
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

#include "sbomproof/commands.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sbomproof/bench.h"
#include "sbomproof/digest.h"
#include "sbomproof/encoding.h"
#include "sbomproof/errors.h"
#include "sbomproof/policy.h"
#include "sbomproof/proof.h"
#include "sbomproof/random.h"
#include "sbomproof/registry.h"
#include "sbomproof/root_file.h"
#include "sbomproof/sbom.h"
#include "sbomproof/scenario.h"
#include "sbomproof/sparse_tree.h"

namespace sbomproof::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr int kSecurityBits = 128;

void Emit(std::ostream& out, const ordered_json& obj) { out << obj.dump() << "\n"; }

void WriteJsonFile(const fs::path& path, const std::string& text) {
  WriteFileText(path.string(), text.ends_with('\n') ? text : text + "\n");
}

void MakeDir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create '" + dir + "': " + ec.message());
}

std::vector<std::string> SplitSetId(const std::string& set_id) {
  std::vector<std::string> ids;
  std::stringstream in(set_id);
  for (std::string id; std::getline(in, id, '+');) {
    if (!id.empty()) ids.push_back(id);
  }
  return ids;
}

// "none", "all" or comma-separated 0-based positions.
std::set<std::size_t> ParseHide(const std::string& text, std::size_t entries) {
  std::set<std::size_t> hide;
  if (text == "none" || text.empty()) return hide;
  if (text == "all") {
    for (std::size_t i = 0; i < entries; ++i) hide.insert(i);
    return hide;
  }
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) {
      throw UsageError("--hide expects 'none', 'all' or positions like 0,2; got '" +
                       text + "'");
    }
    hide.insert(std::stoull(tok));
  }
  return hide;
}

struct LoadedPackageTree {
  RegistrySnapshot snapshot;
  RootFile root_file;
  PackageTree tree;
};

// Rebuilds the package tree from a setup directory and checks it against the
// published root.
LoadedPackageTree LoadPackageDir(const std::string& dir) {
  const fs::path base(dir);
  RootFile root = LoadRootFile((base / "pt.root.json").string());
  if (root.kind != TreeKind::kPackage) {
    throw Error(ErrorCode::kSchema, "pt.root.json is not a package-tree root");
  }
  auto snapshot = LoadSnapshotFile((base / "registry.jsonl").string());
  auto tree = BuildPackageTree(snapshot, SetupParams(kSecurityBits, root.depth));
  if (tree.root() != root.root) {
    throw Error(ErrorCode::kSchema,
                "registry.jsonl does not reproduce the published package root");
  }
  const auto index_map = IndexMapFromJson(ReadFileText((base / "index_map.json").string()));
  if (index_map != tree.index_map) {
    throw Error(ErrorCode::kSchema, "index_map.json disagrees with registry.jsonl");
  }
  return {std::move(snapshot), std::move(root), std::move(tree)};
}

// Composes the compliance exports named by a shadow root (found next to it)
// and rebuilds the shadow tree.
SparseTree LoadShadowTree(const RootFile& root, const std::string& root_path,
                          const LoadedPackageTree& pt) {
  if (root.kind != TreeKind::kShadow) {
    throw Error(ErrorCode::kSchema, "'" + root_path + "' is not a shadow-tree root");
  }
  if (root.depth != pt.root_file.depth) {
    throw UsageError("shadow root depth " + std::to_string(root.depth) +
                     " differs from package root depth " +
                     std::to_string(pt.root_file.depth));
  }
  const fs::path dir = fs::path(root_path).parent_path();
  std::vector<Verdicts> maps;
  for (const auto& id : SplitSetId(root.policy_set)) {
    const auto path = dir / ("compliance." + id + ".json");
    const auto map = ComplianceFromJson(ReadFileText(path.string()));
    if (map.policy_id != id) {
      throw Error(ErrorCode::kSchema, path.string() + " holds policy '" + map.policy_id + "'");
    }
    maps.push_back(map.propagated);
  }
  auto st = BuildShadowTree(Compose(pt.snapshot, maps), pt.tree.index_map,
                            pt.root_file.params());
  if (st.root() != root.root) {
    throw Error(ErrorCode::kSchema,
                "compliance exports do not reproduce the shadow root in '" + root_path + "'");
  }
  return st;
}

Digest ArtifactDigest(const std::string& path) { return Sha256(ReadFileBytes(path)); }

int RunSetup(const std::string& registry, int depth, const std::string& out_dir,
             std::ostream& out, std::ostream& err) {
  const auto params = SetupParams(kSecurityBits, depth);
  const auto snapshot = LoadSnapshotFile(registry);
  const auto pt = BuildPackageTree(snapshot, params);
  MakeDir(out_dir);
  const fs::path base(out_dir);
  RootFile root{pt.root(), depth, params.hash_alg_id, TreeKind::kPackage, ""};
  WriteJsonFile(base / "pt.root.json", RootFileToJson(root));
  WriteJsonFile(base / "index_map.json", IndexMapToJson(pt.index_map));
  WriteFileText((base / "registry.jsonl").string(), SnapshotToJsonl(snapshot));
  err << "setup: committed " << snapshot.packages.size() << " packages at depth "
      << depth << "\n";
  Emit(out, {{"command", "setup"},
             {"status", "ok"},
             {"packages", snapshot.packages.size()},
             {"depth", depth},
             {"root", pt.root().ToHex()}});
  return kExitOk;
}

int RunAudit(const std::vector<std::string>& policy_files, const std::string& registry,
             const std::string& out_dir, const std::vector<std::string>& compose,
             int depth, std::ostream& out, std::ostream& err) {
  const auto params = SetupParams(kSecurityBits, depth);
  const auto snapshot = LoadSnapshotFile(registry);
  const auto index_map = BuildIndexMap(snapshot, depth);
  std::map<std::string, ComplianceMap> maps;
  for (const auto& file : policy_files) {
    const auto policy = PolicyFromJson(ReadFileText(file));
    if (maps.contains(policy.policy_id)) {
      throw UsageError("policy id '" + policy.policy_id + "' appears twice");
    }
    maps.emplace(policy.policy_id, EvaluatePolicy(snapshot, policy));
  }
  MakeDir(out_dir);
  const fs::path base(out_dir);
  ordered_json roots = ordered_json::object();
  auto publish = [&](const std::string& set_id, const Verdicts& composed) {
    const auto st = BuildShadowTree(composed, index_map, params);
    RootFile root{st.root(), depth, params.hash_alg_id, TreeKind::kShadow, set_id};
    WriteJsonFile(base / ("st." + set_id + ".root.json"), RootFileToJson(root));
    roots[set_id] = st.root().ToHex();
    std::size_t flagged = 0;
    for (const auto& [key, ok] : composed) flagged += ok ? 0 : 1;
    err << "audit: " << set_id << " flags " << flagged << " of " << composed.size()
        << " packages\n";
  };
  for (const auto& [id, map] : maps) {
    WriteJsonFile(base / ("compliance." + id + ".json"), ComplianceToJson(map));
    const std::vector<Verdicts> one = {map.propagated};
    publish(id, Compose(snapshot, one));
  }
  for (const auto& request : compose) {
    const auto ids = SplitSetId(request);
    if (ids.empty()) throw UsageError("--compose needs ids like sec+lic");
    std::vector<Verdicts> parts;
    for (const auto& id : ids) {
      auto it = maps.find(id);
      if (it == maps.end()) throw UsageError("--compose names unknown policy '" + id + "'");
      parts.push_back(it->second.propagated);
    }
    publish(MakeSetId(ids), Compose(snapshot, parts));
  }
  Emit(out, {{"command", "audit"}, {"status", "ok"}, {"roots", roots}});
  return kExitOk;
}

struct ProveArgs {
  std::string sbom;
  std::string hide = "none";
  std::string pt_dir;
  std::string st_root;
  std::string artifact;
  std::string backend{kTranscriptBackendId};
  std::string out;
  std::string public_sbom;
  std::optional<std::uint64_t> seed;
  bool salted = false;
  bool require_hiding = false;
};

int RunProve(const ProveArgs& a, std::ostream& out, std::ostream& err) {
  const ProofBackend* backend = BackendRegistry::Default().Find(a.backend);
  if (backend == nullptr) {
    throw Error(ErrorCode::kBackend,
                "backend '" + a.backend + "' is not available in this build");
  }
  const Sbom sbom = LoadSbomFile(a.sbom);
  const auto hide = ParseHide(a.hide, sbom.entries.size());
  const auto pt = LoadPackageDir(a.pt_dir);
  const RootFile st_root = LoadRootFile(a.st_root);
  const SparseTree st = LoadShadowTree(st_root, a.st_root, pt);
  const Digest artifact = ArtifactDigest(a.artifact);

  auto rng = MakeRandomSource(a.seed);
  ProveRequest request{&sbom, &pt.tree, &st, st_root.policy_set, artifact, a.require_hiding};
  Proof proof;
  try {
    proof = Prove(request, *backend, *rng);
  } catch (const StepError& e) {
    // The human log may name the dependency; stdout carries the ordinal only.
    const auto& entry = sbom.entries.at(e.ordinal() - 1);
    err << "prove: step " << e.ordinal() << " (" << entry.key() << ") failed: "
        << ErrorCodeName(e.code()) << "\n";
    throw;
  }

  const fs::path proof_path(a.out);
  if (proof_path.has_parent_path()) MakeDir(proof_path.parent_path().string());
  WriteJsonFile(proof_path, ProofToJson(proof));

  std::string public_path = a.public_sbom;
  if (public_path.empty()) {
    public_path = (proof_path.parent_path() / (proof_path.stem().string() + ".public.json"))
                      .string();
  }
  std::unique_ptr<RandomSource> salt_rng;
  if (a.salted) salt_rng = MakeRandomSource(std::nullopt);
  const auto redaction = Redact(sbom, hide, proof_path.filename().string(), pt.snapshot,
                                salt_rng.get());
  WriteJsonFile(public_path, PublicSbomToJson(redaction.sbom));
  if (!redaction.salts.empty()) {
    ordered_json salts = ordered_json::object();
    for (const auto& [pos, salt] : redaction.salts) salts[std::to_string(pos)] = HexEncode(salt);
    WriteJsonFile(public_path + ".salts", salts.dump(2));
    err << "prove: salts written to " << public_path << ".salts (keep private)\n";
  }
  err << "prove: folded " << proof.step_count << " steps with backend " << a.backend
      << ", " << hide.size() << " entries hidden\n";
  Emit(out, {{"command", "prove"},
             {"status", "ok"},
             {"backend_id", proof.backend_id},
             {"step_count", proof.step_count},
             {"accumulator", proof.accumulator.ToHex()},
             {"hidden", hide.size()}});
  return kExitOk;
}

int RunVerify(const std::string& proof_file, const std::string& pt_root_file,
              const std::string& st_root_file, const std::string& artifact,
              std::ostream& out, std::ostream& err) {
  const RootFile pt_root = LoadRootFile(pt_root_file);
  const RootFile st_root = LoadRootFile(st_root_file);
  if (pt_root.kind != TreeKind::kPackage || st_root.kind != TreeKind::kShadow) {
    throw Error(ErrorCode::kSchema, "--pt-root needs a PT root and --st-root an ST root");
  }
  if (pt_root.depth != st_root.depth || pt_root.hash_alg_id != st_root.hash_alg_id) {
    throw UsageError("package and shadow roots use different parameters");
  }
  const TrustedAnchors anchors{pt_root.root, st_root.root, st_root.policy_set,
                               ArtifactDigest(artifact), pt_root.depth};
  const std::string envelope = ReadFileText(proof_file);
  const VerifyResult r = VerifyProofJson(envelope, anchors);
  ordered_json result = {{"command", "verify"}, {"result", r.accepted ? "Accept" : "Reject"}};
  if (!r.accepted) {
    result["reason"] = r.ToString();
    if (!r.detail.empty()) result["detail"] = r.detail;
  }
  err << r.ToString() << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
  Emit(out, result);
  return r.accepted ? kExitOk : kExitReject;
}

int RunScenarioCommand(const std::string& name, const std::string& out_dir,
                       std::optional<std::uint64_t> seed, std::ostream& out,
                       std::ostream& err) {
  const ScenarioReport report = RunScenario(name, out_dir, seed);
  for (const auto& s : report.steps) {
    err << report.name << ": " << s.actor << " " << s.action << " -> " << s.outcome
        << " (exit " << s.exit_code << ")\n";
  }
  err << report.name << ": expected " << report.expected << ", got " << report.actual
      << "\n";
  WriteJsonFile(fs::path(out_dir) / "scenario.json", report.ToJson());
  out << report.ToJson() << "\n";
  return report.matches() ? kExitOk : kExitReject;
}

int RunBenchCommand(const BenchConfig& config, const std::string& csv_path,
                    std::ostream& out, std::ostream& err) {
  std::string csv = std::string(kBenchCsvHeader) + "\n";
  ordered_json rows = ordered_json::array();
  for (const auto& row : RunBench(config)) {
    csv += BenchRowCsv(row) + "\n";
    err << "bench: N=" << row.packages << " D=" << row.depth << " K=" << row.deps
        << " prove " << row.prove_ms << " ms, verify " << row.verify_ms << " ms\n";
    rows.push_back(row.packages);
  }
  const fs::path path(csv_path);
  if (path.has_parent_path()) MakeDir(path.parent_path().string());
  WriteFileText(csv_path, csv);
  Emit(out, {{"command", "bench"}, {"status", "ok"}, {"rows", rows.size()}, {"csv", csv_path}});
  return kExitOk;
}

int ReportError(const Error& e, std::ostream& out, std::ostream& err) {
  ordered_json obj = {{"status", "error"}, {"error", ErrorCodeName(e.code())}};
  if (const auto* step = dynamic_cast<const StepError*>(&e)) {
    obj["step"] = step->ordinal();
    Emit(out, obj);
    return kExitNonCompliant;
  }
  obj["message"] = e.what();
  err << "error: " << e.what() << "\n";
  Emit(out, obj);
  return kExitUsage;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual sparse Merkle tree SBOM compliance proofs", "sbomproof"};
  app.require_subcommand(1);

  std::string registry, out_dir;
  int depth = 20;
  auto* setup = app.add_subcommand("setup", "Commit a registry snapshot to the package tree");
  setup->add_option("--registry", registry, "Registry snapshot (JSONL)")->required();
  setup->add_option("--depth", depth, "Tree depth")->check(CLI::Range(kMinDepth, kMaxDepth));
  setup->add_option("--out", out_dir, "Output directory")->required();

  std::vector<std::string> policies, compose;
  auto* audit = app.add_subcommand("audit", "Evaluate policies and publish shadow roots");
  audit->add_option("--policies", policies, "Policy files")->required();
  audit->add_option("--registry", registry, "Registry snapshot (JSONL)")->required();
  audit->add_option("--out", out_dir, "Output directory")->required();
  audit->add_option("--compose", compose, "Policy sets to compose, e.g. sec+lic");
  audit->add_option("--depth", depth, "Tree depth (must match setup)")
      ->check(CLI::Range(kMinDepth, kMaxDepth));

  ProveArgs prove_args;
  std::uint64_t seed = 0;
  auto* prove = app.add_subcommand("prove", "Fold an SBOM into a compliance proof");
  prove->add_option("--sbom", prove_args.sbom, "Internal SBOM (JSON)")->required();
  prove->add_option("--hide", prove_args.hide, "none | all | 0-based positions (0,2)");
  prove->add_option("--pt", prove_args.pt_dir, "Setup output directory")->required();
  prove->add_option("--st-root", prove_args.st_root, "Shadow root file")->required();
  prove->add_option("--artifact", prove_args.artifact, "Delivered artifact")->required();
  prove->add_option("--backend", prove_args.backend, "transcript | folding");
  prove->add_option("--out", prove_args.out, "Proof output path")->required();
  prove->add_option("--public-sbom", prove_args.public_sbom,
                    "Public SBOM path (default <proof stem>.public.json)");
  auto* prove_seed = prove->add_option("--seed", seed, "Deterministic randomizers");
  prove->add_flag("--salted", prove_args.salted, "Salt hidden-entry commitments");
  prove->add_flag("--require-hiding", prove_args.require_hiding,
                  "Fail unless the backend is zero-knowledge");

  std::string proof_file, pt_root, st_root, artifact;
  auto* verify = app.add_subcommand("verify", "Verify a proof against trusted roots");
  verify->add_option("--proof", proof_file, "Proof envelope")->required();
  verify->add_option("--pt-root", pt_root, "Trusted package root")->required();
  verify->add_option("--st-root", st_root, "Trusted shadow root")->required();
  verify->add_option("--artifact", artifact, "Delivered artifact")->required();

  std::string scenario_name;
  auto* scenario = app.add_subcommand("scenario", "Run a lifecycle scenario (s1..s4)");
  scenario->add_option("--name", scenario_name, "s1 | s2 | s3 | s4")
      ->required()
      ->check(CLI::IsMember({"s1", "s2", "s3", "s4"}));
  scenario->add_option("--out", out_dir, "Working directory")->required();
  auto* scenario_seed = scenario->add_option("--seed", seed, "Deterministic randomizers");

  BenchConfig bench_config;
  std::string csv;
  auto* bench = app.add_subcommand("bench", "Emit scaling measurements as CSV");
  bench->add_option("--packages", bench_config.log2_packages, "log2 registry sizes")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(0, 24));
  bench->add_option("--deps", bench_config.deps, "Dependency counts K")
      ->required()
      ->delimiter(',');
  bench->add_option("--depth", bench_config.depth, "Tree depth (0: log2 N + 6)")
      ->check(CLI::Range(0, kMaxDepth));
  bench->add_option("--repeat", bench_config.repeat, "Runs per cell (minimum kept)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_config.seed, "Fixture seed");
  bench->add_option("--out", csv, "CSV output path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::stringstream help_out, help_err;
    const int code = app.exit(e, help_out, help_err);
    if (code == 0) {
      err << help_out.str();
      Emit(out, {{"status", "ok"}, {"help", true}});
      return kExitOk;
    }
    err << help_err.str() << help_out.str();
    Emit(out, {{"status", "error"}, {"error", "UsageError"}, {"message", e.what()}});
    return kExitUsage;
  }

  try {
    if (*setup) return RunSetup(registry, depth, out_dir, out, err);
    if (*audit) return RunAudit(policies, registry, out_dir, compose, depth, out, err);
    if (*prove) {
      if (*prove_seed) prove_args.seed = seed;
      return RunProve(prove_args, out, err);
    }
    if (*verify) return RunVerify(proof_file, pt_root, st_root, artifact, out, err);
    if (*scenario) {
      return RunScenarioCommand(scenario_name, out_dir,
                                *scenario_seed ? std::optional(seed) : std::nullopt, out,
                                err);
    }
    if (*bench) return RunBenchCommand(bench_config, csv, out, err);
  } catch (const Error& e) {
    return ReportError(e, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    Emit(out, {{"status", "error"}, {"error", "InternalError"}, {"message", e.what()}});
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sbomproof::cli
