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

#include "sbomproof/scenario.h"

#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "sbomproof/commands.h"
#include "sbomproof/encoding.h"
#include "sbomproof/errors.h"
#include "sbomproof/fixtures.h"
#include "sbomproof/policy.h"
#include "sbomproof/proof.h"
#include "sbomproof/random.h"
#include "sbomproof/registry.h"
#include "sbomproof/root_file.h"
#include "sbomproof/sbom.h"
#include "sbomproof/transcript_backend.h"

namespace sbomproof::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr int kScenarioDepth = 16;
constexpr const char* kComposed = "lic+sec";

class Script {
 public:
  Script(std::string name, const std::string& out_dir,
         std::optional<std::uint64_t> seed)
      : dir_(out_dir), seed_(seed) {
    report_.name = std::move(name);
    fs::create_directories(dir_);
  }

  std::string Path(const std::string& rel) const { return (dir_ / rel).string(); }

  void Write(const std::string& rel, const std::string& text) {
    const fs::path p = dir_ / rel;
    fs::create_directories(p.parent_path());
    WriteFileText(p.string(), text);
  }

  // Runs a CLI command and records its machine-readable outcome.
  ScenarioStep& Run(std::string actor, std::string action, std::vector<std::string> args) {
    std::ostringstream out, err;
    ScenarioStep step{std::move(actor), std::move(action), RunCli(args, out, err), ""};
    const auto result = ordered_json::parse(out.str(), nullptr, false);
    if (result.is_discarded()) {
      step.outcome = "unparsed";
    } else if (result.contains("result")) {
      step.outcome = result.contains("reason") ? result["reason"].get<std::string>()
                                               : result["result"].get<std::string>();
    } else if (result.value("status", "") == "ok") {
      step.outcome = "ok";
    } else {
      step.outcome = result.value("error", "error");
      if (result.contains("step")) {
        step.outcome += "(" + std::to_string(result["step"].get<std::size_t>()) + ")";
      }
    }
    report_.steps.push_back(std::move(step));
    return report_.steps.back();
  }

  void Note(std::string actor, std::string action, std::string outcome) {
    report_.steps.push_back({std::move(actor), std::move(action), 0, std::move(outcome)});
  }

  // Distinct, reproducible randomizer seed per prove call when seeded.
  std::vector<std::string> SeedArgs() {
    if (!seed_) return {};
    return {"--seed", std::to_string(*seed_ + prove_calls_++)};
  }
  std::optional<std::uint64_t> NextSeed() {
    if (!seed_) return std::nullopt;
    return *seed_ + prove_calls_++;
  }

  ScenarioReport& report() { return report_; }

 private:
  fs::path dir_;
  std::optional<std::uint64_t> seed_;
  std::uint64_t prove_calls_ = 0;
  ScenarioReport report_;
};

std::string DenyPolicy(const std::vector<std::string>& keys) {
  return PolicyToJson({"sec", DenyList{{keys.begin(), keys.end()}}});
}

// Registry operator publishes g_PT; the auditor publishes sec, lic and the
// composed root.
void Publish(Script& s) {
  s.Write("registry.jsonl", SnapshotToJsonl(fixtures::BankingRegistry()));
  s.Write("policies/sec.json", DenyPolicy({}));
  s.Write("policies/lic.json", PolicyToJson(PolicyConstraint{
                                   "lic", LicenseAllowList{{"MIT", "Apache-2.0"}}}));
  s.Write("sbom.json", SbomToJson(fixtures::BankingSbom()));
  s.Write("artifact.bin", "banking-core 2.4.1 release build\n");
  const std::string depth = std::to_string(kScenarioDepth);
  s.Run("registry", "setup", {"setup", "--registry", s.Path("registry.jsonl"), "--depth",
                              depth, "--out", s.Path("pt")});
  s.Run("auditor", "audit", {"audit", "--policies", s.Path("policies/sec.json"),
                             s.Path("policies/lic.json"), "--registry",
                             s.Path("registry.jsonl"), "--compose", kComposed, "--depth",
                             depth, "--out", s.Path("audit")});
}

ScenarioStep& ProveStep(Script& s, const std::string& action, const std::string& sbom,
                        const std::string& audit_dir, const std::string& proof) {
  std::vector<std::string> args = {
      "prove",     "--sbom",    s.Path(sbom),
      "--hide",    "1",         "--pt",
      s.Path("pt"), "--st-root", s.Path(audit_dir + "/st." + kComposed + ".root.json"),
      "--artifact", s.Path("artifact.bin"), "--backend",
      "transcript", "--out",    s.Path(proof)};
  for (auto& a : s.SeedArgs()) args.push_back(a);
  return s.Run("vendor", action, args);
}

ScenarioStep& VerifyStep(Script& s, const std::string& action, const std::string& proof,
                         const std::string& audit_dir) {
  return s.Run("client", action,
               {"verify", "--proof", s.Path(proof), "--pt-root", s.Path("pt/pt.root.json"),
                "--st-root", s.Path(audit_dir + "/st." + kComposed + ".root.json"),
                "--artifact", s.Path("artifact.bin")});
}

// An adversarial vendor folds every step without checking ValidDep and
// writes the result as if it were an honest proof.
void Forge(Script& s, const std::string& audit_dir, const std::string& proof_rel) {
  const auto snapshot = LoadSnapshotFile(s.Path("pt/registry.jsonl"));
  const auto pt_root = LoadRootFile(s.Path("pt/pt.root.json"));
  const auto pt = BuildPackageTree(snapshot, pt_root.params());
  std::vector<Verdicts> maps;
  for (const char* id : {"lic", "sec"}) {
    const auto path = s.Path(audit_dir + "/compliance." + id + ".json");
    maps.push_back(ComplianceFromJson(ReadFileText(path)).propagated);
  }
  const auto st = BuildShadowTree(Compose(snapshot, maps), pt.index_map, pt_root.params());
  const Digest artifact = Sha256(ReadFileBytes(s.Path("artifact.bin")));
  FoldState state = InitFold({pt.root(), st.root(), kComposed}, artifact);
  auto rng = MakeRandomSource(s.NextSeed());
  for (const auto& e : fixtures::BankingSbom().entries) {
    StepWitness w;
    w.index = pt.index_map.at(e.key());
    w.pt_leaf = pt.tree.Leaf(w.index);
    w.pt_opening = pt.tree.Open(w.index);
    w.st_opening = st.Open(w.index);
    rng->Fill(w.rho);
    state.accumulator.Absorb(w.rho);
    state.steps.push_back(std::move(w));
  }
  s.Write(proof_rel, ProofToJson(TranscriptBackend().Compress(state)) + "\n");
  s.Note("adversary", "forge proof skipping compliance checks", "written");
}

// Baseline: publish, prove, verify.
bool Baseline(Script& s) {
  Publish(s);
  ProveStep(s, "prove banking-core", "sbom.json", "audit", "proof.json");
  return VerifyStep(s, "verify against published roots", "proof.json", "audit")
             .exit_code == kExitOk;
}

// The auditor flags log4rs 1.2.0 and republishes.
void Revoke(Script& s) {
  s.Write("policies-v2/sec.json", DenyPolicy({"log4rs@1.2.0"}));
  s.Run("auditor", "flag log4rs 1.2.0 and re-audit",
        {"audit", "--policies", s.Path("policies-v2/sec.json"), s.Path("policies/lic.json"),
         "--registry", s.Path("registry.jsonl"), "--compose", kComposed, "--depth",
         std::to_string(kScenarioDepth), "--out", s.Path("audit-v2")});
}

void S1(Script& s) { s.report().actual = Baseline(s) ? "Valid" : "Invalid"; }

void S2(Script& s) {
  Publish(s);
  Revoke(s);
  Sbom unknown = fixtures::BankingSbom();
  unknown.entries[1] = {"leftpad", "1.3.0", "npm"};
  s.Write("sbom-unknown.json", SbomToJson(unknown));
  const auto& a = ProveStep(s, "prove SBOM with unregistered package", "sbom-unknown.json",
                            "audit-v2", "proof-unknown.json");
  const bool a_blocked = a.exit_code == kExitNonCompliant;
  const auto& b = ProveStep(s, "prove SBOM with flagged package", "sbom.json", "audit-v2",
                            "proof-flagged.json");
  const bool b_blocked = b.exit_code == kExitNonCompliant;
  Forge(s, "audit-v2", "proof-forged.json");
  const bool c_accepted =
      VerifyStep(s, "verify forged proof", "proof-forged.json", "audit-v2").exit_code ==
      kExitOk;
  s.report().actual = (a_blocked && b_blocked && !c_accepted) ? "Invalid" : "Valid";
}

void S3(Script& s) {
  Baseline(s);
  Revoke(s);
  const auto& v = VerifyStep(s, "verify stale proof against updated roots", "proof.json",
                             "audit-v2");
  s.report().actual = v.exit_code == kExitOk ? "Valid" : "Invalid";
}

void S4(Script& s) {
  Baseline(s);
  Revoke(s);
  VerifyStep(s, "verify stale proof against updated roots", "proof.json", "audit-v2");
  ProveStep(s, "re-prove unpatched SBOM", "sbom.json", "audit-v2", "proof-unpatched.json");
  s.Write("sbom-patched.json", SbomToJson(fixtures::PatchedBankingSbom()));
  ProveStep(s, "prove patched SBOM (log4rs 1.3.0)", "sbom-patched.json", "audit-v2",
            "proof-v2.json");
  const auto& v =
      VerifyStep(s, "verify regenerated proof against updated roots", "proof-v2.json",
                 "audit-v2");
  s.report().actual = v.exit_code == kExitOk ? "Valid" : "Invalid";
}

}  // namespace

std::string ScenarioReport::ToJson() const {
  ordered_json j = {{"command", "scenario"},
                    {"name", name},
                    {"expected", expected},
                    {"actual", actual},
                    {"match", matches()},
                    {"steps", ordered_json::array()}};
  for (const auto& s : steps) {
    j["steps"].push_back({{"actor", s.actor},
                          {"action", s.action},
                          {"exit_code", s.exit_code},
                          {"outcome", s.outcome}});
  }
  return j.dump();
}

ScenarioReport RunScenario(const std::string& name, const std::string& out_dir,
                           std::optional<std::uint64_t> seed) {
  using Body = void (*)(Script&);
  static const std::map<std::string, std::pair<const char*, Body>> kScenarios = {
      {"s1", {"Valid", S1}},
      {"s2", {"Invalid", S2}},
      {"s3", {"Invalid", S3}},
      {"s4", {"Valid", S4}},
  };
  auto it = kScenarios.find(name);
  if (it == kScenarios.end()) throw UsageError("unknown scenario '" + name + "'");
  Script script(name, out_dir, seed);
  script.report().expected = it->second.first;
  it->second.second(script);
  return script.report();
}

}  // namespace sbomproof::cli
