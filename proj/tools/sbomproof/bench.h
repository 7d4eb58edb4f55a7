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

#ifndef SBOMPROOF_TOOLS_BENCH_H_
#define SBOMPROOF_TOOLS_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sbomproof::cli {

struct BenchConfig {
  std::vector<int> log2_packages;
  std::vector<std::size_t> deps;
  // 0 picks log2(N) + 6, capped at the maximum depth.
  int depth = 0;
  std::uint64_t seed = 1;
  // Timings are the minimum over this many runs.
  int repeat = 3;
};

struct BenchRow {
  int log2_packages = 0;
  std::size_t packages = 0;
  int depth = 0;
  std::size_t deps = 0;
  std::size_t opening_bytes = 0;
  // (PT + ST stored nodes) x 32.
  std::size_t storage_bytes = 0;
  double prove_ms = 0;
  double verify_ms = 0;
  std::size_t proof_bytes = 0;
};

inline constexpr const char* kBenchCsvHeader =
    "log2_packages,packages,depth,deps,opening_bytes,storage_bytes,prove_ms,"
    "verify_ms,proof_bytes";

std::vector<BenchRow> RunBench(const BenchConfig& config);
std::string BenchRowCsv(const BenchRow& row);

}  // namespace sbomproof::cli

#endif  // SBOMPROOF_TOOLS_BENCH_H_
