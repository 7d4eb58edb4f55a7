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

#ifndef SBOMPROOF_RANDOM_H_
#define SBOMPROOF_RANDOM_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>

namespace sbomproof {

// Source of step randomizers and commitment salts.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void Fill(std::span<std::uint8_t> out) = 0;
};

// OS entropy via OpenSSL's RAND_bytes.
class SystemRandom final : public RandomSource {
 public:
  void Fill(std::span<std::uint8_t> out) override;
};

// Reproducible stream for golden tests and --seed. Not for production use.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}
  void Fill(std::span<std::uint8_t> out) override;

 private:
  std::mt19937_64 engine_;
};

std::unique_ptr<RandomSource> MakeRandomSource(std::optional<std::uint64_t> seed);

}  // namespace sbomproof

#endif  // SBOMPROOF_RANDOM_H_
