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

#ifndef SBOMPROOF_ENCODING_H_
#define SBOMPROOF_ENCODING_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sbomproof {

std::string HexEncode(std::span<const std::uint8_t> bytes);
// Lowercase only. ParseError on odd length or any other character.
std::vector<std::uint8_t> HexDecode(std::string_view hex);

std::string Base64Encode(std::span<const std::uint8_t> bytes);
// Strict: rejects whitespace, bad padding and non-zero trailing bits, so an
// encoded string has exactly one decoding and vice versa.
std::vector<std::uint8_t> Base64Decode(std::string_view text);

void AppendU32(std::vector<std::uint8_t>& out, std::uint32_t value);
void AppendU64(std::vector<std::uint8_t>& out, std::uint64_t value);
void AppendBytes(std::vector<std::uint8_t>& out,
                 std::span<const std::uint8_t> bytes);
// 4-byte big-endian length, then the UTF-8 bytes.
void AppendLengthPrefixed(std::vector<std::uint8_t>& out,
                          std::string_view field);

// Bounds-checked big-endian reader; throws ParseError past the end.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint32_t ReadU32();
  std::uint64_t ReadU64();
  std::span<const std::uint8_t> ReadBytes(std::size_t n);

  std::size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return pos_ == data_.size(); }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

std::vector<std::uint8_t> ReadFileBytes(const std::string& path);
std::string ReadFileText(const std::string& path);
void WriteFileText(const std::string& path, std::string_view text);

}  // namespace sbomproof

#endif  // SBOMPROOF_ENCODING_H_
