// Copyright 2026 The rootshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rootshare/addressing.hpp"

#include <stdexcept>
#include <unordered_set>

#include <openssl/evp.h>

#include "rootshare/errors.hpp"

namespace rootshare {

std::array<std::uint8_t, 32> sha256(const std::uint8_t* data, std::size_t len) {
  std::array<std::uint8_t, 32> digest{};
  unsigned int out_len = 0;
  if (EVP_Digest(data, len, digest.data(), &out_len, EVP_sha256(), nullptr) != 1 ||
      out_len != digest.size())
    throw Error("SHA-256 computation failed");
  return digest;
}

PlacementSeed PlacementSeed::from_hex(std::string_view hex) {
  if (hex.empty() || hex.size() > 64 || hex.size() % 2 != 0)
    throw std::invalid_argument("seed must be 2..64 hex chars, even length");
  auto nibble = [](char c) -> unsigned {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit in seed");
  };
  PlacementSeed out;
  // left-pad into the 32-byte array
  const std::size_t start = 32 - hex.size() / 2;
  for (std::size_t i = 0; i < hex.size() / 2; ++i)
    out.seed[start + i] =
        static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  return out;
}

std::string PlacementSeed::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (std::uint8_t b : seed) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

PlacementSeed derive_seed(const std::vector<std::uint8_t>& data) {
  return PlacementSeed{sha256(data.data(), data.size())};
}

std::vector<std::uint64_t> sensor_sequence(const PlacementSeed& seed, std::size_t count,
                                           std::uint64_t network_size) {
  if (network_size == 0) throw std::invalid_argument("network size must be >= 1");
  if (count > network_size)
    throw CountExceedsNetworkError("asked for " + std::to_string(count) + " ids from " +
                                   std::to_string(network_size) + " nodes");
  std::vector<std::uint64_t> out;
  out.reserve(count);
  std::unordered_set<std::uint64_t> seen;
  std::array<std::uint8_t, 40> preimage{};
  std::copy(seed.seed.begin(), seed.seed.end(), preimage.begin());
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    for (int b = 0; b < 8; ++b)
      preimage[32 + b] = static_cast<std::uint8_t>(i >> (56 - 8 * b));
    const auto digest = sha256(preimage.data(), preimage.size());
    std::uint64_t word = 0;
    for (int b = 0; b < 8; ++b) word = word << 8 | digest[b];
    const std::uint64_t candidate = word % network_size;
    if (seen.insert(candidate).second) out.push_back(candidate);
  }
  return out;
}

}  // namespace rootshare
