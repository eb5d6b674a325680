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
//
// Share placement: a secret seed (hash of the data, or externally supplied)
// drives a deterministic, duplicate-free sequence of sensor IDs. The
// construction is a plain hash counter so any language with SHA-256 can
// reproduce it bit-exactly.

#ifndef ROOTSHARE_ADDRESSING_HPP_
#define ROOTSHARE_ADDRESSING_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rootshare {

std::array<std::uint8_t, 32> sha256(const std::uint8_t* data, std::size_t len);

// Secret placement seed. Never stored alongside shares.
struct PlacementSeed {
  std::array<std::uint8_t, 32> seed{};

  static PlacementSeed from_hex(std::string_view hex);
  std::string hex() const;

  friend auto operator<=>(const PlacementSeed&, const PlacementSeed&) = default;
};

// SHA-256 of the data.
PlacementSeed derive_seed(const std::vector<std::uint8_t>& data);

// IDs are drawn as (first 8 bytes, big-endian, of SHA-256(seed || i as
// 8-byte BE)) mod N for i = 0, 1, 2, ...; duplicates are skipped, so the
// sequence is prefix-stable as count grows. Throws CountExceedsNetworkError
// when count > network_size.
std::vector<std::uint64_t> sensor_sequence(const PlacementSeed& seed, std::size_t count,
                                           std::uint64_t network_size);

}  // namespace rootshare

#endif  // ROOTSHARE_ADDRESSING_HPP_
