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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "rootshare/addressing.hpp"
#include "rootshare/errors.hpp"
#include "support.hpp"

using namespace rootshare;

namespace {

PlacementSeed counting_seed() {
  PlacementSeed s;
  for (std::size_t i = 0; i < 32; ++i) s.seed[i] = static_cast<std::uint8_t>(i);
  return s;
}

}  // namespace

TEST_CASE("seed derivation is the plain digest") {
  // published digest of the empty string
  CHECK(derive_seed({}).hex() ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");

  const std::vector<std::uint8_t> data{1, 2, 3};
  CHECK(derive_seed(data) == derive_seed(data));

  std::vector<std::uint8_t> flipped = data;
  flipped[0] ^= 0x01;
  CHECK(derive_seed(flipped) != derive_seed(data));
}

TEST_CASE("seed hex parsing pads short strings") {
  const PlacementSeed s = PlacementSeed::from_hex("c0ffee");
  CHECK(s.seed[29] == 0xc0);
  CHECK(s.seed[31] == 0xee);
  CHECK(s.seed[0] == 0);
  CHECK_THROWS_AS(PlacementSeed::from_hex("abc"), std::invalid_argument);
  CHECK_THROWS_AS(PlacementSeed::from_hex("zz"), std::invalid_argument);
  CHECK(PlacementSeed::from_hex(counting_seed().hex()) == counting_seed());
}

TEST_CASE("golden sensor sequence") {
  // frozen from the hash-counter definition, cross-checked externally
  const auto ids = sensor_sequence(counting_seed(), 5, 100);
  CHECK(ids == std::vector<std::uint64_t>{21, 20, 2, 10, 73});
}

TEST_CASE("sequence determinism and prefix stability") {
  const auto five = sensor_sequence(counting_seed(), 5, 100);
  const auto ten = sensor_sequence(counting_seed(), 10, 100);
  CHECK(std::equal(five.begin(), five.end(), ten.begin()));
  CHECK(sensor_sequence(counting_seed(), 10, 100) == ten);
}

TEST_CASE("count = N yields a permutation") {
  const auto ids = sensor_sequence(counting_seed(), 16, 16);
  std::set<std::uint64_t> distinct(ids.begin(), ids.end());
  CHECK(distinct.size() == 16);
  CHECK(*distinct.begin() == 0);
  CHECK(*distinct.rbegin() == 15);
}

TEST_CASE("no duplicates within a sequence") {
  for (std::uint8_t salt = 0; salt < 20; ++salt) {
    PlacementSeed seed = counting_seed();
    seed.seed[0] = salt;
    const auto ids = sensor_sequence(seed, 40, 64);
    std::set<std::uint64_t> distinct(ids.begin(), ids.end());
    CHECK(distinct.size() == ids.size());
  }
}

TEST_CASE("different seeds give different sequences") {
  PlacementSeed other = counting_seed();
  other.seed[31] ^= 0x80;
  CHECK(sensor_sequence(counting_seed(), 10, 100) != sensor_sequence(other, 10, 100));
}

TEST_CASE("count above the network size is rejected") {
  CHECK_THROWS_AS(sensor_sequence(counting_seed(), 11, 10), CountExceedsNetworkError);
  CHECK_THROWS_AS(sensor_sequence(counting_seed(), 1, 0), std::invalid_argument);
}

TEST_CASE("first draw is uniform across seeds: chi-square over 16 nodes") {
  std::vector<std::uint64_t> counts(16, 0);
  constexpr int kSeeds = 10'000;
  SeededRandomSource rng(0xadd7e55);
  for (int i = 0; i < kSeeds; ++i) {
    PlacementSeed seed;
    for (auto& b : seed.seed) b = static_cast<std::uint8_t>(rng.next_u64());
    ++counts[static_cast<std::size_t>(sensor_sequence(seed, 1, 16)[0])];
  }
  // df=15, alpha=0.001
  CHECK(test::chi_square_uniform(counts, kSeeds) < 37.697);
}
