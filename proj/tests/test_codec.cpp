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

#include <fstream>

#include "rootshare/codec.hpp"
#include "rootshare/pipeline.hpp"
#include "support.hpp"

using namespace rootshare;

namespace {

Bytes read_golden(const char* name) {
  std::ifstream in(std::string(ROOTSHARE_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

Bytes random_blob(std::size_t len, RandomSource& rng) {
  Bytes out(len);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng.next_u64());
  return out;
}

ShareEnvelope golden_envelope() {
  GroupId group;
  for (std::size_t i = 0; i < 16; ++i) group.bytes[i] = static_cast<std::uint8_t>(i);
  return ShareEnvelope{Scheme::root_k, Modulus::prime(31), 3, 0, group, 1, 1,
                       {Int(19)},      {},                 {}};
}

}  // namespace

TEST_CASE("chunk width per modulus") {
  CHECK(chunk_width(Modulus::prime(31)) == 0);
  CHECK(chunk_width(Modulus::prime(257)) == 1);
  CHECK(chunk_width(Modulus::prime(65537)) == 2);
  CHECK(chunk_width(default_modulus()) == 31);
}

TEST_CASE("chunking basics") {
  const Modulus p257 = Modulus::prime(257);

  SUBCASE("empty input") {
    const auto payload = chunk_bytes({}, p257);
    CHECK(payload.chunks.empty());
    CHECK(payload.original_length == 0);
    CHECK(unchunk(payload).empty());
  }
  SUBCASE("offset encoding of a zero byte") {
    const auto payload = chunk_bytes({0x00}, p257);
    REQUIRE(payload.chunks.size() == 1);
    CHECK(payload.chunks[0].value().value() == 1);
    CHECK(unchunk(payload) == Bytes{0x00});
  }
  SUBCASE("max chunk maps back to 0xff bytes") {
    const ChunkedPayload payload{{Datum(FieldElement(256, p257))}, 1, 1, p257};
    CHECK(unchunk(payload) == Bytes{0xff});
  }
  SUBCASE("tiny moduli cannot chunk") {
    CHECK_THROWS_AS(chunk_bytes({0x01}, Modulus::prime(31)), ModulusTooSmallError);
  }
}

TEST_CASE("chunk/unchunk round trip on random blobs") {
  SeededRandomSource rng(0xc0dec);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto len = static_cast<std::size_t>(sample_uniform(0, 4096, rng));
    const Bytes data = random_blob(len, rng);
    CHECK(unchunk(chunk_bytes(data, default_modulus())) == data);
  }
}

TEST_CASE("zero chunks are impossible and rejected") {
  const Modulus p257 = Modulus::prime(257);
  SeededRandomSource rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    const Bytes data = random_blob(1 + trial % 64, rng);
    for (const Datum& c : chunk_bytes(data, p257).chunks)
      CHECK(c.value().value() != 0);
  }
  // a forged zero chunk cannot round-trip (Datum cannot even hold it)
  CHECK_THROWS_AS(Datum(FieldElement(0, p257)), ZeroDatumError);
}

TEST_CASE("single-chunk mode for demo moduli") {
  const Modulus p31 = Modulus::prime(31);
  SUBCASE("one byte") {
    const auto payload = chunk_single({0x09}, p31);
    REQUIRE(payload.chunks.size() == 1);
    CHECK(payload.chunks[0].value().value() == 10);
    CHECK(unchunk(payload) == Bytes{0x09});
  }
  SUBCASE("empty") {
    const auto payload = chunk_single({}, p31);
    CHECK(payload.chunks.empty());
    CHECK(unchunk(payload).empty());
  }
  SUBCASE("all-zero input survives length restoration") {
    const Modulus p257 = Modulus::prime(257);
    Bytes zeros{0x00};
    const auto payload = chunk_single(zeros, p257);
    CHECK(unchunk(payload) == zeros);
  }
  SUBCASE("oversized input is rejected") {
    CHECK_THROWS_AS(chunk_single({0x1e}, p31), ModulusTooSmallError);  // 30+1 = p
    CHECK_THROWS_AS(chunk_single({0xff, 0xff}, p31), ModulusTooSmallError);
  }
}

TEST_CASE("golden envelope encodes and decodes byte-exactly") {
  const ShareEnvelope envelope = golden_envelope();
  const Bytes encoded = encode_share_file(envelope);
  const Bytes golden = read_golden("root_k_p31.rsh");
  CHECK(encoded == golden);
  CHECK(decode_share_file(golden) == envelope);
}

TEST_CASE("decode validates the header") {
  const Bytes good = encode_share_file(golden_envelope());

  SUBCASE("magic") {
    Bytes bad = good;
    bad[0] ^= 0xff;
    CHECK_THROWS_AS(decode_share_file(bad), BadMagicError);
  }
  SUBCASE("version") {
    Bytes bad = good;
    bad[4] = 9;
    CHECK_THROWS_AS(decode_share_file(bad), BadVersionError);
  }
  SUBCASE("scheme") {
    Bytes bad = good;
    bad[5] = 7;
    CHECK_THROWS_AS(decode_share_file(bad), FieldOutOfRangeError);
  }
  SUBCASE("truncation, at every length") {
    for (std::size_t len = 0; len < good.size(); ++len) {
      const Bytes bad(good.begin(), good.begin() + len);
      CHECK_THROWS_AS(decode_share_file(bad), TruncatedFileError);
    }
  }
  SUBCASE("trailing bytes") {
    Bytes bad = good;
    bad.push_back(0);
    CHECK_THROWS_AS(decode_share_file(bad), FieldOutOfRangeError);
  }
  SUBCASE("k below 2") {
    Bytes bad = good;
    bad[12] = 1;  // k low byte
    CHECK_THROWS_AS(decode_share_file(bad), FieldOutOfRangeError);
  }
  SUBCASE("chunk count inconsistent with length") {
    Bytes bad = good;
    bad[36] = 2;  // chunk_count low byte
    CHECK_THROWS_AS(decode_share_file(bad), FieldOutOfRangeError);
  }
  SUBCASE("share value not below the modulus") {
    Bytes bad = good;
    bad[49] = 31;  // value byte: 19 -> 31 = p
    CHECK_THROWS_AS(decode_share_file(bad), FieldOutOfRangeError);
  }
  SUBCASE("share index above k") {
    Bytes bad = good;
    bad[32] = 4;  // index low byte
    CHECK_THROWS_AS(decode_share_file(bad), FieldOutOfRangeError);
  }
}

TEST_CASE("envelope round trip across schemes") {
  SeededRandomSource rng(7);
  const Bytes data = random_blob(200, rng);

  SUBCASE("root_k") {
    const auto split = split_bytes_root_k(data, 3, Modulus::prime(65537), rng);
    for (const ShareEnvelope& e : split.envelopes)
      CHECK(decode_share_file(encode_share_file(e)) == e);
  }
  SUBCASE("redundant") {
    const auto split = split_bytes_redundant(data, 2, 4, MatrixMode::structured,
                                             Modulus::prime(65537), rng);
    for (const ShareEnvelope& e : split.envelopes)
      CHECK(decode_share_file(encode_share_file(e)) == e);
  }
  SUBCASE("composite") {
    const CompositeKey key = keygen(64, 3, rng);
    const auto split = split_bytes_composite(data, 2, key, rng);
    for (const ShareEnvelope& e : split.envelopes)
      CHECK(decode_share_file(encode_share_file(e)) == e);
  }
}

TEST_CASE("key files round trip and validate") {
  const CompositeKey key = CompositeKey::from_primes(5, 11, 3);
  const Bytes encoded = encode_key_file(key);
  const CompositeKey back = decode_key_file(encoded);
  CHECK(back.n() == 55);
  CHECK(back.y_inv() == 7);

  SUBCASE("magic") {
    Bytes bad = encoded;
    bad[0] ^= 0xff;
    CHECK_THROWS_AS(decode_key_file(bad), BadMagicError);
  }
  SUBCASE("tampered exponent") {
    Bytes bad = encoded;
    bad.back() = 4;  // y: 3 -> 4, even
    CHECK_THROWS_AS(decode_key_file(bad), BadExponentError);
  }
  SUBCASE("tampered prime") {
    Bytes bad = encoded;
    bad[9] = 9;  // p: 5 -> 9, not prime
    CHECK_THROWS_AS(decode_key_file(bad), std::invalid_argument);
  }
}
