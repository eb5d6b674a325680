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
// Byte <-> field-element conversion and the bit-exact share-file format.
//
// Share file layout (all integers big-endian; "lpint" is a 4-byte length
// followed by that many magnitude bytes, minimal, no leading zero):
//
//   offset  size  field
//   0       4     magic "RSH1"
//   4       1     version (1)
//   5       1     scheme: 1=root_k, 2=redundant, 3=composite
//   6       4+L   modulus (lpint)
//   ...     2     k
//   ...     2     n (0 unless scheme=redundant)
//   ...     16    group id
//   ...     2     share index
//   ...     4     chunk count
//   ...     8     original length in bytes
//   ...     ...   payload, per chunk:
//                   root_k/composite: share value (lpint)
//                   redundant: k row entries then the combined value (lpints)
//
// Key file layout: magic "RSK1", version byte (1), then p, q, y as lpints;
// everything else is re-derived on load.

#ifndef ROOTSHARE_CODEC_HPP_
#define ROOTSHARE_CODEC_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "rootshare/composite.hpp"
#include "rootshare/partition.hpp"
#include "rootshare/redundancy.hpp"

namespace rootshare {

using Bytes = std::vector<std::uint8_t>;

enum class Scheme : std::uint8_t {
  root_k = 1,
  redundant = 2,
  composite = 3,
};

// Bytes per chunk for a modulus: the largest m with 2^(8m) < value, so the
// offset-encoded chunk (v+1 <= 2^(8m)) always fits the field. Zero means the
// modulus cannot hold a full byte.
unsigned chunk_width(const Modulus& m);

// A byte stream mapped into field elements. chunk_bytes = 0 marks
// single-chunk mode, where the whole stream is one big-endian integer.
struct ChunkedPayload {
  std::vector<Datum> chunks;
  std::uint64_t original_length = 0;
  unsigned chunk_bytes = 0;
  Modulus modulus;
};

// Splits data into chunk_width(m)-byte big-endian groups, offset-encoding
// each value v as v+1 so no chunk is ever zero. The final partial group is
// zero-padded; original_length records the true size. Throws
// ModulusTooSmallError when chunk_width(m) == 0.
ChunkedPayload chunk_bytes(const Bytes& data, const Modulus& m);

// Whole-stream fallback for tiny demo moduli (chunk_width 0): the entire
// input becomes one offset-encoded integer, which must stay below m.
ChunkedPayload chunk_single(const Bytes& data, const Modulus& m);

// Exact inverse of chunk_bytes/chunk_single, truncated to original_length.
// Throws ChunkOutOfRangeError on a zero chunk or one too large for its slot.
Bytes unchunk(const ChunkedPayload& payload);

// In-memory form of one share file.
struct ShareEnvelope {
  Scheme scheme = Scheme::root_k;
  Modulus modulus;
  std::uint32_t k = 0;
  std::uint32_t n = 0;  // 0 unless redundant
  GroupId group;
  std::uint32_t share_index = 0;
  std::uint64_t original_length = 0;
  // root_k/composite: one value per chunk.
  std::vector<Int> values;
  // redundant only: one row per chunk plus the combined value per chunk.
  std::vector<std::vector<Int>> rows;
  std::vector<Int> combined;

  friend bool operator==(const ShareEnvelope&, const ShareEnvelope&) = default;
};

Bytes encode_share_file(const ShareEnvelope& envelope);

// Validates every field: magic, version, scheme, modulus (including the
// primality the scheme implies), ranges of k/index/values. Throws
// BadMagicError, BadVersionError, TruncatedFileError, FieldOutOfRangeError.
ShareEnvelope decode_share_file(const Bytes& bytes);

Bytes encode_key_file(const CompositeKey& key);
CompositeKey decode_key_file(const Bytes& bytes);

}  // namespace rootshare

#endif  // ROOTSHARE_CODEC_HPP_
