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

#include "rootshare/codec.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace rootshare {

namespace {

constexpr std::uint8_t kShareMagic[4] = {'R', 'S', 'H', '1'};
constexpr std::uint8_t kKeyMagic[4] = {'R', 'S', 'K', '1'};
constexpr std::uint8_t kVersion = 1;

void put_u16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_u32(Bytes& out, std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

void put_u64(Bytes& out, std::uint64_t v) {
  for (int s = 56; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

void put_lpint(Bytes& out, const Int& v) {
  Bytes mag;
  if (v != 0) boost::multiprecision::export_bits(v, std::back_inserter(mag), 8);
  put_u32(out, static_cast<std::uint32_t>(mag.size()));
  out.insert(out.end(), mag.begin(), mag.end());
}

struct Reader {
  const Bytes& data;
  std::size_t pos = 0;

  const std::uint8_t* need(std::size_t n) {
    if (pos + n > data.size()) throw TruncatedFileError("file ends mid-field");
    const std::uint8_t* out = data.data() + pos;
    pos += n;
    return out;
  }

  std::uint8_t u8() { return *need(1); }

  std::uint16_t u16() {
    const std::uint8_t* b = need(2);
    return static_cast<std::uint16_t>(b[0] << 8 | b[1]);
  }

  std::uint32_t u32() {
    const std::uint8_t* b = need(4);
    return static_cast<std::uint32_t>(b[0]) << 24 | static_cast<std::uint32_t>(b[1]) << 16 |
           static_cast<std::uint32_t>(b[2]) << 8 | b[3];
  }

  std::uint64_t u64() {
    std::uint64_t v = 0;
    const std::uint8_t* b = need(8);
    for (int i = 0; i < 8; ++i) v = v << 8 | b[i];
    return v;
  }

  Int lpint() {
    std::uint32_t len = u32();
    if (len == 0) return 0;
    const std::uint8_t* b = need(len);
    if (b[0] == 0) throw FieldOutOfRangeError("non-minimal integer encoding");
    Int v;
    boost::multiprecision::import_bits(v, b, b + len, 8, true);
    return v;
  }
};

Int big_endian_value(const Bytes& bytes) {
  if (bytes.empty()) return 0;
  Int v;
  boost::multiprecision::import_bits(v, bytes.begin(), bytes.end(), 8, true);
  return v;
}

// value as a big-endian byte string left-padded to width; throws if it
// does not fit.
void append_fixed_width(Bytes& out, const Int& value, std::size_t width) {
  Bytes mag;
  if (value != 0) boost::multiprecision::export_bits(value, std::back_inserter(mag), 8);
  if (mag.size() > width) throw ChunkOutOfRangeError("chunk value exceeds its byte slot");
  out.insert(out.end(), width - mag.size(), 0);
  out.insert(out.end(), mag.begin(), mag.end());
}

}  // namespace

unsigned chunk_width(const Modulus& m) {
  const unsigned bits = boost::multiprecision::msb(m.value()) + 1;
  unsigned w = (bits - 1) / 8;
  while (w > 0 && (Int(1) << (8 * w)) >= m.value()) --w;
  return w;
}

ChunkedPayload chunk_bytes(const Bytes& data, const Modulus& m) {
  const unsigned w = chunk_width(m);
  if (w == 0)
    throw ModulusTooSmallError("modulus cannot hold a byte chunk; need value > 256");
  ChunkedPayload out{{}, data.size(), w, m};
  for (std::size_t off = 0; off < data.size(); off += w) {
    Bytes group(data.begin() + off,
                data.begin() + std::min(data.size(), off + w));
    group.resize(w, 0);  // zero-pad the final partial group
    out.chunks.emplace_back(FieldElement(big_endian_value(group) + 1, m));
  }
  return out;
}

ChunkedPayload chunk_single(const Bytes& data, const Modulus& m) {
  ChunkedPayload out{{}, data.size(), 0, m};
  if (data.empty()) return out;
  Int v = big_endian_value(data) + 1;
  if (v >= m.value())
    throw ModulusTooSmallError("input does not fit a single chunk under this modulus");
  out.chunks.emplace_back(FieldElement(std::move(v), m));
  return out;
}

Bytes unchunk(const ChunkedPayload& payload) {
  Bytes out;
  if (payload.chunk_bytes == 0) {
    if (payload.chunks.empty()) return out;
    if (payload.chunks.size() != 1)
      throw ChunkOutOfRangeError("single-chunk payload with multiple chunks");
    const Int& v = payload.chunks.front().value().value();
    if (v == 0) throw ChunkOutOfRangeError("zero chunk cannot occur");
    append_fixed_width(out, v - 1, payload.original_length);
    return out;
  }
  const unsigned w = payload.chunk_bytes;
  const Int max_chunk = Int(1) << (8 * w);
  out.reserve(payload.chunks.size() * w);
  for (const Datum& chunk : payload.chunks) {
    const Int& v = chunk.value().value();
    if (v == 0) throw ChunkOutOfRangeError("zero chunk cannot occur");
    if (v > max_chunk) throw ChunkOutOfRangeError("chunk value exceeds 2^(8m)");
    append_fixed_width(out, v - 1, w);
  }
  if (out.size() < payload.original_length)
    throw ChunkOutOfRangeError("chunk count too small for original length");
  out.resize(payload.original_length);
  return out;
}

namespace {

std::uint32_t expected_chunk_count(const Modulus& m, std::uint64_t original_length) {
  const unsigned w = chunk_width(m);
  if (w == 0) return original_length > 0 ? 1 : 0;
  return static_cast<std::uint32_t>((original_length + w - 1) / w);
}

void check_encodable(const ShareEnvelope& e) {
  if (e.k < 2 || e.k > 0xffff) throw std::invalid_argument("k out of range");
  if (e.n > 0xffff) throw std::invalid_argument("n out of range");
  if (e.share_index < 1 || e.share_index > 0xffff)
    throw std::invalid_argument("share index out of range");
  if (e.scheme == Scheme::redundant) {
    if (e.n < e.k) throw std::invalid_argument("redundant scheme needs n >= k");
    if (!e.values.empty()) throw std::invalid_argument("redundant envelope carries rows, not values");
    if (e.rows.size() != e.combined.size())
      throw std::invalid_argument("row/combined count mismatch");
    for (const auto& row : e.rows)
      if (row.size() != e.k) throw std::invalid_argument("row width != k");
  } else {
    if (e.n != 0) throw std::invalid_argument("n must be 0 unless redundant");
    if (e.share_index > e.k) throw std::invalid_argument("share index exceeds k");
    if (!e.rows.empty() || !e.combined.empty())
      throw std::invalid_argument("non-redundant envelope carries values, not rows");
  }
}

std::uint32_t envelope_chunk_count(const ShareEnvelope& e) {
  return static_cast<std::uint32_t>(
      e.scheme == Scheme::redundant ? e.combined.size() : e.values.size());
}

}  // namespace

Bytes encode_share_file(const ShareEnvelope& e) {
  check_encodable(e);
  Bytes out;
  out.insert(out.end(), std::begin(kShareMagic), std::end(kShareMagic));
  out.push_back(kVersion);
  out.push_back(static_cast<std::uint8_t>(e.scheme));
  put_lpint(out, e.modulus.value());
  put_u16(out, static_cast<std::uint16_t>(e.k));
  put_u16(out, static_cast<std::uint16_t>(e.n));
  out.insert(out.end(), e.group.bytes.begin(), e.group.bytes.end());
  put_u16(out, static_cast<std::uint16_t>(e.share_index));
  put_u32(out, envelope_chunk_count(e));
  put_u64(out, e.original_length);
  if (e.scheme == Scheme::redundant) {
    for (std::size_t c = 0; c < e.combined.size(); ++c) {
      for (const Int& entry : e.rows[c]) put_lpint(out, entry);
      put_lpint(out, e.combined[c]);
    }
  } else {
    for (const Int& v : e.values) put_lpint(out, v);
  }
  return out;
}

ShareEnvelope decode_share_file(const Bytes& bytes) {
  Reader r{bytes};
  const std::uint8_t* magic = r.need(4);
  if (!std::equal(magic, magic + 4, kShareMagic)) throw BadMagicError();
  const std::uint8_t version = r.u8();
  if (version != kVersion)
    throw BadVersionError("unsupported version " + std::to_string(version));
  const std::uint8_t scheme_byte = r.u8();
  if (scheme_byte < 1 || scheme_byte > 3)
    throw FieldOutOfRangeError("unknown scheme " + std::to_string(scheme_byte));
  const auto scheme = static_cast<Scheme>(scheme_byte);

  Int mod_value = r.lpint();
  if (mod_value < 3 || (mod_value & 1) == 0)
    throw FieldOutOfRangeError("modulus must be odd and >= 3");
  Modulus modulus = scheme == Scheme::composite ? Modulus::composite(mod_value)
                                                : Modulus::prime(mod_value);

  const std::uint16_t k = r.u16();
  const std::uint16_t n = r.u16();
  if (k < 2) throw FieldOutOfRangeError("k must be >= 2");
  if (scheme == Scheme::redundant) {
    if (n < k) throw FieldOutOfRangeError("redundant scheme needs n >= k");
  } else if (n != 0) {
    throw FieldOutOfRangeError("n must be 0 unless redundant");
  }

  GroupId group;
  const std::uint8_t* gb = r.need(16);
  std::copy(gb, gb + 16, group.bytes.begin());

  const std::uint16_t index = r.u16();
  if (index < 1 || (scheme != Scheme::redundant && index > k))
    throw FieldOutOfRangeError("share index out of range");

  const std::uint32_t chunk_count = r.u32();
  const std::uint64_t original_length = r.u64();
  if (chunk_count != expected_chunk_count(modulus, original_length))
    throw FieldOutOfRangeError("chunk count inconsistent with original length");

  ShareEnvelope e{scheme, modulus, k, n, group, index, original_length, {}, {}, {}};
  auto read_value = [&](bool allow_zero) {
    Int v = r.lpint();
    if (v >= modulus.value()) throw FieldOutOfRangeError("value not reduced mod modulus");
    if (!allow_zero && v == 0) throw FieldOutOfRangeError("share value must be nonzero");
    return v;
  };

  if (scheme == Scheme::redundant) {
    for (std::uint32_t c = 0; c < chunk_count; ++c) {
      std::vector<Int> row;
      row.reserve(k);
      bool all_zero = true;
      for (std::uint16_t j = 0; j < k; ++j) {
        row.push_back(read_value(true));
        if (row.back() != 0) all_zero = false;
      }
      if (all_zero) throw FieldOutOfRangeError("all-zero coefficient row");
      e.rows.push_back(std::move(row));
      e.combined.push_back(read_value(true));
    }
  } else {
    for (std::uint32_t c = 0; c < chunk_count; ++c) e.values.push_back(read_value(false));
  }
  if (r.pos != bytes.size()) throw FieldOutOfRangeError("trailing bytes after payload");
  return e;
}

Bytes encode_key_file(const CompositeKey& key) {
  Bytes out;
  out.insert(out.end(), std::begin(kKeyMagic), std::end(kKeyMagic));
  out.push_back(kVersion);
  put_lpint(out, key.p());
  put_lpint(out, key.q());
  put_lpint(out, key.y());
  return out;
}

CompositeKey decode_key_file(const Bytes& bytes) {
  Reader r{bytes};
  const std::uint8_t* magic = r.need(4);
  if (!std::equal(magic, magic + 4, kKeyMagic)) throw BadMagicError();
  const std::uint8_t version = r.u8();
  if (version != kVersion)
    throw BadVersionError("unsupported version " + std::to_string(version));
  Int p = r.lpint();
  Int q = r.lpint();
  Int y = r.lpint();
  if (r.pos != bytes.size()) throw FieldOutOfRangeError("trailing bytes after key");
  return CompositeKey::from_primes(std::move(p), std::move(q), std::move(y));
}

}  // namespace rootshare
