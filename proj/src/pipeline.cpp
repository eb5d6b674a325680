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

#include "rootshare/pipeline.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rootshare {

const Modulus& default_modulus() {
  static const Modulus m = Modulus::prime((Int(1) << 255) - 19);
  return m;
}

namespace {

ChunkedPayload chunk_auto(const Bytes& data, const Modulus& m) {
  return chunk_width(m) > 0 ? chunk_bytes(data, m) : chunk_single(data, m);
}

GroupId pick_group(const GroupId* forced, RandomSource& rng) {
  return forced != nullptr ? *forced : GroupId::random(rng);
}

std::vector<std::vector<FieldElement>> split_chunks(const ChunkedPayload& payload,
                                                    std::uint32_t k, RandomSource& rng) {
  std::vector<std::vector<FieldElement>> roots_per_chunk;
  roots_per_chunk.reserve(payload.chunks.size());
  for (const Datum& chunk : payload.chunks) {
    std::vector<RootShare> shares = split_k(chunk, k, rng);
    std::vector<FieldElement> roots;
    roots.reserve(k);
    for (RootShare& s : shares) roots.push_back(std::move(s.value));
    roots_per_chunk.push_back(std::move(roots));
  }
  return roots_per_chunk;
}

}  // namespace

SplitResult split_bytes_root_k(const Bytes& data, std::uint32_t k, const Modulus& m,
                               RandomSource& rng, const GroupId* forced_group) {
  if (m.kind() != ModulusKind::prime)
    throw std::invalid_argument("root_k split requires a prime modulus");
  if (k < 2 || Int(k) >= m.value()) throw InvalidKError("k must satisfy 2 <= k < p");
  const ChunkedPayload payload = chunk_auto(data, m);
  const GroupId group = pick_group(forced_group, rng);
  const auto roots_per_chunk = split_chunks(payload, k, rng);

  SplitResult out{group, {}};
  out.envelopes.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    ShareEnvelope e{Scheme::root_k, m, k, 0, group, i + 1, payload.original_length,
                    {},            {}, {}};
    e.values.reserve(roots_per_chunk.size());
    for (const auto& roots : roots_per_chunk) e.values.push_back(roots[i].value());
    out.envelopes.push_back(std::move(e));
  }
  return out;
}

SplitResult split_bytes_redundant(const Bytes& data, std::uint32_t k, std::uint32_t n,
                                  MatrixMode mode, const Modulus& m, RandomSource& rng,
                                  const GroupId* forced_group) {
  if (m.kind() != ModulusKind::prime)
    throw std::invalid_argument("redundant split requires a prime modulus");
  if (k < 2 || Int(k) >= m.value()) throw InvalidKError("k must satisfy 2 <= k < p");
  if (n < k) throw std::invalid_argument("n must be >= k");
  const ChunkedPayload payload = chunk_auto(data, m);
  const GroupId group = pick_group(forced_group, rng);
  const ExpansionMatrix matrix = make_expansion_matrix(n, k, mode, m, rng);
  const auto roots_per_chunk = split_chunks(payload, k, rng);

  SplitResult out{group, {}};
  out.envelopes.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    ShareEnvelope e{Scheme::redundant, m,  k, n, group, i + 1, payload.original_length,
                    {},                {}, {}};
    e.rows.reserve(roots_per_chunk.size());
    e.combined.reserve(roots_per_chunk.size());
    std::vector<Int> row;
    row.reserve(k);
    for (const FieldElement& entry : matrix.entries[i]) row.push_back(entry.value());
    for (const auto& roots : roots_per_chunk) {
      FieldElement c(0, m);
      for (std::uint32_t j = 0; j < k; ++j) c = c + matrix.entries[i][j] * roots[j];
      e.rows.push_back(row);
      e.combined.push_back(c.value());
    }
    out.envelopes.push_back(std::move(e));
  }
  return out;
}

SplitResult split_bytes_composite(const Bytes& data, std::uint32_t k,
                                  const CompositeKey& key, RandomSource& rng,
                                  const GroupId* forced_group) {
  const Modulus m = key.modulus();
  const ChunkedPayload payload = chunk_auto(data, m);
  const GroupId group = pick_group(forced_group, rng);

  std::vector<std::vector<FieldElement>> roots_per_chunk;
  roots_per_chunk.reserve(payload.chunks.size());
  for (const Datum& chunk : payload.chunks) {
    std::vector<CompositeShare> shares = split_composite(chunk.value().value(), k, key, rng);
    std::vector<FieldElement> roots;
    roots.reserve(k);
    for (CompositeShare& s : shares) roots.push_back(std::move(s.value));
    roots_per_chunk.push_back(std::move(roots));
  }

  SplitResult out{group, {}};
  out.envelopes.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    ShareEnvelope e{Scheme::composite, m,  k, 0, group, i + 1, payload.original_length,
                    {},                {}, {}};
    e.values.reserve(roots_per_chunk.size());
    for (const auto& roots : roots_per_chunk) e.values.push_back(roots[i].value());
    out.envelopes.push_back(std::move(e));
  }
  return out;
}

namespace {

// Envelopes must agree on everything but the share index; duplicates of the
// same index are dropped.
std::vector<const ShareEnvelope*> validate_and_dedupe(
    const std::vector<ShareEnvelope>& envelopes) {
  if (envelopes.empty()) throw WrongShareCountError("no shares given");
  const ShareEnvelope& first = envelopes.front();
  std::map<std::uint32_t, const ShareEnvelope*> by_index;
  for (const ShareEnvelope& e : envelopes) {
    if (e.group != first.group) throw MixedGroupsError();
    if (e.scheme != first.scheme || e.k != first.k || e.n != first.n)
      throw MixedGroupsError();
    if (e.modulus != first.modulus) throw ModulusMismatchError();
    if (e.original_length != first.original_length ||
        e.values.size() != first.values.size() ||
        e.combined.size() != first.combined.size())
      throw MixedGroupsError();
    by_index.emplace(e.share_index, &e);
  }
  std::vector<const ShareEnvelope*> out;
  out.reserve(by_index.size());
  for (const auto& [idx, e] : by_index) out.push_back(e);
  return out;
}

Bytes bytes_from_chunks(std::vector<Datum> chunks, std::uint64_t original_length,
                        const Modulus& m) {
  return unchunk(ChunkedPayload{std::move(chunks), original_length, chunk_width(m), m});
}

Bytes join_root_k(const std::vector<const ShareEnvelope*>& shares) {
  const ShareEnvelope& first = *shares.front();
  const std::uint32_t k = first.k;
  if (shares.size() < k) throw UnrecoverableError(shares.size(), k);
  const std::size_t chunk_count = first.values.size();
  std::vector<Datum> chunks;
  chunks.reserve(chunk_count);
  for (std::size_t c = 0; c < chunk_count; ++c) {
    std::vector<RootShare> group_shares;
    group_shares.reserve(k);
    for (const ShareEnvelope* e : shares)
      group_shares.push_back(
          RootShare{e->group, e->share_index, k, FieldElement(e->values[c], e->modulus)});
    chunks.push_back(combine_k(group_shares));
  }
  return bytes_from_chunks(std::move(chunks), first.original_length, first.modulus);
}

Bytes join_composite(const std::vector<const ShareEnvelope*>& shares,
                     const CompositeKey& key) {
  const ShareEnvelope& first = *shares.front();
  const std::uint32_t k = first.k;
  if (shares.size() < k) throw UnrecoverableError(shares.size(), k);
  if (key.n() != first.modulus.value()) throw KeyMismatchError();
  const std::size_t chunk_count = first.values.size();
  std::vector<Datum> chunks;
  chunks.reserve(chunk_count);
  for (std::size_t c = 0; c < chunk_count; ++c) {
    std::vector<CompositeShare> group_shares;
    group_shares.reserve(k);
    for (const ShareEnvelope* e : shares)
      group_shares.push_back(CompositeShare{e->group, e->share_index, k,
                                            FieldElement(e->values[c], e->modulus)});
    chunks.emplace_back(FieldElement(recover_composite(group_shares, key), first.modulus));
  }
  return bytes_from_chunks(std::move(chunks), first.original_length, first.modulus);
}

Bytes join_redundant(const std::vector<const ShareEnvelope*>& shares) {
  const ShareEnvelope& first = *shares.front();
  const std::uint32_t k = first.k;
  if (shares.size() < k) throw UnrecoverableError(shares.size(), k);
  const std::size_t chunk_count = first.combined.size();

  // Try k-subsets in lexicographic order; only random-mode groups can force
  // more than one attempt.
  std::vector<std::size_t> pick(k);
  for (std::uint32_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    try {
      std::vector<Datum> chunks;
      chunks.reserve(chunk_count);
      for (std::size_t c = 0; c < chunk_count; ++c) {
        std::vector<RedundantShare> subset;
        subset.reserve(k);
        for (std::size_t s : pick) {
          const ShareEnvelope* e = shares[s];
          std::vector<FieldElement> row;
          row.reserve(k);
          for (const Int& v : e->rows[c]) row.push_back(FieldElement(v, e->modulus));
          subset.push_back(RedundantShare{e->group, e->share_index, k, std::move(row),
                                          FieldElement(e->combined[c], e->modulus)});
        }
        chunks.push_back(combine_k(reconstruct_roots(subset)));
      }
      return bytes_from_chunks(std::move(chunks), first.original_length, first.modulus);
    } catch (const SingularSubsetError&) {
      // advance the combination odometer
      bool advanced = false;
      for (std::size_t i = k; i-- > 0;) {
        if (pick[i] < shares.size() - (k - i)) {
          ++pick[i];
          for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) throw;  // every subset exhausted
    }
  }
}

}  // namespace

Bytes join_shares(const std::vector<ShareEnvelope>& envelopes, const CompositeKey* key) {
  const auto shares = validate_and_dedupe(envelopes);
  switch (envelopes.front().scheme) {
    case Scheme::root_k:
      return join_root_k(shares);
    case Scheme::redundant:
      return join_redundant(shares);
    case Scheme::composite:
      if (key == nullptr)
        throw UnrecoverableError(shares.size(), envelopes.front().k);
      return join_composite(shares, *key);
  }
  throw Error("unreachable scheme");
}

std::vector<Int> composite_ciphertexts(const std::vector<ShareEnvelope>& envelopes) {
  const auto shares = validate_and_dedupe(envelopes);
  const ShareEnvelope& first = *shares.front();
  if (first.scheme != Scheme::composite)
    throw std::invalid_argument("expected composite envelopes");
  const std::uint32_t k = first.k;
  if (shares.size() < k) throw UnrecoverableError(shares.size(), k);
  std::vector<Int> out;
  out.reserve(first.values.size());
  for (std::size_t c = 0; c < first.values.size(); ++c) {
    std::vector<CompositeShare> group_shares;
    group_shares.reserve(k);
    for (const ShareEnvelope* e : shares)
      group_shares.push_back(CompositeShare{e->group, e->share_index, k,
                                            FieldElement(e->values[c], e->modulus)});
    out.push_back(combine_to_ciphertext(group_shares));
  }
  return out;
}

}  // namespace rootshare
