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
// File-level flows: byte stream -> chunked data -> per-chunk split ->
// one envelope per share index, and the reverse. Used by the CLI and the
// network simulator.

#ifndef ROOTSHARE_PIPELINE_HPP_
#define ROOTSHARE_PIPELINE_HPP_

#include <vector>

#include "rootshare/codec.hpp"

namespace rootshare {

// 2^255 - 19: large enough for 31-byte chunks, widely recognizable.
const Modulus& default_modulus();

struct SplitResult {
  GroupId group;
  std::vector<ShareEnvelope> envelopes;
};

// Splits data under modulus m into k root-share envelopes (all k required
// to join). Falls back to single-chunk mode when m cannot hold a byte.
// A caller-supplied group id overrides the rng-generated one.
SplitResult split_bytes_root_k(const Bytes& data, std::uint32_t k, const Modulus& m,
                               RandomSource& rng, const GroupId* forced_group = nullptr);

// Splits into n redundant envelopes with threshold k. One expansion matrix
// is sampled per group and shared by every chunk.
SplitResult split_bytes_redundant(const Bytes& data, std::uint32_t k, std::uint32_t n,
                                  MatrixMode mode, const Modulus& m, RandomSource& rng,
                                  const GroupId* forced_group = nullptr);

// Composite-modulus pipeline: every chunk is raised to the key's exponent
// before splitting, so the envelopes alone reveal at most the ciphertexts.
SplitResult split_bytes_composite(const Bytes& data, std::uint32_t k,
                                  const CompositeKey& key, RandomSource& rng,
                                  const GroupId* forced_group = nullptr);

// Reconstructs the original bytes from compatible envelopes; the scheme is
// read from the envelopes, never guessed. Composite envelopes additionally
// need the key. Throws UnrecoverableError (too few distinct shares),
// SingularSubsetError (random mode, every k-subset dependent), or
// KeyMismatchError.
Bytes join_shares(const std::vector<ShareEnvelope>& envelopes,
                  const CompositeKey* key = nullptr);

// What an adversary holding these composite envelopes (but no key) can
// compute: the per-chunk ciphertexts d^y mod n.
std::vector<Int> composite_ciphertexts(const std::vector<ShareEnvelope>& envelopes);

}  // namespace rootshare

#endif  // ROOTSHARE_PIPELINE_HPP_
