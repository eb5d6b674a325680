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
// Deterministic in-memory sensor-network model. Nodes store share
// envelopes; failure makes a node unreachable, capture hands its store to
// the adversary view (nothing is ever deleted). Single-threaded by
// contract: reproducibility over realism.

#ifndef ROOTSHARE_SIMNET_HPP_
#define ROOTSHARE_SIMNET_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootshare/addressing.hpp"
#include "rootshare/pipeline.hpp"

namespace rootshare {

enum class NodeStatus { up, failed, captured };

struct SensorNode {
  std::uint64_t id = 0;
  NodeStatus status = NodeStatus::up;
  std::map<std::pair<GroupId, std::uint32_t>, ShareEnvelope> store;
};

struct SimReport {
  std::size_t stored = 0;
  bool retrievable = false;
  std::size_t shares_available = 0;
  std::size_t shares_needed = 0;
  std::size_t adversary_shares = 0;
  bool adversary_learns_data = false;
};

class Network {
 public:
  // size >= 1 up-nodes; the seed determines the default placement and the
  // topology hash.
  Network(std::size_t size, PlacementSeed seed);

  std::size_t size() const { return nodes_.size(); }
  const SensorNode& node(std::uint64_t id) const;
  const PlacementSeed& seed() const { return seed_; }
  std::string topology_hash() const;

  // Stores envelope j on sensor_sequence(seed, count, N)[j]; returns that
  // placement. Throws CountExceedsNetworkError.
  std::vector<std::uint64_t> scatter(const std::vector<ShareEnvelope>& envelopes,
                                     const PlacementSeed& seed);

  void fail_node(std::uint64_t id);
  // Copies the node's store (even of an already-failed node) into the
  // adversary view; the node keeps its data.
  void capture_node(std::uint64_t id);

  // Composite groups stay opaque to the adversary until the key is lost too.
  void set_key_captured(bool captured) { key_captured_ = captured; }
  bool key_captured() const { return key_captured_; }

  // Shares of the group reachable on up-nodes. Captured nodes are treated
  // as hostile and never consulted by the legitimate collector.
  std::vector<ShareEnvelope> collect(const GroupId& group) const;

  // collect + join; throws UnrecoverableError when too few shares survive.
  Bytes collect_and_reconstruct(const GroupId& group,
                                const CompositeKey* key = nullptr) const;

  // Counts, retrievability, and the adversary's position for one group.
  SimReport adversary_report(const GroupId& group,
                             const CompositeKey* key = nullptr) const;

  // Envelopes stored per node, for placement diagnostics.
  std::vector<std::size_t> share_counts() const;

 private:
  std::vector<SensorNode> nodes_;
  PlacementSeed seed_;
  std::map<std::pair<GroupId, std::uint32_t>, ShareEnvelope> adversary_view_;
  std::map<GroupId, std::size_t> stored_per_group_;
  bool key_captured_ = false;
};

}  // namespace rootshare

#endif  // ROOTSHARE_SIMNET_HPP_
