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

#include "rootshare/simnet.hpp"

#include <set>
#include <stdexcept>

namespace rootshare {

Network::Network(std::size_t size, PlacementSeed seed) : seed_(seed) {
  if (size == 0) throw std::invalid_argument("network needs at least one node");
  nodes_.resize(size);
  for (std::size_t i = 0; i < size; ++i) nodes_[i].id = i;
}

const SensorNode& Network::node(std::uint64_t id) const {
  if (id >= nodes_.size()) throw UnknownNodeError("no node " + std::to_string(id));
  return nodes_[id];
}

std::string Network::topology_hash() const {
  std::vector<std::uint8_t> preimage;
  preimage.reserve(7 + 8 + 32);
  for (char c : {'R', 'S', 'H', 'N', 'E', 'T', '1'})
    preimage.push_back(static_cast<std::uint8_t>(c));
  const auto n = static_cast<std::uint64_t>(nodes_.size());
  for (int s = 56; s >= 0; s -= 8) preimage.push_back(static_cast<std::uint8_t>(n >> s));
  preimage.insert(preimage.end(), seed_.seed.begin(), seed_.seed.end());
  const auto digest = sha256(preimage.data(), preimage.size());
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (std::uint8_t b : digest) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

std::vector<std::uint64_t> Network::scatter(const std::vector<ShareEnvelope>& envelopes,
                                            const PlacementSeed& seed) {
  const auto placement = sensor_sequence(seed, envelopes.size(), nodes_.size());
  for (std::size_t j = 0; j < envelopes.size(); ++j) {
    const ShareEnvelope& e = envelopes[j];
    nodes_[placement[j]].store.insert({{e.group, e.share_index}, e});
  }
  if (!envelopes.empty())
    stored_per_group_[envelopes.front().group] += envelopes.size();
  return placement;
}

void Network::fail_node(std::uint64_t id) {
  if (id >= nodes_.size()) throw UnknownNodeError("no node " + std::to_string(id));
  nodes_[id].status = NodeStatus::failed;
}

void Network::capture_node(std::uint64_t id) {
  if (id >= nodes_.size()) throw UnknownNodeError("no node " + std::to_string(id));
  SensorNode& node = nodes_[id];
  node.status = NodeStatus::captured;
  for (const auto& [key, envelope] : node.store) adversary_view_.insert({key, envelope});
}

std::vector<ShareEnvelope> Network::collect(const GroupId& group) const {
  std::vector<ShareEnvelope> out;
  for (const SensorNode& node : nodes_) {
    if (node.status != NodeStatus::up) continue;
    for (const auto& [key, envelope] : node.store)
      if (key.first == group) out.push_back(envelope);
  }
  return out;
}

Bytes Network::collect_and_reconstruct(const GroupId& group,
                                       const CompositeKey* key) const {
  std::vector<ShareEnvelope> shares = collect(group);
  if (shares.empty()) throw UnrecoverableError(0, 1);
  const std::uint32_t k = shares.front().k;
  std::set<std::uint32_t> distinct;
  for (const ShareEnvelope& e : shares) distinct.insert(e.share_index);
  if (distinct.size() < k) throw UnrecoverableError(distinct.size(), k);
  return join_shares(shares, key);
}

SimReport Network::adversary_report(const GroupId& group, const CompositeKey* key) const {
  SimReport report;
  auto stored = stored_per_group_.find(group);
  report.stored = stored == stored_per_group_.end() ? 0 : stored->second;

  std::set<std::uint32_t> available;
  std::optional<Scheme> scheme;
  std::uint32_t k = 0;
  for (const SensorNode& node : nodes_) {
    for (const auto& [store_key, envelope] : node.store) {
      if (store_key.first != group) continue;
      scheme = envelope.scheme;
      k = envelope.k;
      if (node.status == NodeStatus::up) available.insert(store_key.second);
    }
  }
  report.shares_available = available.size();
  report.shares_needed = k;

  std::set<std::uint32_t> captured;
  for (const auto& [store_key, envelope] : adversary_view_)
    if (store_key.first == group) captured.insert(store_key.second);
  report.adversary_shares = captured.size();

  if (scheme.has_value()) {
    const bool enough = report.adversary_shares >= k;
    report.adversary_learns_data =
        *scheme == Scheme::composite ? (enough && key_captured_) : enough;
    try {
      collect_and_reconstruct(group, key);
      report.retrievable = true;
    } catch (const Error&) {
      report.retrievable = false;
    }
  }
  return report;
}

std::vector<std::size_t> Network::share_counts() const {
  std::vector<std::size_t> out;
  out.reserve(nodes_.size());
  for (const SensorNode& node : nodes_) out.push_back(node.store.size());
  return out;
}

}  // namespace rootshare
