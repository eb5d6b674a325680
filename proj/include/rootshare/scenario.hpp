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
// Line-oriented scenario files driving the simulator:
//
//   N=<nodes> SEED=<hex, up to 64 chars>
//   STORE <root_k|redundant> <k> <n> <file>     (n is 0 for root_k)
//   FAIL <node-id>
//   CAPTURE <node-id>
//   COLLECT <store-ordinal>
//
// Blank lines and lines starting with '#' are ignored. STORE paths are
// resolved against the scenario file's directory. Group ids are derived
// from the seed and the store ordinal, so reruns are byte-identical.

#ifndef ROOTSHARE_SCENARIO_HPP_
#define ROOTSHARE_SCENARIO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rootshare/simnet.hpp"

namespace rootshare {

struct ScenarioEvent {
  enum class Kind { fail, capture, store, collect };
  Kind kind;
  std::uint64_t node_id = 0;           // fail/capture
  Scheme scheme = Scheme::root_k;      // store
  std::uint32_t k = 0;                 // store
  std::uint32_t n = 0;                 // store
  std::string file;                    // store
  std::size_t store_ordinal = 0;       // collect, 1-based
};

struct Scenario {
  std::size_t network_size = 0;
  PlacementSeed seed;
  std::vector<ScenarioEvent> events;
};

// Throws ScenarioParseError carrying the offending line number.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::filesystem::path& path);

struct ScenarioOutcome {
  std::vector<SimReport> reports;  // one per COLLECT, in order
  std::string rendered;            // key=value lines, golden-comparable
  bool all_retrievable = true;
};

// Runs the events in order on a fresh network. STORE splits the referenced
// file under the default modulus and scatters it with the scenario seed;
// COLLECT reconstructs and verifies the bytes against the stored original.
ScenarioOutcome run_scenario(const Scenario& scenario,
                             const std::filesystem::path& base_dir);

}  // namespace rootshare

#endif  // ROOTSHARE_SCENARIO_HPP_
