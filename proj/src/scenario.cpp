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

#include "rootshare/scenario.hpp"

#include <fstream>
#include <sstream>

namespace rootshare {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> fields;
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

std::uint64_t parse_uint(const std::string& s, std::size_t line_no, const char* what) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ScenarioParseError(line_no, std::string("bad ") + what + " '" + s + "'");
  }
}

Bytes read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return data;
}

GroupId scenario_group_id(const PlacementSeed& seed, std::uint64_t ordinal) {
  std::vector<std::uint8_t> preimage(seed.seed.begin(), seed.seed.end());
  for (char c : {'R', 'S', 'H', 'G', 'R', 'P'})
    preimage.push_back(static_cast<std::uint8_t>(c));
  for (int s = 56; s >= 0; s -= 8)
    preimage.push_back(static_cast<std::uint8_t>(ordinal >> s));
  const auto digest = sha256(preimage.data(), preimage.size());
  GroupId id;
  std::copy(digest.begin(), digest.begin() + 16, id.bytes.begin());
  return id;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Scenario out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t stores = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;

    if (!header_seen) {
      if (fields.size() != 2 || fields[0].rfind("N=", 0) != 0 ||
          fields[1].rfind("SEED=", 0) != 0)
        throw ScenarioParseError(line_no, "expected header 'N=<int> SEED=<hex>'");
      out.network_size = parse_uint(fields[0].substr(2), line_no, "node count");
      if (out.network_size == 0) throw ScenarioParseError(line_no, "N must be >= 1");
      try {
        out.seed = PlacementSeed::from_hex(fields[1].substr(5));
      } catch (const std::exception& e) {
        throw ScenarioParseError(line_no, e.what());
      }
      header_seen = true;
      continue;
    }

    const std::string& op = fields[0];
    if (op == "FAIL" || op == "CAPTURE") {
      if (fields.size() != 2) throw ScenarioParseError(line_no, op + " takes one node id");
      const std::uint64_t id = parse_uint(fields[1], line_no, "node id");
      if (id >= out.network_size)
        throw ScenarioParseError(line_no, "node id " + fields[1] + " out of range");
      out.events.push_back(
          {op == "FAIL" ? ScenarioEvent::Kind::fail : ScenarioEvent::Kind::capture, id});
    } else if (op == "STORE") {
      if (fields.size() != 5)
        throw ScenarioParseError(line_no, "STORE takes <scheme> <k> <n> <file>");
      ScenarioEvent ev{ScenarioEvent::Kind::store};
      if (fields[1] == "root_k") {
        ev.scheme = Scheme::root_k;
      } else if (fields[1] == "redundant") {
        ev.scheme = Scheme::redundant;
      } else {
        throw ScenarioParseError(line_no, "unknown scheme '" + fields[1] + "'");
      }
      ev.k = static_cast<std::uint32_t>(parse_uint(fields[2], line_no, "k"));
      ev.n = static_cast<std::uint32_t>(parse_uint(fields[3], line_no, "n"));
      if (ev.k < 2) throw ScenarioParseError(line_no, "k must be >= 2");
      if (ev.scheme == Scheme::root_k && ev.n != 0)
        throw ScenarioParseError(line_no, "root_k scheme requires n=0");
      if (ev.scheme == Scheme::redundant && ev.n < ev.k)
        throw ScenarioParseError(line_no, "redundant scheme requires n >= k");
      ev.file = fields[4];
      out.events.push_back(std::move(ev));
      ++stores;
    } else if (op == "COLLECT") {
      if (fields.size() != 2)
        throw ScenarioParseError(line_no, "COLLECT takes a store ordinal");
      ScenarioEvent ev{ScenarioEvent::Kind::collect};
      ev.store_ordinal = parse_uint(fields[1], line_no, "store ordinal");
      if (ev.store_ordinal < 1 || ev.store_ordinal > stores)
        throw ScenarioParseError(line_no, "COLLECT references store " + fields[1] +
                                              " but only " + std::to_string(stores) +
                                              " STORE events precede it");
      out.events.push_back(std::move(ev));
    } else {
      throw ScenarioParseError(line_no, "unknown event '" + op + "'");
    }
  }
  if (!header_seen) throw ScenarioParseError(line_no, "missing header line");
  return out;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

ScenarioOutcome run_scenario(const Scenario& scenario,
                             const std::filesystem::path& base_dir) {
  Network net(scenario.network_size, scenario.seed);
  std::uint64_t rng_seed = 0;
  for (int i = 0; i < 8; ++i) rng_seed = rng_seed << 8 | scenario.seed.seed[i];
  SeededRandomSource rng(rng_seed);

  struct StoredGroup {
    GroupId group;
    Bytes original;
  };
  std::vector<StoredGroup> stored;
  ScenarioOutcome out;
  std::ostringstream rendered;

  for (const ScenarioEvent& ev : scenario.events) {
    switch (ev.kind) {
      case ScenarioEvent::Kind::fail:
        net.fail_node(ev.node_id);
        break;
      case ScenarioEvent::Kind::capture:
        net.capture_node(ev.node_id);
        break;
      case ScenarioEvent::Kind::store: {
        const Bytes data = read_file_bytes(base_dir / ev.file);
        const GroupId group = scenario_group_id(scenario.seed, stored.size() + 1);
        SplitResult split =
            ev.scheme == Scheme::root_k
                ? split_bytes_root_k(data, ev.k, default_modulus(), rng, &group)
                : split_bytes_redundant(data, ev.k, ev.n, MatrixMode::structured,
                                        default_modulus(), rng, &group);
        net.scatter(split.envelopes, scenario.seed);
        stored.push_back({group, data});
        break;
      }
      case ScenarioEvent::Kind::collect: {
        const StoredGroup& target = stored[ev.store_ordinal - 1];
        SimReport report = net.adversary_report(target.group);
        if (report.retrievable) {
          // adversary_report already proved reconstruction succeeds; also
          // insist the bytes match what was stored.
          report.retrievable =
              net.collect_and_reconstruct(target.group) == target.original;
        }
        if (!out.reports.empty()) rendered << "\n";
        rendered << "group=" << target.group.hex() << "\n"
                 << "stored=" << report.stored << "\n"
                 << "retrievable=" << (report.retrievable ? "true" : "false") << "\n"
                 << "shares_available=" << report.shares_available << "\n"
                 << "shares_needed=" << report.shares_needed << "\n"
                 << "adversary_shares=" << report.adversary_shares << "\n"
                 << "adversary_learns_data="
                 << (report.adversary_learns_data ? "true" : "false") << "\n";
        out.all_retrievable = out.all_retrievable && report.retrievable;
        out.reports.push_back(report);
        break;
      }
    }
  }
  out.rendered = rendered.str();
  return out;
}

}  // namespace rootshare
