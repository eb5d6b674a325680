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
// Command-line front door. Exit codes: 0 success, 1 operational failure,
// 2 usage error, 3 data unrecoverable.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rootshare/pipeline.hpp"
#include "rootshare/scenario.hpp"

namespace fs = std::filesystem;
using namespace rootshare;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnrecoverable = 3;

Bytes read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_file(const fs::path& path, const Bytes& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw Error("write failed for " + path.string());
}

Int parse_int_arg(const std::string& text) {
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0)
    return Int("0x" + text.substr(2));
  return Int(text);
}

struct SplitOptions {
  std::string input;
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  std::string mode = "structured";
  bool composite = false;
  std::string key_path;
  std::string out_dir = ".";
  std::string prime_hex;
  std::optional<std::uint64_t> seed;
};

struct JoinOptions {
  std::vector<std::string> shares;
  std::string out_path;
  std::string key_path;
};

struct KeygenOptions {
  unsigned bits = 2048;
  std::string y = "65537";
  std::string out_path = "rootshare.rsk";
  std::optional<std::uint64_t> seed;
};

struct BoundOptions {
  std::string p;
  std::uint32_t k = 0;
};

SeededRandomSource make_rng(const std::optional<std::uint64_t>& seed) {
  return SeededRandomSource(seed.has_value() ? *seed : entropy_seed());
}

int cmd_split(const SplitOptions& opt) {
  if (opt.k < 2) {
    std::cerr << "usage error: k must be >= 2\n";
    return kExitUsage;
  }
  if (opt.n != 0 && opt.n < opt.k) {
    std::cerr << "usage error: n must be >= k\n";
    return kExitUsage;
  }
  if (opt.composite && opt.key_path.empty()) {
    std::cerr << "usage error: --composite requires --key\n";
    return kExitUsage;
  }
  if (opt.composite && (opt.n != 0 || !opt.prime_hex.empty())) {
    std::cerr << "usage error: --composite excludes -n and --prime-hex\n";
    return kExitUsage;
  }

  std::optional<Modulus> modulus;
  if (!opt.composite) {
    if (opt.prime_hex.empty()) {
      modulus = default_modulus();
    } else {
      try {
        modulus = Modulus::prime(parse_int_arg(
            opt.prime_hex.rfind("0x", 0) == 0 ? opt.prime_hex : "0x" + opt.prime_hex));
      } catch (const std::exception& e) {
        std::cerr << "usage error: --prime-hex: " << e.what() << "\n";
        return kExitUsage;
      }
    }
  }

  const Bytes data = read_file(opt.input);
  SeededRandomSource rng = make_rng(opt.seed);

  SplitResult result = [&] {
    if (opt.composite) {
      const CompositeKey key = decode_key_file(read_file(opt.key_path));
      return split_bytes_composite(data, opt.k, key, rng);
    }
    if (opt.n == 0) return split_bytes_root_k(data, opt.k, *modulus, rng);
    const MatrixMode mode =
        opt.mode == "random" ? MatrixMode::random : MatrixMode::structured;
    return split_bytes_redundant(data, opt.k, opt.n, mode, *modulus, rng);
  }();

  fs::create_directories(opt.out_dir);
  std::cout << "group=" << result.group.hex() << "\n";
  for (const ShareEnvelope& e : result.envelopes) {
    const fs::path path = fs::path(opt.out_dir) /
                          (result.group.hex() + "-" + std::to_string(e.share_index) + ".rsh");
    write_file(path, encode_share_file(e));
    std::cout << path.string() << "\n";
  }
  return kExitOk;
}

int cmd_join(const JoinOptions& opt) {
  std::vector<ShareEnvelope> envelopes;
  envelopes.reserve(opt.shares.size());
  for (const std::string& path : opt.shares)
    envelopes.push_back(decode_share_file(read_file(path)));

  std::optional<CompositeKey> key;
  if (!opt.key_path.empty()) key = decode_key_file(read_file(opt.key_path));

  if (envelopes.front().scheme == Scheme::composite && !key.has_value()) {
    std::cerr << "warning: composite shares without --key; the shares alone reveal only "
                 "the encrypted chunk values below, not the data\n";
    for (const Int& c : composite_ciphertexts(envelopes))
      std::cout << "ciphertext=" << c.str() << "\n";
    return kExitUnrecoverable;
  }

  const Bytes data = join_shares(envelopes, key.has_value() ? &*key : nullptr);
  const fs::path out = opt.out_path.empty()
                           ? fs::path(envelopes.front().group.hex() + ".bin")
                           : fs::path(opt.out_path);
  write_file(out, data);
  std::cout << out.string() << "\n";
  return kExitOk;
}

int cmd_keygen(const KeygenOptions& opt) {
  if (opt.bits < 2048)
    std::cerr << "warning: " << opt.bits
              << "-bit keys are toy-scale; use >= 2048 bits for anything real\n";
  SeededRandomSource rng = make_rng(opt.seed);
  const CompositeKey key = keygen(opt.bits, parse_int_arg(opt.y), rng);
  write_file(opt.out_path, encode_key_file(key));
  std::cout << opt.out_path << "\n";
  return kExitOk;
}

int cmd_simulate(const std::string& path) {
  Scenario scenario;
  try {
    scenario = load_scenario(path);
  } catch (const ScenarioParseError& e) {
    std::cerr << "scenario parse error: " << e.what() << "\n";
    return kExitUsage;
  }
  const ScenarioOutcome outcome = run_scenario(scenario, fs::path(path).parent_path());
  std::cout << outcome.rendered;
  return outcome.all_retrievable ? kExitOk : kExitUnrecoverable;
}

int cmd_bound(const BoundOptions& opt) {
  if (opt.k < 2) {
    std::cerr << "usage error: k must be >= 2\n";
    return kExitUsage;
  }
  const SearchSpaceBound bound = coefficient_space_lower_bound(parse_int_arg(opt.p), opt.k);
  std::cout << "lower_bound=" << bound.brute_force_floor.str() << "\n"
            << "multiset_count=" << bound.multiset_count.str() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rootshare: split data into implicitly secure shares (roots of a "
               "polynomial over a finite field) and put them back together"};
  app.require_subcommand(1);

  SplitOptions split_opt;
  CLI::App* split = app.add_subcommand("split", "split a file into share files");
  split->add_option("input", split_opt.input, "file to split")->required();
  split->add_option("-k", split_opt.k, "shares required to reconstruct")->required();
  split->add_option("-n", split_opt.n, "total shares (redundant scheme; omit for k-of-k)");
  split->add_option("--mode", split_opt.mode, "expansion matrix mode")
      ->check(CLI::IsMember({"structured", "random"}));
  split->add_flag("--composite", split_opt.composite, "composite-modulus scheme (needs --key)");
  split->add_option("--key", split_opt.key_path, "key file for --composite");
  split->add_option("--out", split_opt.out_dir, "output directory");
  split->add_option("--prime-hex", split_opt.prime_hex, "override the prime modulus (hex)");
  split->add_option("--seed", split_opt.seed, "deterministic rng seed");

  JoinOptions join_opt;
  CLI::App* join = app.add_subcommand("join", "reconstruct a file from share files");
  join->add_option("shares", join_opt.shares, "share files")->required()->expected(-1);
  join->add_option("--out", join_opt.out_path, "output file (default <group>.bin)");
  join->add_option("--key", join_opt.key_path, "key file for composite shares");

  KeygenOptions keygen_opt;
  CLI::App* keygen_cmd = app.add_subcommand("keygen", "generate a composite-modulus key");
  keygen_cmd->add_option("--bits", keygen_opt.bits, "modulus size in bits (>= 16)");
  keygen_cmd->add_option("-y", keygen_opt.y, "secret exponent (odd, >= 3)");
  keygen_cmd->add_option("--out", keygen_opt.out_path, "key file path");
  keygen_cmd->add_option("--seed", keygen_opt.seed, "deterministic rng seed");

  std::string scenario_path;
  CLI::App* simulate = app.add_subcommand("simulate", "run a sensor-network scenario file");
  simulate->add_option("scenario", scenario_path, "scenario file")->required();

  BoundOptions bound_opt;
  CLI::App* bound = app.add_subcommand("bound", "print the brute-force search-space bound");
  bound->add_option("-p", bound_opt.p, "prime modulus (decimal or 0x hex)")->required();
  bound->add_option("-k", bound_opt.k, "partition count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (split->parsed()) return cmd_split(split_opt);
    if (join->parsed()) return cmd_join(join_opt);
    if (keygen_cmd->parsed()) return cmd_keygen(keygen_opt);
    if (simulate->parsed()) return cmd_simulate(scenario_path);
    if (bound->parsed()) return cmd_bound(bound_opt);
  } catch (const UnrecoverableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnrecoverable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
