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

#ifndef ROOTSHARE_TESTS_SUPPORT_HPP_
#define ROOTSHARE_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "rootshare/field.hpp"

namespace rootshare::test {

// Replays a fixed word list. sample_uniform masks the low bits of each
// word, so to force a draw of v from [lo, hi] supply the word v - lo.
class ScriptedSource final : public RandomSource {
 public:
  ScriptedSource(std::initializer_list<std::uint64_t> words) : words_(words) {}
  explicit ScriptedSource(std::vector<std::uint64_t> words) : words_(std::move(words)) {}

  std::uint64_t next_u64() override {
    if (pos_ >= words_.size()) throw std::out_of_range("scripted source exhausted");
    return words_[pos_++];
  }

  bool exhausted() const { return pos_ == words_.size(); }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t pos_ = 0;
};

// Pearson chi-square statistic for observed counts against a uniform
// expectation.
inline double chi_square_uniform(const std::vector<std::uint64_t>& counts,
                                 double total_draws) {
  const double expected = total_draws / static_cast<double>(counts.size());
  double stat = 0.0;
  for (std::uint64_t c : counts) {
    const double diff = static_cast<double>(c) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

}  // namespace rootshare::test

#endif  // ROOTSHARE_TESTS_SUPPORT_HPP_
