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
// Threshold extension: k root shares become n redundant shares via a modular
// linear system. Each redundant share is self-describing (it carries its
// matrix row), so any k of them reconstruct the roots without a shared
// matrix registry.

#ifndef ROOTSHARE_REDUNDANCY_HPP_
#define ROOTSHARE_REDUNDANCY_HPP_

#include <cstdint>
#include <vector>

#include "rootshare/partition.hpp"

namespace rootshare {

enum class MatrixMode : std::uint8_t {
  // Row i is (1, b_i, b_i^2, ..., b_i^{k-1}) with b_i = i; distinct nonzero
  // evaluation points make every k-row subset invertible.
  structured,
  // Entries uniform on [0, p-1]; the full matrix is resampled to rank k but
  // individual k-subsets may still be singular.
  random,
};

// Row {a_i1..a_ik, c_i} of the redundancy system, where
// c_i = sum_j a_ij * r_j mod p for the group's hidden roots.
struct RedundantShare {
  GroupId group;
  std::uint32_t row_index = 0;  // 1-based
  std::uint32_t k = 0;
  std::vector<FieldElement> coeff_row;
  FieldElement combined;
};

struct ExpansionMatrix {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  MatrixMode mode = MatrixMode::structured;
  std::vector<std::vector<FieldElement>> entries;  // rows x cols
};

// n >= k >= 2. Structured mode needs p > n so the evaluation points stay
// distinct and nonzero; violating that throws TooManyRowsError.
ExpansionMatrix make_expansion_matrix(std::uint32_t n, std::uint32_t k, MatrixMode mode,
                                      const Modulus& m, RandomSource& rng);

// c_i = row_i . roots. Throws DimensionMismatchError when the matrix width
// and share count disagree.
std::vector<RedundantShare> expand(const std::vector<RootShare>& roots,
                                   const ExpansionMatrix& matrix);

// Solves the k x k system from exactly k shares by Gaussian elimination
// mod p (pivot = first row with an invertible entry, scaling deferred to
// back-substitution). Throws SingularSubsetError on a dependent subset;
// the caller retries with a different one.
std::vector<RootShare> reconstruct_roots(const std::vector<RedundantShare>& shares);

// One additional share under a fresh row index; existing shares unaffected.
RedundantShare add_share(const std::vector<RootShare>& roots, std::uint32_t row_index,
                         MatrixMode mode, RandomSource& rng);

}  // namespace rootshare

#endif  // ROOTSHARE_REDUNDANCY_HPP_
