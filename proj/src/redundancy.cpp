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

#include "rootshare/redundancy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>



namespace rootshare {

namespace {

bool row_all_zero(const std::vector<FieldElement>& row) {
  return std::all_of(row.begin(), row.end(),
                     [](const FieldElement& e) { return e.is_zero(); });
}

bool is_invertible(const FieldElement& e) {
  return !e.is_zero() &&
         boost::multiprecision::gcd(e.value(), e.modulus().value()) == 1;
}

// Rank of a copy of the matrix, for validating random mode output.
std::uint32_t rank_mod(std::vector<std::vector<FieldElement>> m) {
  std::uint32_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (is_invertible(m[r][col])) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    FieldElement inv = m[rank][col].inverse();
    for (std::size_t r = rank + 1; r < rows; ++r) {
      FieldElement factor = m[r][col] * inv;
      for (std::size_t c = col; c < cols; ++c)
        m[r][c] = m[r][c] - factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::vector<FieldElement> structured_row(std::uint32_t point, std::uint32_t k,
                                         const Modulus& m) {
  std::vector<FieldElement> row;
  row.reserve(k);
  FieldElement b(Int(point), m);
  FieldElement acc(1, m);
  for (std::uint32_t j = 0; j < k; ++j) {
    row.push_back(acc);
    acc = acc * b;
  }
  return row;
}

std::vector<FieldElement> random_row(std::uint32_t k, const Modulus& m,
                                     RandomSource& rng) {
  std::vector<FieldElement> row;
  row.reserve(k);
  for (std::uint32_t j = 0; j < k; ++j)
    row.emplace_back(sample_uniform(0, m.value() - 1, rng), m);
  return row;
}

}  // namespace

ExpansionMatrix make_expansion_matrix(std::uint32_t n, std::uint32_t k, MatrixMode mode,
                                      const Modulus& m, RandomSource& rng) {
  if (k < 2 || n < k) throw std::invalid_argument("requires n >= k >= 2");
  ExpansionMatrix out{n, k, mode, {}};
  if (mode == MatrixMode::structured) {
    if (Int(n) >= m.value())
      throw TooManyRowsError("structured mode requires p > n");
    for (std::uint32_t i = 1; i <= n; ++i)
      out.entries.push_back(structured_row(i, k, m));
    return out;
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    out.entries.clear();
    for (std::uint32_t i = 0; i < n; ++i) out.entries.push_back(random_row(k, m, rng));
    const bool zero_row = std::any_of(out.entries.begin(), out.entries.end(), row_all_zero);
    if (!zero_row && rank_mod(out.entries) == k) return out;
  }
  throw Error("failed to sample a rank-k expansion matrix");
}

std::vector<RedundantShare> expand(const std::vector<RootShare>& roots,
                                   const ExpansionMatrix& matrix) {
  if (roots.empty()) throw WrongShareCountError("no roots given");
  if (matrix.cols != roots.size())
    throw DimensionMismatchError("matrix has " + std::to_string(matrix.cols) +
                                 " columns for " + std::to_string(roots.size()) + " roots");
  const Modulus& m = roots.front().value.modulus();
  std::vector<RedundantShare> out;
  out.reserve(matrix.rows);
  for (std::uint32_t i = 0; i < matrix.rows; ++i) {
    const auto& row = matrix.entries[i];
    FieldElement c(0, m);
    for (std::uint32_t j = 0; j < matrix.cols; ++j) {
      if (row[j].modulus() != m) throw ModulusMismatchError();
      c = c + row[j] * roots[j].value;
    }
    out.push_back(RedundantShare{roots.front().group, i + 1,
                                 static_cast<std::uint32_t>(roots.size()), row, c});
  }
  return out;
}

std::vector<RootShare> reconstruct_roots(const std::vector<RedundantShare>& shares) {
  if (shares.empty()) throw WrongShareCountError("no shares given");
  const std::uint32_t k = shares.front().k;
  if (shares.size() != k)
    throw WrongShareCountError("expected exactly " + std::to_string(k) + " shares, got " +
                               std::to_string(shares.size()));
  const Modulus& m = shares.front().combined.modulus();
  std::set<std::uint32_t> row_ids;
  for (const RedundantShare& s : shares) {
    if (s.group != shares.front().group || s.k != k) throw MixedGroupsError();
    if (s.combined.modulus() != m) throw ModulusMismatchError();
    if (s.coeff_row.size() != k)
      throw DimensionMismatchError("share row width does not match k");
    if (!row_ids.insert(s.row_index).second) throw DuplicateIndexError();
  }

  // Augmented system [A | c], eliminated in place.
  std::vector<std::vector<FieldElement>> a;
  a.reserve(k);
  for (const RedundantShare& s : shares) {
    std::vector<FieldElement> row = s.coeff_row;
    row.push_back(s.combined);
    a.push_back(std::move(row));
  }

  for (std::uint32_t col = 0; col < k; ++col) {
    std::uint32_t pivot = k;
    for (std::uint32_t r = col; r < k; ++r) {
      if (is_invertible(a[r][col])) {
        pivot = r;
        break;
      }
    }
    if (pivot == k) throw SingularSubsetError();
    std::swap(a[col], a[pivot]);
    FieldElement inv = a[col][col].inverse();
    for (std::uint32_t r = col + 1; r < k; ++r) {
      if (a[r][col].is_zero()) continue;
      FieldElement factor = a[r][col] * inv;
      for (std::uint32_t c = col; c <= k; ++c) a[r][c] = a[r][c] - factor * a[col][c];
    }
  }

  // Back-substitution, scaling each pivot row as it resolves.
  std::vector<FieldElement> roots(k, FieldElement(0, m));
  for (std::uint32_t col = k; col-- > 0;) {
    FieldElement acc = a[col][k];
    for (std::uint32_t c = col + 1; c < k; ++c) acc = acc - a[col][c] * roots[c];
    roots[col] = acc * a[col][col].inverse();
  }

  std::vector<RootShare> out;
  out.reserve(k);
  for (std::uint32_t j = 0; j < k; ++j)
    out.push_back(RootShare{shares.front().group, j + 1, k, roots[j]});
  return out;
}

RedundantShare add_share(const std::vector<RootShare>& roots, std::uint32_t row_index,
                         MatrixMode mode, RandomSource& rng) {
  if (roots.empty()) throw WrongShareCountError("no roots given");
  if (row_index < 1) throw std::invalid_argument("row_index must be >= 1");
  const Modulus& m = roots.front().value.modulus();
  const auto k = static_cast<std::uint32_t>(roots.size());

  std::vector<FieldElement> row;
  if (mode == MatrixMode::structured) {
    if (Int(row_index) >= m.value())
      throw TooManyRowsError("structured mode requires p > row_index");
    row = structured_row(row_index, k, m);
  } else {
    do {
      row = random_row(k, m, rng);
    } while (row_all_zero(row));
  }

  FieldElement c(0, m);
  for (std::uint32_t j = 0; j < k; ++j) c = c + row[j] * roots[j].value;
  return RedundantShare{roots.front().group, row_index, k, std::move(row), std::move(c)};
}

}  // namespace rootshare
