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

#include "rootshare/partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rootshare {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

void require_prime(const Modulus& m, const char* what) {
  if (m.kind() != ModulusKind::prime)
    throw std::invalid_argument(std::string(what) + " requires a prime modulus");
}

}  // namespace

GroupId GroupId::random(RandomSource& rng) {
  GroupId id;
  for (int half = 0; half < 2; ++half) {
    std::uint64_t w = rng.next_u64();
    for (int i = 0; i < 8; ++i)
      id.bytes[half * 8 + i] = static_cast<std::uint8_t>(w >> (56 - 8 * i));
  }
  return id;
}

GroupId GroupId::from_hex(std::string_view hex) {
  if (hex.size() != 32) throw std::invalid_argument("group id must be 32 hex chars");
  GroupId id;
  auto nibble = [](char c) -> unsigned {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit in group id");
  };
  for (std::size_t i = 0; i < 16; ++i)
    id.bytes[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  return id;
}

std::string GroupId::hex() const {
  std::string out;
  out.reserve(32);
  for (std::uint8_t b : bytes) {
    out.push_back(kHexDigits[b >> 4]);
    out.push_back(kHexDigits[b & 0xf]);
  }
  return out;
}

Datum::Datum(FieldElement value) : value_(std::move(value)) {
  if (value_.is_zero()) throw ZeroDatumError();
}

std::vector<RootShare> split_k(const Datum& d, std::uint32_t k, RandomSource& rng) {
  const Modulus& m = d.value().modulus();
  require_prime(m, "split_k");
  if (k < 2 || Int(k) >= m.value())
    throw InvalidKError("k must satisfy 2 <= k < p");

  GroupId group = GroupId::random(rng);
  const Int& p = m.value();

  std::vector<RootShare> shares;
  shares.reserve(k);
  FieldElement prefix_product(1, m);
  for (std::uint32_t i = 1; i < k; ++i) {
    FieldElement r(sample_uniform(1, p - 1, rng), m);
    prefix_product = prefix_product * r;
    shares.push_back(RootShare{group, i, k, std::move(r)});
  }
  FieldElement last = d.value() * prefix_product.inverse();
  shares.push_back(RootShare{group, k, k, std::move(last)});
  return shares;
}

namespace {

// Shared validation for k-of-k share sets (prime and composite cases).
void check_share_set(const std::vector<RootShare>& shares) {
  if (shares.empty()) throw WrongShareCountError("no shares given");
  const std::uint32_t k = shares.front().k;
  if (k < 2) throw InvalidKError("share set declares k < 2");
  if (shares.size() != k)
    throw WrongShareCountError("expected " + std::to_string(k) + " shares, got " +
                               std::to_string(shares.size()));
  std::set<std::uint32_t> indices;
  for (const RootShare& s : shares) {
    if (s.group != shares.front().group) throw MixedGroupsError();
    if (s.k != k) throw MixedGroupsError();
    if (s.value.modulus() != shares.front().value.modulus())
      throw ModulusMismatchError();
    if (s.index < 1 || s.index > k || !indices.insert(s.index).second)
      throw DuplicateIndexError();
  }
}

}  // namespace

Datum combine_k(const std::vector<RootShare>& shares) {
  check_share_set(shares);
  FieldElement product(1, shares.front().value.modulus());
  for (const RootShare& s : shares) product = product * s.value;
  return Datum(std::move(product));
}

std::vector<FieldElement> expand_monic_from_roots(const std::vector<FieldElement>& roots) {
  if (roots.empty()) throw std::invalid_argument("no roots to expand");
  const Modulus& m = roots.front().modulus();
  const FieldElement zero(0, m);
  // coeff[j] is the coefficient of x^j; starts as the constant polynomial 1.
  std::vector<FieldElement> coeff{FieldElement(1, m)};
  for (const FieldElement& r : roots) {
    if (r.modulus() != m) throw ModulusMismatchError();
    std::vector<FieldElement> next(coeff.size() + 1, zero);
    for (std::size_t j = 0; j < coeff.size(); ++j) {
      next[j] = next[j] - r * coeff[j];
      next[j + 1] = next[j + 1] + coeff[j];
    }
    coeff = std::move(next);
  }
  coeff.pop_back();  // drop the leading 1
  return coeff;
}

namespace {

CoefficientSet coefficient_set_from_roots(const std::vector<FieldElement>& root_values) {
  const auto k = static_cast<std::uint32_t>(root_values.size());
  if (k < 2) throw InvalidKError("expansion requires degree >= 2");
  std::vector<FieldElement> coeff = expand_monic_from_roots(root_values);
  CoefficientSet out{k, {}, coeff[0]};
  out.a.assign(coeff.begin() + 1, coeff.end());
  const bool degenerate =
      std::all_of(out.a.begin(), out.a.end(), [](const FieldElement& c) { return c.is_zero(); });
  if (degenerate) throw AllZeroCoefficientsError();
  return out;
}

}  // namespace

CoefficientSet expand_coefficients(const std::vector<RootShare>& roots) {
  std::vector<FieldElement> values;
  values.reserve(roots.size());
  for (const RootShare& r : roots) values.push_back(r.value);
  return coefficient_set_from_roots(values);
}

std::pair<std::vector<RootShare>, CoefficientSet> split_k_with_coefficients(
    const Datum& d, std::uint32_t k, RandomSource& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<RootShare> shares = split_k(d, k, rng);
    try {
      CoefficientSet coeffs = expand_coefficients(shares);
      return {std::move(shares), std::move(coeffs)};
    } catch (const AllZeroCoefficientsError&) {
      // re-randomize
    }
  }
  throw AllZeroCoefficientsError();
}

namespace {

// x^k + a_{k-1} x^{k-1} + ... + a_1 x evaluated at r (constant term excluded).
FieldElement eval_nonconstant_part(const FieldElement& r, const CoefficientSet& coeffs) {
  const Modulus& m = r.modulus();
  // Horner over [a_1, ..., a_{k-1}, 1] then one final multiply by r.
  FieldElement acc(1, m);
  for (auto it = coeffs.a.rbegin(); it != coeffs.a.rend(); ++it) {
    if (it->modulus() != m) throw ModulusMismatchError();
    acc = acc * r + *it;
  }
  return acc * r;
}

}  // namespace

Datum recover_from_root_and_coeffs(const RootShare& root, const CoefficientSet& coeffs) {
  if (coeffs.k < 2) throw InvalidKError("coefficient set declares k < 2");
  if (root.value.modulus() != coeffs.constant_term.modulus()) throw ModulusMismatchError();
  FieldElement a0 = -eval_nonconstant_part(root.value, coeffs);
  // d = (-1)^k * a_0
  FieldElement d = (coeffs.k % 2 == 0) ? a0 : -a0;
  return Datum(std::move(d));
}

bool verify_share(const RootShare& candidate, const CoefficientSet& coeffs) {
  if (candidate.value.modulus() != coeffs.constant_term.modulus())
    throw ModulusMismatchError();
  FieldElement value = eval_nonconstant_part(candidate.value, coeffs) + coeffs.constant_term;
  return value.is_zero();
}

SearchSpaceBound coefficient_space_lower_bound(const Int& p, std::uint32_t k) {
  if (p < 2 || k < 2) throw std::invalid_argument("requires p >= 2 and k >= 2");
  Int p_pow = 1;
  for (std::uint32_t i = 0; i + 1 < k; ++i) p_pow *= p;
  Int fact = 1;
  for (std::uint32_t i = 2; i <= k - 1; ++i) fact *= i;
  Int floor_bound = (p_pow + fact - 1) / fact;

  // C(p+k-2, k-1) by iterated exact division
  Int binom = 1;
  for (std::uint32_t i = 1; i <= k - 1; ++i) {
    binom *= p + k - 1 - i;
    binom /= i;
  }
  return SearchSpaceBound{std::move(floor_bound), std::move(binom)};
}

RootMultisetCount brute_force_root_multiset_count(const Int& p, std::uint32_t k,
                                                  const Datum& d) {
  if (p > 13 || k > 4) throw TooLargeError("enumeration limited to p <= 13, k <= 4");
  if (k < 2) throw InvalidKError("k must be >= 2");
  const Modulus& m = d.value().modulus();
  require_prime(m, "brute_force_root_multiset_count");
  if (m.value() != p) throw ModulusMismatchError();

  const auto pn = static_cast<std::uint32_t>(p);
  std::vector<std::uint32_t> tuple(k - 1, 1);

  RootMultisetCount out{0, 0, 0, 0, 0};
  std::set<std::vector<std::uint32_t>> free_multisets;
  std::set<std::vector<Int>> coeff_vectors;
  std::set<std::vector<Int>> root_multisets;

  for (;;) {
    ++out.tuples_enumerated;

    std::vector<FieldElement> roots;
    roots.reserve(k);
    FieldElement prod(1, m);
    for (std::uint32_t r : tuple) {
      roots.emplace_back(Int(r), m);
      prod = prod * roots.back();
    }
    roots.push_back(d.value() * prod.inverse());

    std::vector<std::uint32_t> sorted_free(tuple);
    std::sort(sorted_free.begin(), sorted_free.end());
    free_multisets.insert(std::move(sorted_free));

    std::vector<Int> sorted_roots;
    sorted_roots.reserve(k);
    for (const FieldElement& r : roots) sorted_roots.push_back(r.value());
    std::sort(sorted_roots.begin(), sorted_roots.end());
    root_multisets.insert(std::move(sorted_roots));

    std::vector<FieldElement> coeff = expand_monic_from_roots(roots);
    std::vector<Int> a;
    a.reserve(k - 1);
    bool all_zero = true;
    for (std::size_t i = 1; i < coeff.size(); ++i) {
      if (!coeff[i].is_zero()) all_zero = false;
      a.push_back(coeff[i].value());
    }
    if (all_zero) ++out.all_zero_occurrences;
    coeff_vectors.insert(std::move(a));

    // odometer over [1, p-1]^(k-1)
    std::size_t pos = 0;
    while (pos < tuple.size() && ++tuple[pos] == pn) tuple[pos++] = 1;
    if (pos == tuple.size()) break;
  }

  out.distinct_free_multisets = free_multisets.size();
  out.distinct_coefficient_vectors = coeff_vectors.size();
  out.distinct_root_multisets = root_multisets.size();
  return out;
}

}  // namespace rootshare
