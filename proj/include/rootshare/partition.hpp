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
// k-of-k data partitioning. A datum d in [1, p-1] is split into k nonzero
// roots of a monic degree-k polynomial over Z_p whose root product is d.
// Any k-1 roots are jointly uniform and carry no information about d; the
// product of all k recovers it.

#ifndef ROOTSHARE_PARTITION_HPP_
#define ROOTSHARE_PARTITION_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rootshare/field.hpp"

namespace rootshare {

// Opaque 16-byte share-group identifier.
struct GroupId {
  std::array<std::uint8_t, 16> bytes{};

  // Consumes two words from rng, most significant first per half.
  static GroupId random(RandomSource& rng);
  static GroupId from_hex(std::string_view hex);
  std::string hex() const;

  friend auto operator<=>(const GroupId&, const GroupId&) = default;
};

// One partition of a datum: root r_i of the split polynomial, 1 <= value <= p-1.
struct RootShare {
  GroupId group;
  std::uint32_t index = 0;  // 1-based position in [1, k]
  std::uint32_t k = 0;
  FieldElement value;
};

// Non-leading coefficients of the monic split polynomial
// x^k + a_{k-1} x^{k-1} + ... + a_1 x + a_0: `a[i-1]` holds a_i for
// i in [1, k-1], constant_term holds a_0 = (-1)^k * d mod p.
struct CoefficientSet {
  std::uint32_t k = 0;
  std::vector<FieldElement> a;
  FieldElement constant_term;
};

// A value that can be housed by the scheme: nonzero residue. Zero is
// unrepresentable as a product of nonzero roots modulo a prime.
class Datum {
 public:
  explicit Datum(FieldElement value);
  const FieldElement& value() const { return value_; }

  friend bool operator==(const Datum& a, const Datum& b) {
    return a.value_ == b.value_;
  }

 private:
  FieldElement value_;
};

// Splits d into k root shares under a fresh group id: the first k-1 roots
// are uniform on [1, p-1], the last is d times the inverse of their product.
// Draw order from rng: two words for the group id, then the root samples.
// Throws InvalidKError (k < 2 or k >= p) or ZeroDatumError.
std::vector<RootShare> split_k(const Datum& d, std::uint32_t k, RandomSource& rng);

// Product of the k share values. Validates group, modulus, k, and that
// exactly k distinct indices are present.
Datum combine_k(const std::vector<RootShare>& shares);

// Expands prod (x - r_i) mod p by iterative convolution. Throws
// AllZeroCoefficientsError when a_1..a_{k-1} all vanish (prohibited: the
// polynomial would be x^k + a_0, recoverable from any single root).
CoefficientSet expand_coefficients(const std::vector<RootShare>& roots);

// split_k plus expansion, re-randomizing up to 16 times if the expansion
// comes out degenerate. Chance of even one retry is about p^-(k-1).
std::pair<std::vector<RootShare>, CoefficientSet> split_k_with_coefficients(
    const Datum& d, std::uint32_t k, RandomSource& rng);

// Recovers d from one root plus the coefficients: a_0 is minus the value of
// the non-constant part at the root, and d = (-1)^k * a_0 mod p.
Datum recover_from_root_and_coeffs(const RootShare& root, const CoefficientSet& coeffs);

// True iff candidate's value is a root of the polynomial.
bool verify_share(const RootShare& candidate, const CoefficientSet& coeffs);

// Core expansion over raw residues; shared with the composite-modulus
// variant. Result element i is the coefficient of x^i, i in [0, k-1].
std::vector<FieldElement> expand_monic_from_roots(const std::vector<FieldElement>& roots);

struct SearchSpaceBound {
  Int brute_force_floor;  // ceil(p^(k-1) / (k-1)!)
  Int multiset_count;     // C(p+k-2, k-1)
};

// Exact integer evaluation of the brute-force search-space bound.
SearchSpaceBound coefficient_space_lower_bound(const Int& p, std::uint32_t k);

struct RootMultisetCount {
  Int tuples_enumerated;           // (p-1)^(k-1)
  Int distinct_free_multisets;     // multisets {r_1..r_{k-1}} over the sampled roots
  Int distinct_coefficient_vectors;  // distinct (a_1..a_{k-1})
  Int distinct_root_multisets;     // multisets {r_1..r_k} including the derived root
  Int all_zero_occurrences;        // tuples whose expansion is degenerate
};

// Exhaustive enumeration oracle over all (k-1)-tuples of nonzero roots.
// Distinct coefficient vectors and distinct full root multisets are counted
// independently (they must agree). Throws TooLargeError when p > 13 or k > 4.
RootMultisetCount brute_force_root_multiset_count(const Int& p, std::uint32_t k,
                                                  const Datum& d);

}  // namespace rootshare

#endif  // ROOTSHARE_PARTITION_HPP_
