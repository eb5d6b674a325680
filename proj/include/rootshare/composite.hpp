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
// Hardened variant over a composite modulus n = p*q: the datum is raised to
// a secret exponent y before splitting, so even all k roots together reveal
// only c = d^y mod n. Recovery needs y^-1 mod lambda(n), which requires the
// factors of n.

#ifndef ROOTSHARE_COMPOSITE_HPP_
#define ROOTSHARE_COMPOSITE_HPP_

#include <cstdint>
#include <vector>

#include "rootshare/partition.hpp"

namespace rootshare {

class CompositeKey {
 public:
  // Validates primality of p and q, p != q, y >= 3, gcd(y, n) = 1 (the
  // construction's stated condition) and gcd(y, lambda(n)) = 1 (required
  // for recovery to exist at all). Throws BadExponentError.
  static CompositeKey from_primes(Int p, Int q, Int y);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& n() const { return n_; }
  const Int& y() const { return y_; }
  const Int& y_inv() const { return y_inv_; }
  const Int& lambda_n() const { return lambda_; }
  Modulus modulus() const { return modulus_; }

 private:
  CompositeKey(Int p, Int q, Int y, Int y_inv, Int lambda, Modulus modulus);
  Int p_, q_, n_, y_, y_inv_, lambda_;
  Modulus modulus_;
};

// Random key with two distinct primes of about bit_length/2 bits each.
// bit_length >= 16; key strength is the caller's concern (toy sizes are
// allowed for exhaustive testing).
CompositeKey keygen(unsigned bit_length, const Int& y, RandomSource& rng);

// Same shape as a prime-field share; the value must be a unit mod n.
using CompositeShare = RootShare;

// Splits d (a unit mod n) into k unit roots whose product is d^y mod n.
// Draw order from rng: two words for the group id, then unit samples.
// Throws NotAUnitError when gcd(d, n) != 1 -- rejecting is mandatory since
// a non-unit leaks a factor of n.
std::vector<CompositeShare> split_composite(const Int& d, std::uint32_t k,
                                            const CompositeKey& key, RandomSource& rng);

// Product of the shares mod n: the most an adversary holding every root
// can learn, namely c = d^y mod n.
Int combine_to_ciphertext(const std::vector<CompositeShare>& shares);

// (prod r_i)^(y_inv) mod n = d. Throws KeyMismatchError when the key's n is
// not the shares' modulus.
Int recover_composite(const std::vector<CompositeShare>& shares, const CompositeKey& key);

// Polynomial expansion mod n, same contract as the prime-field version.
CoefficientSet expand_coefficients_composite(const std::vector<CompositeShare>& shares);

}  // namespace rootshare

#endif  // ROOTSHARE_COMPOSITE_HPP_
