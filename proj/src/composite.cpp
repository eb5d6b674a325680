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

#include "rootshare/composite.hpp"

#include <stdexcept>



namespace rootshare {

namespace {

// Inverse of y mod lambda via extended Euclid; throws BadExponentError when
// gcd(y, lambda) != 1.
Int inverse_mod(const Int& y, const Int& lambda) {
  Int r0 = y % lambda, r1 = lambda;
  Int s0 = 1, s1 = 0;
  while (r1 != 0) {
    Int q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1)
    throw BadExponentError("gcd(y, lambda(n)) = " + r0.str() + "; y is not invertible");
  s0 %= lambda;
  if (s0 < 0) s0 += lambda;
  return s0;
}

Int random_prime(unsigned bits, RandomSource& rng) {
  if (bits < 8) throw std::invalid_argument("prime size too small");
  const Int lo = Int(1) << (bits - 1);
  const Int hi = (Int(1) << bits) - 1;
  for (;;) {
    Int candidate = sample_uniform(lo, hi, rng) | 1;
    if (is_probable_prime(candidate, 64)) return candidate;
  }
}

}  // namespace

CompositeKey::CompositeKey(Int p, Int q, Int y, Int y_inv, Int lambda, Modulus modulus)
    : p_(std::move(p)),
      q_(std::move(q)),
      n_(p_ * q_),
      y_(std::move(y)),
      y_inv_(std::move(y_inv)),
      lambda_(std::move(lambda)),
      modulus_(std::move(modulus)) {}

CompositeKey CompositeKey::from_primes(Int p, Int q, Int y) {
  if (p == q) throw std::invalid_argument("p and q must be distinct");
  if (!is_probable_prime(p, 64) || !is_probable_prime(q, 64))
    throw std::invalid_argument("p and q must be prime");
  if (y < 3) throw BadExponentError("exponent must be >= 3");

  Int n = p * q;
  if (boost::multiprecision::gcd(y, n) != 1)
    throw BadExponentError("gcd(y, n) != 1");
  Int lambda = boost::multiprecision::lcm(Int(p - 1), Int(q - 1));
  Int y_inv = inverse_mod(y, lambda);
  Modulus m = Modulus::composite(n);
  return CompositeKey(std::move(p), std::move(q), std::move(y), std::move(y_inv),
                      std::move(lambda), std::move(m));
}

CompositeKey keygen(unsigned bit_length, const Int& y, RandomSource& rng) {
  if (bit_length < 16) throw std::invalid_argument("bit_length must be >= 16");
  if (y < 3) throw BadExponentError("exponent must be >= 3");
  const unsigned p_bits = (bit_length + 1) / 2;
  const unsigned q_bits = bit_length / 2;
  for (;;) {
    Int p = random_prime(p_bits, rng);
    Int q = random_prime(q_bits, rng);
    if (p == q) continue;
    try {
      return CompositeKey::from_primes(std::move(p), std::move(q), y);
    } catch (const BadExponentError&) {
      // gcd(y, lambda) != 1 depends on the sampled primes only when y shares
      // a factor with p-1 and q-1; an even y can never work.
      if ((y & 1) == 0) throw;
    }
  }
}

std::vector<CompositeShare> split_composite(const Int& d, std::uint32_t k,
                                            const CompositeKey& key, RandomSource& rng) {
  const Int& n = key.n();
  if (d < 1 || d >= n) throw std::invalid_argument("d must satisfy 1 <= d < n");
  Int g = boost::multiprecision::gcd(d, n);
  if (g != 1) throw NotAUnitError(std::move(g));
  if (k < 2 || Int(k) >= n) throw InvalidKError("k must satisfy 2 <= k < n");

  const Modulus m = key.modulus();
  GroupId group = GroupId::random(rng);
  FieldElement ciphertext = FieldElement(d, m).pow(key.y());

  std::vector<CompositeShare> shares;
  shares.reserve(k);
  FieldElement prefix_product(1, m);
  for (std::uint32_t i = 1; i < k; ++i) {
    FieldElement r = sample_unit(m, rng);
    prefix_product = prefix_product * r;
    shares.push_back(CompositeShare{group, i, k, std::move(r)});
  }
  FieldElement last = ciphertext * prefix_product.inverse();
  shares.push_back(CompositeShare{group, k, k, std::move(last)});
  return shares;
}

namespace {

FieldElement combined_product(const std::vector<CompositeShare>& shares) {
  // combine_k performs the share-set validation and the modular product;
  // reuse it and unwrap the datum.
  return combine_k(shares).value();
}

}  // namespace

Int combine_to_ciphertext(const std::vector<CompositeShare>& shares) {
  return combined_product(shares).value();
}

Int recover_composite(const std::vector<CompositeShare>& shares, const CompositeKey& key) {
  if (shares.empty()) throw WrongShareCountError("no shares given");
  if (shares.front().value.modulus() != key.modulus()) throw KeyMismatchError();
  return combined_product(shares).pow(key.y_inv()).value();
}

CoefficientSet expand_coefficients_composite(const std::vector<CompositeShare>& shares) {
  if (shares.empty()) throw WrongShareCountError("no shares given");
  if (shares.front().value.modulus().kind() != ModulusKind::composite)
    throw std::invalid_argument("expected a composite modulus");
  return expand_coefficients(shares);
}

}  // namespace rootshare
