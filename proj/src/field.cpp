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

#include "rootshare/field.hpp"

#include <array>
#include <stdexcept>
#include <utility>



namespace rootshare {

namespace {

void check_modulus_value(const Int& v) {
  if (v < 3) throw std::invalid_argument("modulus must be >= 3");
  if ((v & 1) == 0) throw std::invalid_argument("modulus must be odd");
}

Int mod_reduce(Int v, const Int& m) {
  v %= m;
  if (v < 0) v += m;
  return v;
}

}  // namespace

Modulus Modulus::prime(Int value) {
  check_modulus_value(value);
  if (!is_probable_prime(value, 64))
    throw std::invalid_argument("modulus failed primality check");
  return Modulus(std::make_shared<const Rep>(Rep{std::move(value), ModulusKind::prime}));
}

Modulus Modulus::composite(Int value) {
  check_modulus_value(value);
  return Modulus(std::make_shared<const Rep>(Rep{std::move(value), ModulusKind::composite}));
}

FieldElement::FieldElement(Int value, Modulus modulus)
    : value_(mod_reduce(std::move(value), modulus.value())),
      modulus_(std::move(modulus)) {}

namespace {

const Modulus& common_modulus(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatchError();
  return a.modulus();
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const Modulus& m = common_modulus(a, b);
  Int v = a.value() + b.value();
  if (v >= m.value()) v -= m.value();
  return FieldElement(std::move(v), m);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const Modulus& m = common_modulus(a, b);
  Int v = a.value() - b.value();
  if (v < 0) v += m.value();
  return FieldElement(std::move(v), m);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const Modulus& m = common_modulus(a, b);
  return FieldElement(a.value() * b.value() % m.value(), m);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(value_ == 0 ? Int(0) : modulus_.value() - value_, modulus_);
}

FieldElement FieldElement::inverse() const {
  const Int& m = modulus_.value();
  if (value_ == 0) throw NotInvertibleError(m);
  // Extended Euclid on (value, m); invariant r = s*value (mod m).
  Int r0 = value_, r1 = m;
  Int s0 = 1, s1 = 0;
  while (r1 != 0) {
    Int q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw NotInvertibleError(r0);
  return FieldElement(mod_reduce(std::move(s0), m), modulus_);
}

FieldElement FieldElement::pow(const Int& exp) const {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  const Int& m = modulus_.value();
  Int result = 1;
  Int base = value_;
  Int e = exp;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return FieldElement(std::move(result), modulus_);
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

namespace {

// One strong-pseudoprime round: true means "possibly prime".
bool miller_rabin_round(const Int& v, const Int& base, const Int& t, unsigned s) {
  Int x = boost::multiprecision::powm(base, t, v);
  if (x == 1 || x == v - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % v;
    if (x == v - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_probable_prime(const Int& v, int rounds) {
  if (v < 2) throw std::invalid_argument("primality test requires v >= 2");
  if (v == 2 || v == 3) return true;
  if ((v & 1) == 0) return false;

  // v - 1 = 2^s * t with t odd
  Int t = v - 1;
  unsigned s = boost::multiprecision::lsb(t);
  t >>= s;

  if (v < (Int(1) << 64)) {
    // Complete witness set for the 64-bit range.
    static constexpr std::array<unsigned, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                            17, 19, 23, 29, 31, 37};
    for (unsigned w : kWitnesses) {
      if (v == w) return true;
      if (!miller_rabin_round(v, Int(w), t, s)) return false;
    }
    return true;
  }

  // Fixed seed keeps verdicts reproducible run to run.
  SeededRandomSource rng(0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < rounds; ++i) {
    Int base = sample_uniform(2, v - 2, rng);
    if (!miller_rabin_round(v, base, t, s)) return false;
  }
  return true;
}

Int sample_uniform(const Int& lo, const Int& hi, RandomSource& rng) {
  if (lo > hi) throw std::invalid_argument("sample_uniform: lo > hi");
  Int range = hi - lo + 1;
  if (range == 1) return lo;
  const unsigned bits = boost::multiprecision::msb(range - 1) + 1;
  const unsigned words = (bits + 63) / 64;
  const Int mask = (Int(1) << bits) - 1;
  for (;;) {
    Int v = 0;
    for (unsigned i = 0; i < words; ++i) v = (v << 64) | rng.next_u64();
    v &= mask;
    if (v < range) return lo + v;
  }
}

FieldElement sample_unit(const Modulus& m, RandomSource& rng) {
  for (;;) {
    Int v = sample_uniform(1, m.value() - 1, rng);
    if (boost::multiprecision::gcd(v, m.value()) == 1) return FieldElement(std::move(v), m);
  }
}

}  // namespace rootshare
