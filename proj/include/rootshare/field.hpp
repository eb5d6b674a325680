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

#ifndef ROOTSHARE_FIELD_HPP_
#define ROOTSHARE_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <random>

#include "rootshare/errors.hpp"

namespace rootshare {

enum class ModulusKind { prime, composite };

// Arithmetic modulus, >= 3 and odd. A prime modulus is verified with
// Miller-Rabin (64 rounds) at construction. Cheap to copy, compared by value.
class Modulus {
 public:
  static Modulus prime(Int value);
  static Modulus composite(Int value);

  const Int& value() const { return rep_->value; }
  ModulusKind kind() const { return rep_->kind; }

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.rep_ == b.rep_ ||
           (a.rep_->kind == b.rep_->kind && a.rep_->value == b.rep_->value);
  }
  friend bool operator!=(const Modulus& a, const Modulus& b) { return !(a == b); }

 private:
  struct Rep {
    Int value;
    ModulusKind kind;
  };
  explicit Modulus(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// A residue in [0, m). All arithmetic stays in the ring; mixing moduli throws
// ModulusMismatchError.
class FieldElement {
 public:
  FieldElement(Int value, Modulus modulus);

  const Int& value() const { return value_; }
  const Modulus& modulus() const { return modulus_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  // Extended Euclid. Throws NotInvertibleError carrying the gcd when
  // gcd(value, m) != 1 (on a composite modulus that gcd is a factor).
  FieldElement inverse() const;

  // Square-and-multiply; exp >= 0.
  FieldElement pow(const Int& exp) const;

  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

 private:
  Int value_;
  Modulus modulus_;
};

// Word stream feeding all randomized operations; owned by the caller.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual std::uint64_t next_u64() = 0;
};

// mt19937_64-backed source. The word sequence for a given seed is fixed by
// the C++ standard, so seeded runs reproduce bit-exactly everywhere.
class SeededRandomSource final : public RandomSource {
 public:
  explicit SeededRandomSource(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next_u64() override { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

std::uint64_t entropy_seed();

// Miller-Rabin. Deterministic witness set for v < 2^64, fixed-seed random
// witnesses above that. Throws std::invalid_argument for v < 2.
bool is_probable_prime(const Int& v, int rounds);

// Uniform draw from [lo, hi] by rejection sampling on the bit width of the
// range; no modulo bias. Consumes 64-bit words from rng, most significant
// word first.
Int sample_uniform(const Int& lo, const Int& hi, RandomSource& rng);

// Draw from [1, m-1] coprime to m; for a prime modulus every draw qualifies.
FieldElement sample_unit(const Modulus& m, RandomSource& rng);

}  // namespace rootshare

#endif  // ROOTSHARE_FIELD_HPP_
