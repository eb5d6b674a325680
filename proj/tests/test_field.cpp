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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>



#include "rootshare/field.hpp"
#include "support.hpp"

using namespace rootshare;

TEST_CASE("modular addition") {
  const Modulus p31 = Modulus::prime(31);
  CHECK((FieldElement(30, p31) + FieldElement(2, p31)).value() == 1);
  CHECK((FieldElement(19, p31) + FieldElement(22, p31)).value() == 10);

  const FieldElement x(17, p31);
  CHECK((FieldElement(0, p31) + x) == x);

  const Modulus p7 = Modulus::prime(7);
  CHECK_THROWS_AS(FieldElement(1, p31) + FieldElement(1, p7), ModulusMismatchError);
}

TEST_CASE("modular multiplication") {
  const Modulus p31 = Modulus::prime(31);
  CHECK((FieldElement(19, p31) * FieldElement(22, p31)).value() == 15);
  // product of all three partitions of the worked toy example
  CHECK((FieldElement(15, p31) * FieldElement(11, p31)).value() == 10);

  const FieldElement x(23, p31);
  CHECK((FieldElement(1, p31) * x) == x);

  const Modulus p7 = Modulus::prime(7);
  CHECK_THROWS_AS(FieldElement(2, p31) * FieldElement(2, p7), ModulusMismatchError);
}

TEST_CASE("modular inverse") {
  const Modulus p31 = Modulus::prime(31);
  CHECK(FieldElement(15, p31).inverse().value() == 29);
  CHECK(FieldElement(1, p31).inverse().value() == 1);

  const Modulus m15 = Modulus::composite(15);
  try {
    FieldElement(6, m15).inverse();
    FAIL("expected NotInvertibleError");
  } catch (const NotInvertibleError& e) {
    CHECK(e.gcd() == 3);  // the leaked factor
  }

  CHECK_THROWS_AS(FieldElement(0, p31).inverse(), NotInvertibleError);
}

TEST_CASE("inverse property over random units") {
  const Modulus p = Modulus::prime(65537);
  SeededRandomSource rng(7);
  for (int i = 0; i < 200; ++i) {
    FieldElement a(sample_uniform(1, 65536, rng), p);
    CHECK((a * a.inverse()).value() == 1);
  }
}

TEST_CASE("modular exponentiation") {
  const Modulus p31 = Modulus::prime(31);
  CHECK(FieldElement(2, p31).pow(5).value() == 1);
  CHECK(FieldElement(29, p31).pow(0).value() == 1);
  CHECK(FieldElement(29, p31).pow(1).value() == 29);
}

TEST_CASE("pow agrees with iterated multiplication") {
  const Modulus p = Modulus::prime(101);
  SeededRandomSource rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const FieldElement base(sample_uniform(0, 100, rng), p);
    const auto exp = static_cast<std::uint64_t>(sample_uniform(0, 64, rng));
    FieldElement expected(1, p);
    for (std::uint64_t i = 0; i < exp; ++i) expected = expected * base;
    CHECK(base.pow(exp) == expected);
  }
}

TEST_CASE("primality testing") {
  CHECK(is_probable_prime(31, 64));
  CHECK(is_probable_prime(2, 64));
  CHECK_FALSE(is_probable_prime(561, 64));  // Carmichael number
  CHECK_FALSE(is_probable_prime(4, 64));
  CHECK(is_probable_prime((Int(1) << 255) - 19, 64));
  CHECK_FALSE(is_probable_prime((Int(1) << 255) - 17, 64));
  CHECK_THROWS_AS(is_probable_prime(1, 64), std::invalid_argument);
}

TEST_CASE("modulus construction") {
  CHECK(Modulus::prime(31).kind() == ModulusKind::prime);
  CHECK(Modulus::composite(55).kind() == ModulusKind::composite);
  CHECK_THROWS(Modulus::prime(33));  // not prime
  CHECK_THROWS(Modulus::prime(2));   // even
  CHECK_THROWS(Modulus::composite(1));
}

TEST_CASE("sample_uniform degenerate and boundary ranges") {
  SeededRandomSource rng(3);
  CHECK(sample_uniform(5, 5, rng) == 5);
  for (int i = 0; i < 1000; ++i) {
    Int v = sample_uniform(1, 30, rng);
    CHECK(v >= 1);
    CHECK(v <= 30);
  }
  CHECK_THROWS_AS(sample_uniform(2, 1, rng), std::invalid_argument);
}

TEST_CASE("scripted source forces exact draws") {
  // range [1,30] masks 5 bits; word 18 -> 19, word 21 -> 22
  test::ScriptedSource rng{18, 21};
  CHECK(sample_uniform(1, 30, rng) == 19);
  CHECK(sample_uniform(1, 30, rng) == 22);
  CHECK(rng.exhausted());
}

TEST_CASE("rejection sampling keeps draws unbiased: chi-square over [0,7]") {
  SeededRandomSource rng(0xfeedface);
  std::vector<std::uint64_t> counts(8, 0);
  constexpr int kDraws = 1'000'000;
  for (int i = 0; i < kDraws; ++i)
    ++counts[static_cast<std::size_t>(sample_uniform(0, 7, rng))];
  const double stat = test::chi_square_uniform(counts, kDraws);
  // df=7, alpha=0.001
  CHECK(stat < 24.322);
}

TEST_CASE("frequency test over a full small field") {
  const Modulus p = Modulus::prime(13);
  SeededRandomSource rng(99);
  std::vector<std::uint64_t> counts(13, 0);
  constexpr int kDraws = 130'000;
  for (int i = 0; i < kDraws; ++i)
    ++counts[static_cast<std::size_t>(sample_uniform(0, p.value() - 1, rng))];
  // df=12, alpha=0.001
  CHECK(test::chi_square_uniform(counts, kDraws) < 32.909);
}

TEST_CASE("sample_unit rejects non-units") {
  const Modulus n = Modulus::composite(55);
  SeededRandomSource rng(5);
  for (int i = 0; i < 500; ++i) {
    const FieldElement u = sample_unit(n, rng);
    CHECK(boost::multiprecision::gcd(u.value(), Int(55)) == 1);
  }
}
