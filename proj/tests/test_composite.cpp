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

#include <set>

#include "rootshare/composite.hpp"
#include "support.hpp"

using namespace rootshare;
using test::ScriptedSource;

namespace {

const CompositeKey& toy_key() {
  static const CompositeKey key = CompositeKey::from_primes(5, 11, 3);
  return key;
}

}  // namespace

TEST_CASE("key derivation from forced primes") {
  const CompositeKey& key = toy_key();
  CHECK(key.n() == 55);
  CHECK(key.lambda_n() == 20);  // lcm(4, 10)
  CHECK(key.y_inv() == 7);      // 3*7 = 21 = 1 mod 20
  CHECK(key.modulus().kind() == ModulusKind::composite);
}

TEST_CASE("exponent validation") {
  // lambda(n) is always even, so an even exponent can never be invertible
  CHECK_THROWS_AS(CompositeKey::from_primes(5, 11, 4), BadExponentError);
  // gcd(y, n) != 1 is rejected even before invertibility
  CHECK_THROWS_AS(CompositeKey::from_primes(5, 11, 5), BadExponentError);
  CHECK_THROWS_AS(CompositeKey::from_primes(5, 11, 1), BadExponentError);
  CHECK_THROWS_AS(CompositeKey::from_primes(5, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(CompositeKey::from_primes(5, 12, 3), std::invalid_argument);
}

TEST_CASE("keygen produces verified primes") {
  SeededRandomSource rng(9);
  const CompositeKey key = keygen(64, 3, rng);
  CHECK(is_probable_prime(key.p(), 64));
  CHECK(is_probable_prime(key.q(), 64));
  CHECK(key.p() != key.q());
  CHECK(key.n() == key.p() * key.q());
  CHECK(key.y() * key.y_inv() % key.lambda_n() == 1);

  SeededRandomSource rng2(9);
  CHECK_THROWS_AS(keygen(64, 4, rng2), BadExponentError);
  CHECK_THROWS_AS(keygen(8, 3, rng2), std::invalid_argument);
}

TEST_CASE("split with a forced first root matches hand arithmetic") {
  // d=2: c = 2^3 = 8 mod 55; r1 forced to 3 => r2 = 8 * 3^-1 = 8*37 = 21
  ScriptedSource rng({0, 0, 2});
  const auto shares = split_composite(2, 2, toy_key(), rng);
  REQUIRE(shares.size() == 2);
  CHECK(shares[0].value.value() == 3);
  CHECK(shares[1].value.value() == 21);

  CHECK(combine_to_ciphertext(shares) == 8);
  CHECK(recover_composite(shares, toy_key()) == 2);  // 8^7 mod 55
}

TEST_CASE("identity datum splits to units recombining to one") {
  ScriptedSource rng({0, 0, 0});  // r1 forced to 1
  const auto shares = split_composite(1, 2, toy_key(), rng);
  CHECK(shares[0].value.value() == 1);
  CHECK(shares[1].value.value() == 1);
  CHECK(combine_to_ciphertext(shares) == 1);
  CHECK(recover_composite(shares, toy_key()) == 1);
}

TEST_CASE("non-unit data are rejected, surfacing the leaked factor") {
  SeededRandomSource rng(3);
  try {
    split_composite(5, 2, toy_key(), rng);
    FAIL("expected NotAUnitError");
  } catch (const NotAUnitError& e) {
    CHECK(e.gcd() == 5);
  }
  CHECK_THROWS_AS(split_composite(0, 2, toy_key(), rng), std::invalid_argument);
  CHECK_THROWS_AS(split_composite(55, 2, toy_key(), rng), std::invalid_argument);
}

TEST_CASE("recovery requires the matching key") {
  SeededRandomSource rng(4);
  const auto shares = split_composite(2, 2, toy_key(), rng);
  const CompositeKey other = CompositeKey::from_primes(3, 7, 5);
  CHECK_THROWS_AS(recover_composite(shares, other), KeyMismatchError);
}

TEST_CASE("all share values are units") {
  SeededRandomSource rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto shares = split_composite(2 + trial % 3, 2 + trial % 3, toy_key(), rng);
    for (const auto& s : shares)
      CHECK(boost::multiprecision::gcd(s.value.value(), Int(55)) == 1);
  }
}

TEST_CASE("round trip on a 64-bit key, against an independent power check") {
  SeededRandomSource rng(6);
  const CompositeKey key = keygen(64, 65537, rng);
  const Modulus m = key.modulus();
  for (int trial = 0; trial < 1000; ++trial) {
    const FieldElement d = sample_unit(m, rng);
    const std::uint32_t k = 2 + trial % 4;
    const auto shares = split_composite(d.value(), k, key, rng);
    CHECK(combine_to_ciphertext(shares) == d.pow(key.y()).value());
    CHECK(recover_composite(shares, key) == d.value());
  }
}

TEST_CASE("coefficient expansion modulo n") {
  // (x-3)(x-21) = x^2 - 24x + 63 = x^2 + 31x + 8 over Z_55
  ScriptedSource rng({0, 0, 2});
  const auto shares = split_composite(2, 2, toy_key(), rng);
  const CoefficientSet coeffs = expand_coefficients_composite(shares);
  CHECK(coeffs.a[0].value() == 31);
  CHECK(coeffs.constant_term.value() == 8);
  for (const auto& s : shares) CHECK(verify_share(s, coeffs));

  SUBCASE("repeated unit roots") {
    const GroupId g{};
    const Modulus n55 = toy_key().modulus();
    std::vector<CompositeShare> twice{{g, 1, 2, FieldElement(21, n55)},
                                      {g, 2, 2, FieldElement(21, n55)}};
    const CoefficientSet sq = expand_coefficients_composite(twice);
    CHECK(sq.a[0].value() == (55 - 42) % 55);
    CHECK(sq.constant_term.value() == 21 * 21 % 55);
  }
}

TEST_CASE("knowledge boundary: the ciphertext is not the datum") {
  // With n=55, y=3 the map d -> d^3 fixes exactly the units where x^3 = x.
  const std::set<Int> fixed_points{1, 21, 34, 54};
  const Modulus m = toy_key().modulus();
  SeededRandomSource rng(7);
  for (unsigned d = 1; d < 55; ++d) {
    if (boost::multiprecision::gcd(Int(d), Int(55)) != 1) continue;
    const Int c = FieldElement(d, m).pow(3).value();
    CHECK((c == d) == (fixed_points.count(d) > 0));
    // recovery never relies on the coincidence: it inverts the exponent
    const auto shares = split_composite(d, 3, toy_key(), rng);
    CHECK(combine_to_ciphertext(shares) == c);
    CHECK(recover_composite(shares, toy_key()) == d);
  }
}
