// Copyright 2026 The Unital Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <set>

#include "doctest.h"
#include "unital/error.hpp"
#include "unital/field.hpp"

namespace unital {
namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kParseError;
}

// Least monic quadratic x^2 + b x + c over GF(p) without roots, ordered by
// (b, c); independent of the library's polynomial code.
std::vector<int> LeastRootFreeQuadratic(int p) {
  for (int b = 0; b < p; ++b)
    for (int c = 0; c < p; ++c) {
      bool root = false;
      for (int x = 0; x < p; ++x) root = root || (x * x + b * x + c) % p == 0;
      if (!root) return {c, b, 1};
    }
  return {};
}

std::vector<int> PrimePowersUpTo(int limit) {
  std::vector<int> out;
  for (int q = 2; q <= limit; ++q)
    if (AsPrimePower(q)) out.push_back(q);
  return out;
}

Field FieldOfOrder(int q) {
  const auto pp = *AsPrimePower(q);
  return Field::Create(pp.prime, pp.exponent);
}

TEST_CASE("prime field uses the trivial modulus x") {
  const Field f = Field::Create(3, 1);
  CHECK(f.order() == 3);
  CHECK(f.irreducible() == std::vector<int>{0, 1});
}

TEST_CASE("quadratic moduli are the least root-free quadratics") {
  for (int p : {2, 3, 5, 7, 11}) {
    CAPTURE(p);
    CHECK(Field::Create(p, 2).irreducible() == LeastRootFreeQuadratic(p));
  }
  CHECK(Field::Create(3, 2).irreducible() == std::vector<int>{1, 0, 1});
}

TEST_CASE("construction errors") {
  CHECK(CodeOf([] { Field::Create(4, 1); }) == ErrorCode::kCompositeCharacteristic);
  CHECK(CodeOf([] { Field::Create(2, 17); }) == ErrorCode::kTooLarge);
  CHECK(CodeOf([] { Field::Create(2, 0); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { Field::QuadraticExtension(6); }) == ErrorCode::kNotPrimePower);
  CHECK_NOTHROW(Field::Create(2, 16));
}

TEST_CASE("prime fields agree with integer arithmetic mod p") {
  for (int p : {2, 3, 5, 7, 13}) {
    const Field f = Field::Create(p, 1);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        CHECK(f.Add(a, b) == (a + b) % p);
        CHECK(f.Mul(a, b) == a * b % p);
      }
  }
}

TEST_CASE("field axioms hold exhaustively up to order 625") {
  for (int q : PrimePowersUpTo(625)) {
    CAPTURE(q);
    const Field f = FieldOfOrder(q);
    // Snapshot the operation tables once; the cubic loops run on them.
    std::vector<int> add(q * q), mul(q * q);
    bool ok = true;
    for (int a = 0; a < q; ++a) {
      ok = ok && f.Add(a, 0) == a && f.Mul(a, 1) == a && f.Add(a, f.Neg(a)) == 0;
      if (a != 0) ok = ok && f.Mul(a, f.Inv(a)) == 1;
      for (int b = 0; b < q; ++b) {
        add[a * q + b] = f.Add(a, b);
        mul[a * q + b] = f.Mul(a, b);
      }
    }
    for (int a = 0; a < q && ok; ++a)
      for (int b = 0; b < q && ok; ++b) {
        ok = add[a * q + b] == add[b * q + a] && mul[a * q + b] == mul[b * q + a];
        const int ab = mul[a * q + b], apb = add[a * q + b];
        for (int c = 0; c < q; ++c) {
          if (mul[ab * q + c] != mul[a * q + mul[b * q + c]] ||
              add[apb * q + c] != add[a * q + add[b * q + c]] ||
              mul[apb * q + c] != add[mul[a * q + c] * q + mul[b * q + c]]) {
            ok = false;
            break;
          }
        }
      }
    CHECK(ok);
  }
}

TEST_CASE("element arithmetic matches the index tables") {
  const Field f = Field::Create(3, 2);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) {
      const auto x = f.FromIndex(a), y = f.FromIndex(b);
      CHECK((x + y).index() == f.Add(a, b));
      CHECK((x * y).index() == f.Mul(a, b));
      CHECK((x - y).index() == f.Sub(a, b));
    }
}

TEST_CASE("GF(9): inverses and Frobenius") {
  const Field f = Field::Create(3, 2);
  for (int i = 0; i < 9; ++i) {
    const auto a = f.FromIndex(i);
    if (!a.is_zero()) CHECK(a * a.Inverse() == f.One());
    CHECK(a.Pow(9) == a);
  }
  CHECK(CodeOf([&] { f.Zero().Inverse(); }) == ErrorCode::kDivisionByZero);
  CHECK(CodeOf([&] { f.Inv(0); }) == ErrorCode::kDivisionByZero);
}

TEST_CASE("GF(4): nontrivial elements have order 3") {
  const Field f = Field::Create(2, 2);
  for (int i = 2; i < 4; ++i) CHECK(f.FromIndex(i).Pow(3) == f.One());
}

TEST_CASE("mixed fields are rejected") {
  const Field f9 = Field::Create(3, 2), f3 = Field::Create(3, 1);
  CHECK(CodeOf([&] { (void)(f9.One() + f3.One()); }) == ErrorCode::kMixedFields);
  CHECK(CodeOf([&] { (void)(f9.One() * f3.One()); }) == ErrorCode::kMixedFields);
  // Same parameters built twice are the same field.
  CHECK(Field::Create(3, 2).One() + f9.One() == f9.FromIndex(2));
}

TEST_CASE("conjugation on GF(9) over GF(3)") {
  const Field f = Field::QuadraticExtension(3);
  CHECK(f.base_order() == 3);
  int fixed = 0;
  for (int i = 0; i < 9; ++i) {
    const auto a = f.FromIndex(i);
    CHECK(a.Conjugate() == a.Pow(3));
    CHECK(a.Conjugate().Conjugate() == a);
    if (a.Conjugate() == a) ++fixed;
  }
  CHECK(fixed == 3);
  CHECK(CodeOf([] { Field::Create(3, 2).One().Conjugate(); }) == ErrorCode::kNotQuadraticExtension);
  CHECK(CodeOf([] { Field::Create(3, 2).Conjugate(1); }) == ErrorCode::kNotQuadraticExtension);
}

TEST_CASE("GF(4): conjugate is squaring and norms lie in GF(2)") {
  const Field f = Field::QuadraticExtension(2);
  for (int i = 0; i < 4; ++i) {
    const auto a = f.FromIndex(i);
    CHECK(a.Conjugate() == a * a);
    const auto n = a * a.Conjugate();
    CHECK(n.Conjugate() == n);
  }
}

TEST_CASE("conjugation is an involutive automorphism; norm is onto the base field") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const Field f = Field::QuadraticExtension(q);
    std::set<int> norms;
    bool ok = true;
    for (int a = 0; a < f.order(); ++a) {
      const int ca = f.Conjugate(a);
      ok = ok && f.Conjugate(ca) == a;
      for (int b = 0; b < f.order(); ++b) {
        ok = ok && f.Conjugate(f.Add(a, b)) == f.Add(ca, f.Conjugate(b));
        ok = ok && f.Conjugate(f.Mul(a, b)) == f.Mul(ca, f.Conjugate(b));
      }
      norms.insert(f.Mul(a, ca));
    }
    CHECK(ok);
    if (q <= 5) {
      // The fixed field of conjugation is exactly GF(q).
      int fixed = 0;
      for (int a = 0; a < f.order(); ++a) fixed += f.Conjugate(a) == a;
      CHECK(fixed == q);
      CHECK(static_cast<int>(norms.size()) == q);
      for (int n : norms) CHECK(f.Conjugate(n) == n);
    }
  }
}

TEST_CASE("prime power decomposition") {
  CHECK(AsPrimePower(1) == std::nullopt);
  CHECK(AsPrimePower(6) == std::nullopt);
  CHECK(AsPrimePower(12) == std::nullopt);
  const auto pp = AsPrimePower(25);
  REQUIRE(pp);
  CHECK(pp->prime == 5);
  CHECK(pp->exponent == 2);
  CHECK(AsPrimePower(7)->exponent == 1);
}

}  // namespace
}  // namespace unital
