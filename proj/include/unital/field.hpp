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

#ifndef UNITAL_FIELD_HPP_
#define UNITAL_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace unital {

struct PrimePower {
  int prime;
  int exponent;
};

bool IsPrime(int n);

// Decomposes q = p^e with p prime and e >= 1; nullopt otherwise.
std::optional<PrimePower> AsPrimePower(int q);

namespace detail {
struct FieldData;
}

class FieldElement;

// GF(p^e) in polynomial basis modulo a fixed monic irreducible polynomial.
//
// The modulus is the lexicographically least monic irreducible of degree e
// (comparing coefficients from the highest non-leading degree down). Elements
// are addressed either as FieldElement values or, in hot loops, by their
// integer index sum_i c_i p^i. Both views share the same arithmetic.
//
// A Field is a cheap handle to immutable shared data.
class Field {
 public:
  static constexpr int kMaxOrder = 1 << 16;

  // Throws kCompositeCharacteristic, kTooLarge or kInvalidArgument.
  static Field Create(int p, int e);

  // GF(q^2) recorded as a quadratic extension of GF(q); enables Conjugate.
  // Throws kNotPrimePower when q is not a prime power.
  static Field QuadraticExtension(int q);

  int characteristic() const;
  int degree() const;
  int order() const;
  std::optional<int> base_order() const;

  // Little-endian, length degree()+1, leading coefficient 1.
  const std::vector<int>& irreducible() const;

  FieldElement Element(const std::vector<int>& coeffs) const;
  FieldElement FromIndex(int index) const;
  FieldElement Zero() const;
  FieldElement One() const;

  int Add(int a, int b) const;
  int Sub(int a, int b) const;
  int Mul(int a, int b) const;
  int Neg(int a) const;
  int Inv(int a) const;
  int Pow(int a, std::uint64_t n) const;
  int Conjugate(int a) const;

  std::vector<int> Coefficients(int index) const;
  int IndexOf(const std::vector<int>& coeffs) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const detail::FieldData> data_;

  friend class FieldElement;
};

class FieldElement {
 public:
  const Field& field() const { return field_; }
  const std::vector<int>& coeffs() const { return coeffs_; }
  int index() const;
  bool is_zero() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;

  // Throws kDivisionByZero for the zero element.
  FieldElement Inverse() const;
  FieldElement Pow(std::uint64_t n) const;
  // a -> a^q in GF(q^2). Throws kNotQuadraticExtension on untagged fields.
  FieldElement Conjugate() const;

  std::string ToString() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldElement(Field field, std::vector<int> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

  void CheckSameField(const FieldElement& o) const;

  Field field_;
  std::vector<int> coeffs_;

  friend class Field;
};

}  // namespace unital

#endif  // UNITAL_FIELD_HPP_
