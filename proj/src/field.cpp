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

#include "unital/field.hpp"

#include <sstream>

#include "unital/error.hpp"

namespace unital {

namespace detail {

struct FieldData {
  int p = 0;
  int e = 0;
  int order = 0;
  std::vector<int> irreducible;
  std::optional<int> base_order;
  // Operation tables indexed by element index; empty for large fields.
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;
  std::vector<std::uint16_t> inv;
};

}  // namespace detail

namespace {

constexpr int kTableLimit = 1024;

using Poly = std::vector<int>;

int Mod(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int Degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

int InverseModPrime(int a, int p) {
  // p is tiny; Fermat via repeated multiplication.
  long long r = 1, b = a;
  for (int n = p - 2; n > 0; n >>= 1) {
    if (n & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<int>(r);
}

// Remainder of a modulo monic-or-not divisor d over GF(p).
Poly PolyRem(Poly a, const Poly& d, int p) {
  const int dd = Degree(d);
  const int lead_inv = InverseModPrime(d[dd], p);
  for (int da = Degree(a); da >= dd; da = Degree(a)) {
    const int factor = static_cast<int>(1LL * a[da] * lead_inv % p);
    const int shift = da - dd;
    for (int i = 0; i <= dd; ++i)
      a[i + shift] = Mod(a[i + shift] - 1LL * factor * d[i], p);
  }
  return a;
}

bool IsIrreducible(const Poly& f, int p) {
  const int e = Degree(f);
  if (e <= 1) return e == 1;
  // Trial division by every monic polynomial of degree 1..e/2.
  for (int d = 1; d <= e / 2; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i, c /= p) g[i] = static_cast<int>(c % p);
      g[d] = 1;
      if (Degree(PolyRem(f, g, p)) < 0) return false;
    }
  }
  return true;
}

Poly LeastIrreducible(int p, int e) {
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  // Index order with the constant term least significant coincides with
  // lexicographic order on (c_{e-1}, ..., c_0).
  for (long long code = 0; code < count; ++code) {
    Poly f(e + 1, 0);
    long long c = code;
    for (int i = 0; i < e; ++i, c /= p) f[i] = static_cast<int>(c % p);
    f[e] = 1;
    if (IsIrreducible(f, p)) return f;
  }
  throw Error(ErrorCode::kInternalCheckFailed, "no irreducible polynomial");
}

Poly MulMod(const Poly& a, const Poly& b, const detail::FieldData& d) {
  const int e = d.e, p = d.p;
  std::vector<long long> prod(2 * e - 1, 0);
  for (int i = 0; i < e; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < e; ++j) prod[i + j] += 1LL * a[i] * b[j];
  }
  Poly r(prod.size());
  for (std::size_t i = 0; i < prod.size(); ++i) r[i] = Mod(prod[i], p);
  // Reduce with the monic modulus: x^e = -sum_{i<e} f_i x^i.
  for (int k = static_cast<int>(r.size()) - 1; k >= e; --k) {
    const int c = r[k];
    if (c == 0) continue;
    r[k] = 0;
    for (int i = 0; i < e; ++i)
      r[k - e + i] = Mod(r[k - e + i] - 1LL * c * d.irreducible[i], p);
  }
  r.resize(e);
  return r;
}

Poly AddPoly(const Poly& a, const Poly& b, int p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
  return r;
}

Poly NegPoly(const Poly& a, int p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] == 0 ? 0 : p - a[i];
  return r;
}

Poly PowPoly(Poly base, std::uint64_t n, const detail::FieldData& d) {
  Poly r(d.e, 0);
  r[0] = 1;
  while (n > 0) {
    if (n & 1) r = MulMod(r, base, d);
    base = MulMod(base, base, d);
    n >>= 1;
  }
  return r;
}

bool IsZeroPoly(const Poly& a) {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

int ToIndex(const Poly& a, int p) {
  int idx = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) idx = idx * p + a[i];
  return idx;
}

Poly FromIndexPoly(int idx, const detail::FieldData& d) {
  Poly a(d.e);
  for (int i = 0; i < d.e; ++i, idx /= d.p) a[i] = idx % d.p;
  return a;
}

}  // namespace

bool IsPrime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<PrimePower> AsPrimePower(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, e};
}

Field Field::Create(int p, int e) {
  if (e < 1) throw Error(ErrorCode::kInvalidArgument, "degree must be >= 1");
  if (!IsPrime(p))
    throw Error(ErrorCode::kCompositeCharacteristic,
                std::to_string(p) + " is not prime");
  long long order = 1;
  for (int i = 0; i < e; ++i) {
    order *= p;
    if (order > kMaxOrder)
      throw Error(ErrorCode::kTooLarge, "field order exceeds 2^16");
  }
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->e = e;
  d->order = static_cast<int>(order);
  d->irreducible = LeastIrreducible(p, e);
  if (order <= kTableLimit) {
    const int n = d->order;
    std::vector<Poly> elems(n);
    for (int i = 0; i < n; ++i) elems[i] = FromIndexPoly(i, *d);
    d->add.resize(static_cast<std::size_t>(n) * n);
    d->mul.resize(static_cast<std::size_t>(n) * n);
    d->inv.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const auto s = static_cast<std::uint16_t>(ToIndex(AddPoly(elems[i], elems[j], p), p));
        const auto m = static_cast<std::uint16_t>(ToIndex(MulMod(elems[i], elems[j], *d), p));
        d->add[i * n + j] = d->add[j * n + i] = s;
        d->mul[i * n + j] = d->mul[j * n + i] = m;
        if (m == 1) {
          d->inv[i] = static_cast<std::uint16_t>(j);
          d->inv[j] = static_cast<std::uint16_t>(i);
        }
      }
    }
  }
  return Field(std::move(d));
}

Field Field::QuadraticExtension(int q) {
  const auto pp = AsPrimePower(q);
  if (!pp)
    throw Error(ErrorCode::kNotPrimePower, std::to_string(q) + " is not a prime power");
  Field f = Create(pp->prime, 2 * pp->exponent);
  auto tagged = std::make_shared<detail::FieldData>(*f.data_);
  tagged->base_order = q;
  return Field(std::move(tagged));
}

int Field::characteristic() const { return data_->p; }
int Field::degree() const { return data_->e; }
int Field::order() const { return data_->order; }
std::optional<int> Field::base_order() const { return data_->base_order; }
const std::vector<int>& Field::irreducible() const { return data_->irreducible; }

FieldElement Field::Element(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > data_->e)
    throw Error(ErrorCode::kInvalidArgument, "too many coefficients");
  Poly a(data_->e, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) a[i] = Mod(coeffs[i], data_->p);
  return FieldElement(*this, std::move(a));
}

FieldElement Field::FromIndex(int index) const {
  if (index < 0 || index >= data_->order)
    throw Error(ErrorCode::kInvalidArgument, "element index out of range");
  return FieldElement(*this, FromIndexPoly(index, *data_));
}

FieldElement Field::Zero() const { return FromIndex(0); }
FieldElement Field::One() const { return FromIndex(1); }

std::vector<int> Field::Coefficients(int index) const {
  return FromIndexPoly(index, *data_);
}

int Field::IndexOf(const std::vector<int>& coeffs) const {
  return ToIndex(coeffs, data_->p);
}

int Field::Add(int a, int b) const {
  const auto& d = *data_;
  if (!d.add.empty()) return d.add[a * d.order + b];
  return ToIndex(AddPoly(FromIndexPoly(a, d), FromIndexPoly(b, d), d.p), d.p);
}

int Field::Neg(int a) const {
  const auto& d = *data_;
  return ToIndex(NegPoly(FromIndexPoly(a, d), d.p), d.p);
}

int Field::Sub(int a, int b) const { return Add(a, Neg(b)); }

int Field::Mul(int a, int b) const {
  const auto& d = *data_;
  if (!d.mul.empty()) return d.mul[a * d.order + b];
  return ToIndex(MulMod(FromIndexPoly(a, d), FromIndexPoly(b, d), d), d.p);
}

int Field::Inv(int a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  const auto& d = *data_;
  if (!d.inv.empty()) return d.inv[a];
  return Pow(a, static_cast<std::uint64_t>(d.order - 2));
}

int Field::Pow(int a, std::uint64_t n) const {
  const auto& d = *data_;
  return ToIndex(PowPoly(FromIndexPoly(a, d), n, d), d.p);
}

int Field::Conjugate(int a) const {
  if (!data_->base_order)
    throw Error(ErrorCode::kNotQuadraticExtension, "field has no base order tag");
  return Pow(a, static_cast<std::uint64_t>(*data_->base_order));
}

bool operator==(const Field& a, const Field& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->p == b.data_->p && a.data_->e == b.data_->e &&
         a.data_->irreducible == b.data_->irreducible &&
         a.data_->base_order == b.data_->base_order;
}

int FieldElement::index() const { return ToIndex(coeffs_, field_.characteristic()); }

bool FieldElement::is_zero() const { return IsZeroPoly(coeffs_); }

void FieldElement::CheckSameField(const FieldElement& o) const {
  if (!(field_ == o.field_))
    throw Error(ErrorCode::kMixedFields, "operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  CheckSameField(o);
  return FieldElement(field_, AddPoly(coeffs_, o.coeffs_, field_.characteristic()));
}

FieldElement FieldElement::operator-() const {
  return FieldElement(field_, NegPoly(coeffs_, field_.characteristic()));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  CheckSameField(o);
  return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  CheckSameField(o);
  return FieldElement(field_, MulMod(coeffs_, o.coeffs_, *field_.data_));
}

FieldElement FieldElement::Pow(std::uint64_t n) const {
  return FieldElement(field_, PowPoly(coeffs_, n, *field_.data_));
}

FieldElement FieldElement::Inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return Pow(static_cast<std::uint64_t>(field_.order() - 2));
}

FieldElement FieldElement::Conjugate() const {
  const auto q = field_.base_order();
  if (!q) throw Error(ErrorCode::kNotQuadraticExtension, "field has no base order tag");
  return Pow(static_cast<std::uint64_t>(*q));
}

std::string FieldElement::ToString() const {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || coeffs_[i] != 1) os << coeffs_[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

}  // namespace unital
