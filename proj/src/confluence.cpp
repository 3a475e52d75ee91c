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

#include "unital/confluence.hpp"

#include <cmath>
#include <numeric>

#include "unital/error.hpp"

namespace unital {

namespace {

std::optional<std::int64_t> ExactSqrt(std::int64_t d) {
  if (d < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d))));
  while (r * r > d) --r;
  while ((r + 1) * (r + 1) <= d) ++r;
  if (r * r != d) return std::nullopt;
  return r;
}

}  // namespace

std::int64_t Graph::num_edges() const {
  std::int64_t twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

void Graph::AddEdge(int i, int j) {
  const int n = num_vertices();
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw Error(ErrorCode::kMalformedGraph, "edge endpoint out of range");
  if (i == j) throw Error(ErrorCode::kMalformedGraph, "self-loop at vertex " + std::to_string(i));
  rows_[i].set(j);
  rows_[j].set(i);
}

std::vector<std::pair<int, int>> Graph::Edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < num_vertices(); ++i)
    for (int j = rows_[i].next(i + 1); j != Bitset::kNone; j = rows_[i].next(j + 1))
      out.emplace_back(i, j);
  return out;
}

Graph BuildConfluence(const IncidenceStructure& s) {
  Graph g(s.num_blocks());
  for (int p = 0; p < s.num_points(); ++p) {
    const auto& pen = s.pencil(p);
    for (std::size_t i = 0; i < pen.size(); ++i)
      for (std::size_t j = i + 1; j < pen.size(); ++j) g.AddEdge(pen[i], pen[j]);
  }
  return g;
}

Graph PermuteVertices(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.num_vertices());
  for (const auto& [i, j] : g.Edges()) h.AddEdge(perm[i], perm[j]);
  h.provenance = g.provenance;
  return h;
}

Rational Rational::Make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::ToString() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

SrgParams WithEigenvalues(std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t mu) {
  SrgParams p{v, k, lambda, mu, std::nullopt, std::nullopt};
  const auto root = ExactSqrt(p.discriminant());
  const std::int64_t trace = lambda - mu;
  // Rational roots of a monic integer quadratic are integers.
  if (root && (trace + *root) % 2 == 0) {
    p.r = (trace + *root) / 2;
    p.s = (trace - *root) / 2;
  }
  return p;
}

std::optional<SrgParams> SrgCheck(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 2) return std::nullopt;
  const int k = g.degree(0);
  for (int i = 1; i < n; ++i)
    if (g.degree(i) != k) return std::nullopt;
  if (k == 0 || k == n - 1) return std::nullopt;
  std::optional<int> lambda, mu;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int common = g.neighbors(i).intersection_count(g.neighbors(j));
      auto& slot = g.adjacent(i, j) ? lambda : mu;
      if (!slot) slot = common;
      else if (*slot != common) return std::nullopt;
    }
  }
  return WithEigenvalues(n, k, lambda.value_or(0), mu.value_or(0));
}

SrgParams ExpectedUnitalParams(std::int64_t q) {
  const std::int64_t v = (q * q - q + 1) * q * q;
  const std::int64_t k = (q + 1) * (q + 1) * (q - 1);
  const std::int64_t mu = (q + 1) * (q + 1);
  const std::int64_t r = q * q - q - 2;
  const std::int64_t s = -q - 1;
  return SrgParams{v, k, mu + r + s, mu, r, s};
}

Rational HoffmanBound(const SrgParams& params) {
  if (!params.s)
    throw Error(ErrorCode::kIrrationalEigenvalues, "smallest eigenvalue is irrational");
  if (*params.s >= 0)
    throw Error(ErrorCode::kNonNegativeSmallestEigenvalue, "s = " + std::to_string(*params.s));
  const Rational frac = Rational::Make(params.k, -*params.s);
  return Rational::Make(frac.den + frac.num, frac.den);
}

std::optional<int> InferOrder(const Graph& g) {
  const std::int64_t n = g.num_vertices();
  for (std::int64_t q = 2;; ++q) {
    const std::int64_t v = q * q * (q * q - q + 1);
    if (v > n) return std::nullopt;
    if (v < n) continue;
    const std::int64_t k = (q + 1) * (q + 1) * (q - 1);
    for (int i = 0; i < n; ++i)
      if (g.degree(i) != k) return std::nullopt;
    return static_cast<int>(q);
  }
}

}  // namespace unital
