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

#ifndef UNITAL_CONFLUENCE_HPP_
#define UNITAL_CONFLUENCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unital/bitset.hpp"
#include "unital/incidence.hpp"

namespace unital {

// Simple undirected graph with one adjacency bitset per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : rows_(n, Bitset(n)) {}

  int num_vertices() const { return static_cast<int>(rows_.size()); }
  std::int64_t num_edges() const;

  // Throws kMalformedGraph on loops or out-of-range endpoints.
  void AddEdge(int i, int j);
  bool adjacent(int i, int j) const { return rows_[i].test(j); }
  const Bitset& neighbors(int i) const { return rows_[i]; }
  int degree(int i) const { return rows_[i].count(); }

  // Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<int, int>> Edges() const;

  // Free-form origin note, exported as a DIMACS comment.
  std::string provenance;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<Bitset> rows_;
};

// Vertex i is block i of s; blocks sharing a point are adjacent.
Graph BuildConfluence(const IncidenceStructure& s);

// Image of g under the vertex relabeling v -> perm[v].
Graph PermuteVertices(const Graph& g, const std::vector<int>& perm);

// Exact fraction in lowest terms with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational Make(std::int64_t num, std::int64_t den);
  friend bool operator==(const Rational&, const Rational&) = default;
  std::string ToString() const;
};

// Standard SRG parameters plus the non-principal eigenvalues r >= s, the
// roots of x^2 - (lambda - mu) x - (k - mu). Both roots are integers exactly
// when the discriminant is a perfect square; otherwise r and s are empty.
struct SrgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> s;

  std::int64_t discriminant() const { return (lambda - mu) * (lambda - mu) + 4 * (k - mu); }
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

// Fills r and s from (lambda, mu, k).
SrgParams WithEigenvalues(std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t mu);

// Parameters when g is strongly regular (n >= 2, not complete, not
// edgeless), verified over all vertex pairs.
std::optional<SrgParams> SrgCheck(const Graph& g);

SrgParams ExpectedUnitalParams(std::int64_t q);

// 1 + k/(-s). Throws kNonNegativeSmallestEigenvalue or kIrrationalEigenvalues.
Rational HoffmanBound(const SrgParams& params);

// q >= 2 with n = q^2(q^2-q+1) and every degree (q+1)^2(q-1).
std::optional<int> InferOrder(const Graph& g);

}  // namespace unital

#endif  // UNITAL_CONFLUENCE_HPP_
