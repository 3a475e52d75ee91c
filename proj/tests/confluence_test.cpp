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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "unital/confluence.hpp"
#include "unital/error.hpp"
#include "unital/incidence.hpp"

namespace unital {
namespace {

bool NaiveMeets(const Block& a, const Block& b) {
  for (int x : a)
    for (int y : b)
      if (x == y) return true;
  return false;
}

void CheckAgainstDoubleLoop(const IncidenceStructure& s) {
  const Graph g = BuildConfluence(s);
  REQUIRE(g.num_vertices() == s.num_blocks());
  for (int i = 0; i < s.num_blocks(); ++i) {
    CHECK_FALSE(g.adjacent(i, i));
    for (int j = i + 1; j < s.num_blocks(); ++j) {
      CHECK(g.adjacent(i, j) == NaiveMeets(s.block(i), s.block(j)));
      CHECK(g.adjacent(i, j) == g.adjacent(j, i));
    }
  }
}

// Common-neighbour counts straight from the block lists.
std::pair<std::set<int>, std::set<int>> BruteForceLambdaMu(const IncidenceStructure& s) {
  const int n = s.num_blocks();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) adj[i][j] = i != j && NaiveMeets(s.block(i), s.block(j));
  std::set<int> lambdas, mus;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int common = 0;
      for (int k = 0; k < n; ++k) common += adj[i][k] && adj[j][k];
      (adj[i][j] ? lambdas : mus).insert(common);
    }
  return {lambdas, mus};
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kParseError;
}

TEST_CASE("confluence graph of the order-2 unital is K_{3,3,3,3}") {
  const Graph g = BuildConfluence(HermitianUnital(2));
  CHECK(g.num_vertices() == 12);
  for (int i = 0; i < 12; ++i) CHECK(g.degree(i) == 9);
  // Non-adjacency is an equivalence relation with four classes of three.
  std::vector<int> cls(12, -1);
  int classes = 0;
  for (int i = 0; i < 12; ++i) {
    if (cls[i] >= 0) continue;
    for (int j = 0; j < 12; ++j)
      if (j == i || !g.adjacent(i, j)) cls[j] = classes;
    ++classes;
  }
  CHECK(classes == 4);
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j) CHECK(g.adjacent(i, j) == (cls[i] != cls[j]));
}

TEST_CASE("confluence graph sizes") {
  const Graph g = BuildConfluence(HermitianUnital(3));
  CHECK(g.num_vertices() == 63);
  for (int i = 0; i < 63; ++i) CHECK(g.degree(i) == 32);
  const Graph one = BuildConfluence(IncidenceStructure(2, {{0, 1}}));
  CHECK(one.num_vertices() == 1);
  CHECK(one.num_edges() == 0);
}

TEST_CASE("confluence agrees with a naive double loop") {
  CheckAgainstDoubleLoop(ProjectivePlane(2));
  CheckAgainstDoubleLoop(ProjectivePlane(3));
  CheckAgainstDoubleLoop(AffinePlane(4));
  CheckAgainstDoubleLoop(HermitianUnital(3));
  CheckAgainstDoubleLoop(Dual(AffinePlane(3)));
  const auto pg = ProjectivePlane(4);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> del;
    for (int p = 0; p < pg.num_points(); ++p)
      if (rng() % 3 == 0) del.push_back(p);
    CheckAgainstDoubleLoop(Puncture(pg, del));
  }
}

TEST_CASE("graph basics") {
  Graph g(4);
  g.AddEdge(2, 0);
  g.AddEdge(1, 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.Edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
  CHECK(CodeOf([&] { g.AddEdge(1, 1); }) == ErrorCode::kMalformedGraph);
  CHECK(CodeOf([&] { g.AddEdge(1, 4); }) == ErrorCode::kMalformedGraph);
  const Graph p = PermuteVertices(g, {3, 2, 1, 0});
  CHECK(p.adjacent(1, 3));
  CHECK(p.adjacent(2, 0));
  CHECK(p.num_edges() == 2);
}

TEST_CASE("srg parameters of Hermitian unitals match the formulas and brute force") {
  for (int q : {2, 3, 4}) {
    CAPTURE(q);
    const auto h = HermitianUnital(q);
    const auto params = SrgCheck(BuildConfluence(h));
    REQUIRE(params.has_value());
    CHECK(*params == ExpectedUnitalParams(q));
    if (q <= 3) {
      const auto [lambdas, mus] = BruteForceLambdaMu(h);
      CHECK(lambdas == std::set<int>{static_cast<int>(params->lambda)});
      CHECK(mus == std::set<int>{static_cast<int>(params->mu)});
    }
  }
  const auto p3 = *SrgCheck(BuildConfluence(HermitianUnital(3)));
  CHECK(p3 == SrgParams{63, 32, 16, 16, 4, -4});
  const auto p4 = *SrgCheck(BuildConfluence(HermitianUnital(4)));
  CHECK(p4 == SrgParams{208, 75, 30, 25, 10, -5});
}

TEST_CASE("srg check rejects irregular graphs") {
  Graph path(3);
  path.AddEdge(0, 1);
  path.AddEdge(1, 2);
  CHECK_FALSE(SrgCheck(path).has_value());
  Graph c6(6);
  for (int i = 0; i < 6; ++i) c6.AddEdge(i, (i + 1) % 6);
  CHECK_FALSE(SrgCheck(c6).has_value());
  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.AddEdge(i, (i + 1) % 5);
  const auto pent = SrgCheck(c5);
  REQUIRE(pent.has_value());
  CHECK(pent->lambda == 0);
  CHECK(pent->mu == 1);
  CHECK_FALSE(pent->r.has_value());  // golden ratio
}

TEST_CASE("expected unital parameters") {
  CHECK(ExpectedUnitalParams(2) == SrgParams{12, 9, 6, 9, 0, -3});
  CHECK(ExpectedUnitalParams(3) == SrgParams{63, 32, 16, 16, 4, -4});
  CHECK(ExpectedUnitalParams(4) == SrgParams{208, 75, 30, 25, 10, -5});
  for (std::int64_t q = 2; q <= 10; ++q) {
    const auto p = ExpectedUnitalParams(q);
    CHECK(p.k * (p.k - p.lambda - 1) == (p.v - p.k - 1) * p.mu);
    CHECK(*p.r * *p.r - (p.lambda - p.mu) * *p.r - (p.k - p.mu) == 0);
    CHECK(*p.s * *p.s - (p.lambda - p.mu) * *p.s - (p.k - p.mu) == 0);
    CHECK(*p.r >= *p.s);
  }
}

TEST_CASE("Hoffman bound equals q squared") {
  CHECK(HoffmanBound(ExpectedUnitalParams(3)) == Rational{9, 1});
  CHECK(HoffmanBound(ExpectedUnitalParams(4)) == Rational{16, 1});
  CHECK(HoffmanBound(ExpectedUnitalParams(2)) == Rational{4, 1});
  for (std::int64_t q = 2; q <= 10; ++q) CHECK(HoffmanBound(ExpectedUnitalParams(q)) == Rational{q * q, 1});
  // Petersen graph: 1 + 3/2
  CHECK(HoffmanBound(WithEigenvalues(10, 3, 0, 1)) == Rational{5, 2});
  CHECK(CodeOf([] { HoffmanBound(WithEigenvalues(5, 0, 0, 0)); }) ==
        ErrorCode::kNonNegativeSmallestEigenvalue);
}

TEST_CASE("rationals") {
  CHECK(Rational::Make(6, -4) == Rational{-3, 2});
  CHECK(Rational::Make(0, 5) == Rational{0, 1});
  CHECK(Rational::Make(8, 2).ToString() == "4");
  CHECK(Rational::Make(5, 2).ToString() == "5/2");
}

TEST_CASE("order inference") {
  CHECK(InferOrder(BuildConfluence(HermitianUnital(3))) == 3);
  CHECK(InferOrder(BuildConfluence(HermitianUnital(2))) == 2);
  CHECK(InferOrder(Graph(50)) == std::nullopt);
  CHECK(InferOrder(Graph(63)) == std::nullopt);
}

}  // namespace
}  // namespace unital
