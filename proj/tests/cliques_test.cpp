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

#include "doctest.h"
#include "unital/cliques.hpp"
#include "unital/confluence.hpp"
#include "unital/error.hpp"
#include "unital/incidence.hpp"

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

bool IsMaximalClique(const Graph& g, const Clique& c) {
  for (int a : c)
    for (int b : c)
      if (a != b && !g.adjacent(a, b)) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (std::find(c.begin(), c.end(), v) != c.end()) continue;
    bool all = true;
    for (int a : c) all = all && g.adjacent(v, a);
    if (all) return false;
  }
  return true;
}

Graph RandomGraph(int n, double p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.AddEdge(i, j);
  return g;
}

TEST_CASE("small graphs") {
  Graph k3(3);
  k3.AddEdge(0, 1);
  k3.AddEdge(0, 2);
  k3.AddEdge(1, 2);
  CHECK(EnumerateMaximalCliques(k3) == std::vector<Clique>{{0, 1, 2}});
  CHECK(NaiveMaximalCliques(k3) == std::vector<Clique>{{0, 1, 2}});

  Graph c4(4);
  for (int i = 0; i < 4; ++i) c4.AddEdge(i, (i + 1) % 4);
  CHECK(EnumerateMaximalCliques(c4) == std::vector<Clique>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

  const Graph empty(3);
  CHECK(EnumerateMaximalCliques(empty) == std::vector<Clique>{{0}, {1}, {2}});
  CHECK(NaiveMaximalCliques(empty) == std::vector<Clique>{{0}, {1}, {2}});
  CHECK(EnumerateMaximalCliques(Graph(0)).empty());
  CHECK(MaxCliqueSize(c4) == 2);
  CHECK(MaxCliqueSize(Graph(0)) == 0);
  CHECK(CodeOf([] { NaiveMaximalCliques(Graph(65)); }) == ErrorCode::kGraphTooLarge);
}

TEST_CASE("pivoted enumeration matches the naive oracle on a graph sweep") {
  std::uint32_t seed = 1;
  for (int n = 1; n <= 20; ++n)
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const Graph g = RandomGraph(n, p, seed++);
      const auto fast = EnumerateMaximalCliques(g);
      CHECK(fast == NaiveMaximalCliques(g));
      int best = 0;
      for (const auto& c : fast) best = std::max<int>(best, c.size());
      CHECK(MaxCliqueSize(g) == best);
      const int cut = best / 2 + 1;
      std::vector<Clique> big;
      for (const auto& c : fast)
        if (static_cast<int>(c.size()) >= cut) big.push_back(c);
      CHECK(EnumerateMaximalCliques(g, cut) == big);
    }
}

TEST_CASE("order-2 unital: oracle agreement and non-pencil cliques of size 4") {
  const auto h = HermitianUnital(2);
  const Graph g = BuildConfluence(h);
  const auto cliques = EnumerateMaximalCliques(g);
  CHECK(cliques == NaiveMaximalCliques(g));
  CHECK(MaxCliqueSize(g) == 4);
  int non_pencil = 0;
  for (const auto& c : cliques) {
    CHECK(c.size() == 4);
    non_pencil += ClassifyClique(h, c).tag != CliqueTag::kPencil;
  }
  CHECK(cliques.size() == 81);
  CHECK(non_pencil == 81 - 9);
}

TEST_CASE("maximal cliques of Hermitian unitals are pencils or near pencils") {
  for (int q : {3, 4}) {
    CAPTURE(q);
    const auto h = HermitianUnital(q);
    const Graph g = BuildConfluence(h);
    const auto cliques = EnumerateMaximalCliques(g);
    int pencils = 0, near = 0, other = 0;
    std::vector<int> pencil_points;
    for (const auto& c : cliques) {
      const auto cls = ClassifyClique(h, c);
      if (cls.tag == CliqueTag::kPencil) {
        CHECK(cls.size() == q * q);
        pencil_points.push_back(*cls.point);
        ++pencils;
      } else if (cls.tag == CliqueTag::kNearPencil) {
        CHECK(cls.size() == q + 2);
        ++near;
      } else {
        ++other;
      }
    }
    CHECK(other == 0);
    CHECK(pencils == q * q * q + 1);
    std::sort(pencil_points.begin(), pencil_points.end());
    CHECK(std::adjacent_find(pencil_points.begin(), pencil_points.end()) == pencil_points.end());
    // one per non-incident (point, block) pair
    CHECK(near == (q * q * q + 1) * q * q * (q * q - q));
    CHECK(MaxCliqueSize(g) == q * q);
    for (std::size_t i = 0; i < cliques.size(); i += std::max<std::size_t>(1, cliques.size() / 150))
      CHECK(IsMaximalClique(g, cliques[i]));
  }
}

TEST_CASE("classification of specific cliques") {
  const auto h = HermitianUnital(3);
  const auto pencil = ClassifyClique(h, Pencil(h, 5));
  CHECK(pencil.tag == CliqueTag::kPencil);
  CHECK(pencil.point == 5);
  CHECK(pencil.size() == 9);

  int l = 0;
  while (h.incident(5, l)) ++l;
  const auto near = ClassifyClique(h, NearPencil(h, 5, l));
  CHECK(near.tag == CliqueTag::kNearPencil);
  CHECK(near.size() == 5);
  REQUIRE(near.point.has_value());
  CHECK(NearPencil(h, *near.point, *near.line) == near.clique);

  // First triangle found by brute force: three blocks meeting pairwise in distinct points.
  Clique triangle;
  for (int a = 0; a < h.num_blocks() && triangle.empty(); ++a)
    for (int b = a + 1; b < h.num_blocks() && triangle.empty(); ++b)
      for (int c = b + 1; c < h.num_blocks() && triangle.empty(); ++c) {
        const auto ab = h.block_points(a) & h.block_points(b);
        const auto ac = h.block_points(a) & h.block_points(c);
        const auto bc = h.block_points(b) & h.block_points(c);
        if (ab.count() == 1 && ac.count() == 1 && bc.count() == 1 && !(ab == ac) && !(ab == bc) &&
            !(ac == bc))
          triangle = {a, b, c};
      }
  REQUIRE(triangle.size() == 3);
  CHECK(ClassifyClique(h, triangle).tag == CliqueTag::kOther);
  CHECK(ClassifyClique(h, triangle).note.empty());

  auto sub = Pencil(h, 5);
  sub.pop_back();
  const auto partial = ClassifyClique(h, sub);
  CHECK(partial.tag == CliqueTag::kOther);
  CHECK(partial.note == "sub-pencil");

  int disjoint = 1;
  while (h.block_points(0).intersects(h.block_points(disjoint))) ++disjoint;
  CHECK(CodeOf([&] { ClassifyClique(h, {0, disjoint}); }) == ErrorCode::kNotAClique);
  CHECK(CliqueTagName(CliqueTag::kNearPencil) == "near_pencil");
}

TEST_CASE("star property") {
  for (int q : {3, 4}) {
    const auto h = HermitianUnital(q);
    for (int p = 0; p < h.num_points(); p += 7) {
      const auto r = VerifyStarProperty(h, Pencil(h, p), q);
      CHECK(r.pass);
      CHECK(r.expected_meets == q + 1);
      CHECK(r.meet_histogram == std::map<int, int>{{q + 1, h.num_blocks() - q * q}});
    }
  }
  const auto h = HermitianUnital(3);
  auto eight = Pencil(h, 0);
  eight.pop_back();
  CHECK(CodeOf([&] { VerifyStarProperty(h, eight, 3); }) == ErrorCode::kWrongCliqueSize);
  // Nine blocks of a parallel-free family that is not a pencil fail the count.
  Clique nine = Pencil(h, 0);
  nine.back() = [&] {
    int b = 0;
    while (h.incident(0, b)) ++b;
    return b;
  }();
  std::sort(nine.begin(), nine.end());
  CHECK_FALSE(VerifyStarProperty(h, nine, 3).pass);
  CHECK(VerifyStarProperty(h, nine, 3).first_failure.has_value());
}

}  // namespace
}  // namespace unital
