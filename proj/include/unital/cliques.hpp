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

#ifndef UNITAL_CLIQUES_HPP_
#define UNITAL_CLIQUES_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unital/confluence.hpp"
#include "unital/incidence.hpp"

namespace unital {

using Clique = std::vector<int>;

// Pivoted Bron-Kerbosch over bitset candidate/excluded sets. The pivot is the
// candidate with the most neighbours among the candidates, lowest index on
// ties. Each maximal clique with at least `min_size` vertices is reported
// once, sorted ascending, in search order.
void ForEachMaximalClique(const Graph& g, const std::function<void(const Clique&)>& visit,
                          int min_size = 0);

// As above, collected and sorted lexicographically.
std::vector<Clique> EnumerateMaximalCliques(const Graph& g, int min_size = 0);

// Clique number by branch and bound; 0 for the empty graph.
int MaxCliqueSize(const Graph& g);

// Unpivoted reference enumerator over 64-bit masks. Throws kGraphTooLarge
// above 64 vertices.
std::vector<Clique> NaiveMaximalCliques(const Graph& g);

enum class CliqueTag { kPencil, kNearPencil, kOther };

std::string_view CliqueTagName(CliqueTag tag);

struct CliqueClassification {
  Clique clique;
  CliqueTag tag = CliqueTag::kOther;
  std::optional<int> point;  // pencil point or near-pencil apex
  std::optional<int> line;   // near-pencil base block
  std::string note;          // "sub-pencil" when a common point exists

  int size() const { return static_cast<int>(clique.size()); }
};

// Pencil if the blocks are exactly all blocks through one point, near pencil
// if they are exactly NearPencil(s, p, L) for some non-incident (p, L),
// otherwise Other. Throws kNotAClique if two blocks are disjoint.
CliqueClassification ClassifyClique(const IncidenceStructure& s, Clique clique);

struct StarReport {
  bool pass = false;
  int expected_meets = 0;
  // Number of clique members met -> number of outside blocks.
  std::map<int, int> meet_histogram;
  std::optional<int> first_failure;
};

// Every block outside a q^2-clique must meet exactly q+1 of its members.
// Throws kWrongCliqueSize when |clique| != q^2.
StarReport VerifyStarProperty(const IncidenceStructure& s, const Clique& clique, int q);

}  // namespace unital

#endif  // UNITAL_CLIQUES_HPP_
