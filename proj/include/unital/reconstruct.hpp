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

#ifndef UNITAL_RECONSTRUCT_HPP_
#define UNITAL_RECONSTRUCT_HPP_

#include <optional>
#include <vector>

#include "unital/cliques.hpp"
#include "unital/confluence.hpp"
#include "unital/incidence.hpp"

namespace unital {

struct Reconstruction {
  int q = 0;
  // Point j of `structure` is the q^2-clique points[j]. Empty for q = 2.
  std::vector<Clique> points;
  IncidenceStructure structure;
  // Graph vertex v became block vertex_block[v] of `structure`.
  std::vector<int> vertex_block;
  // Order 2: the canonical AG(2,3) is returned instead of a clique rebuild.
  bool order_two_shortcut = false;
};

// Rebuilds a unital from its confluence graph: points are the cliques of
// size q^2, and each vertex becomes the block of cliques containing it.
// Throws kNotAUnitalGraph when the graph cannot come from a unital.
Reconstruction ReconstructUnital(const Graph& g);

// For unitals of order q > 2, turns an isomorphism beta between their
// confluence graphs (block b of s -> block beta[b] of s2) into the point map
// of an incidence isomorphism. Throws kPreconditionViolation,
// kNotAGraphIsomorphism or kPencilImageNotAPencil.
std::vector<int> ExtendGraphIsomorphism(const std::vector<int>& beta, const IncidenceStructure& s,
                                        const IncidenceStructure& s2);

// Point bijection phi with {phi(B)} = blocks of b for every block B of a,
// found by refinement and backtracking. Prefers phi(x) = x, so a structure
// compared with itself yields the identity.
std::optional<std::vector<int>> Isomorphic(const IncidenceStructure& a, const IncidenceStructure& b);

}  // namespace unital

#endif  // UNITAL_RECONSTRUCT_HPP_
