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

#ifndef UNITAL_INCIDENCE_HPP_
#define UNITAL_INCIDENCE_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unital/bitset.hpp"
#include "unital/field.hpp"

namespace unital {

using Block = std::vector<int>;

// Finite point set {0..n-1} with a list of blocks (point subsets).
//
// Invariants enforced at construction: every block is strictly increasing,
// has at least two points, all indices lie in range, the block list is
// sorted lexicographically and has no duplicates. The structure is immutable;
// pencils and incidence bitsets are precomputed.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;

  // Strict constructor; throws kMalformedStructure on any invariant breach.
  IncidenceStructure(int num_points, std::vector<Block> blocks,
                     std::vector<std::string> labels = {});

  // Sorts each block and the block list first. Still rejects duplicate
  // blocks, short blocks, repeated points and out-of-range indices.
  static IncidenceStructure FromUnsorted(int num_points, std::vector<Block> blocks,
                                         std::vector<std::string> labels = {});

  int num_points() const { return num_points_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(int b) const { return blocks_[b]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Blocks through p, ascending.
  const std::vector<int>& pencil(int p) const { return pencils_[p]; }
  int degree(int p) const { return static_cast<int>(pencils_[p].size()); }

  bool incident(int p, int b) const { return block_points_[b].test(p); }
  const Bitset& block_points(int b) const { return block_points_[b]; }
  const Bitset& pencil_blocks(int p) const { return pencil_blocks_[p]; }

  // Lowest-index block through both points.
  std::optional<int> Join(int a, int b) const;
  // Lowest-index point on both blocks.
  std::optional<int> Meet(int b1, int b2) const;
  std::optional<int> FindBlock(const Block& sorted_points) const;

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.num_points_ == b.num_points_ && a.blocks_ == b.blocks_;
  }

 private:
  void BuildIndex();

  int num_points_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> pencils_;
  std::vector<Bitset> block_points_;
  std::vector<Bitset> pencil_blocks_;
};

struct DesignReport {
  bool is_partial_linear = false;
  bool is_linear_space = false;
  // Keyed by the observed value; mapped to how often it occurs.
  std::map<int, std::int64_t> pair_coverage_histogram;
  std::map<int, int> point_degree_histogram;
  std::map<int, int> block_size_histogram;
};

// Blocks a<b<c<d and the six pairwise meets in the order
// ab, ac, ad, bc, bd, cd.
struct OnanConfiguration {
  std::array<int, 4> blocks;
  std::array<int, 6> points;
  friend bool operator==(const OnanConfiguration&, const OnanConfiguration&) = default;
};

DesignReport Validate(const IncidenceStructure& s);

// Order q when s is a 2-(q^3+1, q+1, 1) design with q > 1.
std::optional<int> UnitalOrder(const IncidenceStructure& s);

// Normalized homogeneous triples over `field`, first nonzero coordinate 1,
// in lexicographic order of element indices. Point i of ProjectivePlane(q)
// is entry i.
std::vector<std::array<int, 3>> ProjectivePoints(const Field& field);
// Index of the point spanned by a nonzero triple in ProjectivePoints order.
int ProjectivePointIndex(const Field& field, std::array<int, 3> coords);

IncidenceStructure ProjectivePlane(int q);
// PG(2,q) with the line x0 = 0 and its points removed.
IncidenceStructure AffinePlane(int q);

// Restricts s to the surviving points. Restrictions with fewer than two
// points are dropped and equal restrictions collapse. The survivor keeps the
// source label, or the decimal source index when s has no labels.
IncidenceStructure Puncture(const IncidenceStructure& s, const std::vector<int>& deleted);

// Absolute points of the unitary polarity x0^{q+1}+x1^{q+1}+x2^{q+1} = 0 in
// PG(2,q^2) with secant-line sections as blocks. 2 <= q <= 5.
IncidenceStructure HermitianUnital(int q);

IncidenceStructure Dual(const IncidenceStructure& s);

std::vector<int> Pencil(const IncidenceStructure& s, int p);

// {L} together with the joins of p to each point of L; sorted.
std::vector<int> NearPencil(const IncidenceStructure& s, int p, int line);

// O'Nan configurations in lexicographic order of block quadruples; stops
// after `limit` hits, limit 0 means exhaustive.
std::vector<OnanConfiguration> FindOnan(const IncidenceStructure& s, std::size_t limit = 0);

}  // namespace unital

#endif  // UNITAL_INCIDENCE_HPP_
