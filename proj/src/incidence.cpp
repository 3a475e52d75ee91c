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

#include "unital/incidence.hpp"

#include <algorithm>
#include <set>

#include "unital/error.hpp"

namespace unital {

namespace {

std::string CoordLabel(const std::array<int, 3>& x) {
  return "(" + std::to_string(x[0]) + ":" + std::to_string(x[1]) + ":" +
         std::to_string(x[2]) + ")";
}

void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedStructure, what);
}

Field FieldOfOrder(int q) {
  const auto pp = AsPrimePower(q);
  if (!pp) throw Error(ErrorCode::kNotPrimePower, std::to_string(q) + " is not a prime power");
  return Field::Create(pp->prime, pp->exponent);
}

// Lines of PG(2,F) as point-index lists, in ProjectivePoints order of the
// dual coordinates.
std::vector<Block> ProjectiveLines(const Field& f, const std::vector<std::array<int, 3>>& pts) {
  std::vector<Block> lines;
  lines.reserve(pts.size());
  for (const auto& l : pts) {
    Block line;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      const auto& x = pts[i];
      const int dot = f.Add(f.Add(f.Mul(l[0], x[0]), f.Mul(l[1], x[1])), f.Mul(l[2], x[2]));
      if (dot == 0) line.push_back(i);
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

IncidenceStructure::IncidenceStructure(int num_points, std::vector<Block> blocks,
                                       std::vector<std::string> labels)
    : num_points_(num_points), blocks_(std::move(blocks)), labels_(std::move(labels)) {
  if (num_points_ < 0) Malformed("negative point count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != num_points_)
    Malformed("label count differs from point count");
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const Block& blk = blocks_[b];
    if (blk.size() < 2) Malformed("block " + std::to_string(b) + " has fewer than 2 points");
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (blk[i] < 0 || blk[i] >= num_points_)
        Malformed("block " + std::to_string(b) + " has an out-of-range point");
      if (i > 0 && blk[i - 1] >= blk[i])
        Malformed("block " + std::to_string(b) + " is not strictly increasing");
    }
    if (b > 0) {
      if (blocks_[b - 1] == blk) Malformed("duplicate block " + std::to_string(b));
      if (blocks_[b - 1] > blk) Malformed("blocks are not sorted lexicographically");
    }
  }
  BuildIndex();
}

IncidenceStructure IncidenceStructure::FromUnsorted(int num_points, std::vector<Block> blocks,
                                                    std::vector<std::string> labels) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return IncidenceStructure(num_points, std::move(blocks), std::move(labels));
}

void IncidenceStructure::BuildIndex() {
  const int nb = num_blocks();
  pencils_.assign(num_points_, {});
  block_points_.assign(nb, Bitset(num_points_));
  pencil_blocks_.assign(num_points_, Bitset(nb));
  for (int b = 0; b < nb; ++b) {
    for (int p : blocks_[b]) {
      pencils_[p].push_back(b);
      block_points_[b].set(p);
      pencil_blocks_[p].set(b);
    }
  }
}

std::optional<int> IncidenceStructure::Join(int a, int b) const {
  const int hit = (pencil_blocks_[a] & pencil_blocks_[b]).first();
  if (hit == Bitset::kNone) return std::nullopt;
  return hit;
}

std::optional<int> IncidenceStructure::Meet(int b1, int b2) const {
  const int hit = (block_points_[b1] & block_points_[b2]).first();
  if (hit == Bitset::kNone) return std::nullopt;
  return hit;
}

std::optional<int> IncidenceStructure::FindBlock(const Block& sorted_points) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), sorted_points);
  if (it == blocks_.end() || *it != sorted_points) return std::nullopt;
  return static_cast<int>(it - blocks_.begin());
}

DesignReport Validate(const IncidenceStructure& s) {
  const int n = s.num_points();
  DesignReport r;
  std::vector<int> cover(static_cast<std::size_t>(n) * n, 0);
  for (const auto& blk : s.blocks()) {
    r.block_size_histogram[static_cast<int>(blk.size())]++;
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j) cover[blk[i] * n + blk[j]]++;
  }
  for (int p = 0; p < n; ++p) r.point_degree_histogram[s.degree(p)]++;
  r.is_partial_linear = true;
  r.is_linear_space = true;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int c = cover[a * n + b];
      r.pair_coverage_histogram[c]++;
      if (c > 1) r.is_partial_linear = false;
      if (c != 1) r.is_linear_space = false;
    }
  }
  return r;
}

std::optional<int> UnitalOrder(const IncidenceStructure& s) {
  if (s.num_blocks() == 0) return std::nullopt;
  const int k = static_cast<int>(s.block(0).size());
  const int q = k - 1;
  if (q < 2) return std::nullopt;
  if (s.num_points() != q * q * q + 1) return std::nullopt;
  if (s.num_blocks() != q * q * (q * q - q + 1)) return std::nullopt;
  for (const auto& b : s.blocks())
    if (static_cast<int>(b.size()) != k) return std::nullopt;
  for (int p = 0; p < s.num_points(); ++p)
    if (s.degree(p) != q * q) return std::nullopt;
  if (!Validate(s).is_linear_space) return std::nullopt;
  return q;
}

std::vector<std::array<int, 3>> ProjectivePoints(const Field& field) {
  const int q = field.order();
  std::vector<std::array<int, 3>> pts;
  pts.reserve(static_cast<std::size_t>(q) * q + q + 1);
  pts.push_back({0, 0, 1});
  for (int b = 0; b < q; ++b) pts.push_back({0, 1, b});
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
  return pts;
}

int ProjectivePointIndex(const Field& field, std::array<int, 3> x) {
  const int q = field.order();
  int lead = 0;
  while (lead < 3 && x[lead] == 0) ++lead;
  if (lead == 3) throw Error(ErrorCode::kInvalidArgument, "zero vector is not a point");
  const int scale = field.Inv(x[lead]);
  for (auto& c : x) c = field.Mul(c, scale);
  if (lead == 2) return 0;
  if (lead == 1) return 1 + x[2];
  return 1 + q + x[1] * q + x[2];
}

IncidenceStructure ProjectivePlane(int q) {
  const Field f = FieldOfOrder(q);
  if (q > 25) throw Error(ErrorCode::kTooLarge, "projective planes are limited to q <= 25");
  const auto pts = ProjectivePoints(f);
  std::vector<std::string> labels;
  labels.reserve(pts.size());
  for (const auto& x : pts) labels.push_back(CoordLabel(x));
  return IncidenceStructure::FromUnsorted(static_cast<int>(pts.size()), ProjectiveLines(f, pts),
                                          std::move(labels));
}

IncidenceStructure AffinePlane(int q) {
  const IncidenceStructure pg = ProjectivePlane(q);
  // Points 0..q are exactly those with x0 = 0.
  std::vector<int> line_at_infinity(q + 1);
  for (int i = 0; i <= q; ++i) line_at_infinity[i] = i;
  return Puncture(pg, line_at_infinity);
}

IncidenceStructure Puncture(const IncidenceStructure& s, const std::vector<int>& deleted) {
  const int n = s.num_points();
  std::vector<bool> gone(n, false);
  for (int p : deleted) {
    if (p < 0 || p >= n)
      throw Error(ErrorCode::kInvalidPointSet, "point " + std::to_string(p) + " out of range");
    gone[p] = true;
  }
  std::vector<int> renum(n, -1);
  std::vector<std::string> labels;
  int next = 0;
  for (int p = 0; p < n; ++p) {
    if (gone[p]) continue;
    renum[p] = next++;
    labels.push_back(s.labels().empty() ? std::to_string(p) : s.labels()[p]);
  }
  std::set<Block> restricted;
  for (const auto& blk : s.blocks()) {
    Block r;
    for (int p : blk)
      if (renum[p] >= 0) r.push_back(renum[p]);
    if (r.size() >= 2) restricted.insert(std::move(r));
  }
  return IncidenceStructure(next, std::vector<Block>(restricted.begin(), restricted.end()),
                            std::move(labels));
}

IncidenceStructure HermitianUnital(int q) {
  if (!AsPrimePower(q))
    throw Error(ErrorCode::kNotPrimePower, std::to_string(q) + " is not a prime power");
  if (q > 5) throw Error(ErrorCode::kTooLarge, "Hermitian unitals are limited to q <= 5");
  const Field f = Field::QuadraticExtension(q);
  const auto pts = ProjectivePoints(f);
  std::vector<int> norm(f.order());
  for (int a = 0; a < f.order(); ++a) norm[a] = f.Mul(a, f.Conjugate(a));

  std::vector<int> renum(pts.size(), -1);
  std::vector<std::string> labels;
  int count = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& x = pts[i];
    if (f.Add(f.Add(norm[x[0]], norm[x[1]]), norm[x[2]]) == 0) {
      renum[i] = count++;
      labels.push_back(CoordLabel(x));
    }
  }
  std::vector<Block> blocks;
  for (const auto& line : ProjectiveLines(f, pts)) {
    Block b;
    for (int p : line)
      if (renum[p] >= 0) b.push_back(renum[p]);
    if (static_cast<int>(b.size()) == q + 1) blocks.push_back(std::move(b));
  }
  IncidenceStructure u = IncidenceStructure::FromUnsorted(count, std::move(blocks), std::move(labels));
  if (UnitalOrder(u) != q)
    throw Error(ErrorCode::kInternalCheckFailed, "Hermitian construction is not a unital");
  return u;
}

IncidenceStructure Dual(const IncidenceStructure& s) {
  std::vector<Block> blocks;
  blocks.reserve(s.num_points());
  for (int p = 0; p < s.num_points(); ++p) {
    if (s.degree(p) < 2)
      throw Error(ErrorCode::kDegeneratePoint,
                  "point " + std::to_string(p) + " lies on fewer than 2 blocks");
    blocks.push_back(s.pencil(p));
  }
  return IncidenceStructure::FromUnsorted(s.num_blocks(), std::move(blocks));
}

std::vector<int> Pencil(const IncidenceStructure& s, int p) {
  if (p < 0 || p >= s.num_points())
    throw Error(ErrorCode::kInvalidArgument, "point out of range");
  return s.pencil(p);
}

std::vector<int> NearPencil(const IncidenceStructure& s, int p, int line) {
  if (p < 0 || p >= s.num_points() || line < 0 || line >= s.num_blocks())
    throw Error(ErrorCode::kInvalidArgument, "point or block out of range");
  if (s.incident(p, line))
    throw Error(ErrorCode::kIncidentPair, "point lies on the block");
  std::vector<int> out{line};
  for (int x : s.block(line)) {
    const auto j = s.Join(p, x);
    if (!j)
      throw Error(ErrorCode::kNotLinearSpace,
                  "points " + std::to_string(p) + " and " + std::to_string(x) + " are not joined");
    out.push_back(*j);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<OnanConfiguration> FindOnan(const IncidenceStructure& s, std::size_t limit) {
  const int nb = s.num_blocks();
  std::vector<int> meet(static_cast<std::size_t>(nb) * nb, -1);
  std::vector<Bitset> adj(nb, Bitset(nb));
  for (int p = 0; p < s.num_points(); ++p) {
    const auto& pen = s.pencil(p);
    for (std::size_t i = 0; i < pen.size(); ++i) {
      for (std::size_t j = i + 1; j < pen.size(); ++j) {
        const int a = pen[i], b = pen[j];
        if (meet[a * nb + b] >= 0)
          throw Error(ErrorCode::kNotPartialLinearSpace,
                      "blocks " + std::to_string(a) + " and " + std::to_string(b) +
                          " share two points");
        meet[a * nb + b] = meet[b * nb + a] = p;
        adj[a].set(b);
        adj[b].set(a);
      }
    }
  }
  std::vector<OnanConfiguration> found;
  for (int a = 0; a < nb; ++a) {
    for (int b = adj[a].next(a + 1); b != Bitset::kNone; b = adj[a].next(b + 1)) {
      const int ab = meet[a * nb + b];
      // c meets a and b, avoiding their common point.
      const Bitset cands = (adj[a] & adj[b]) - s.pencil_blocks(ab);
      for (int c = cands.next(b + 1); c != Bitset::kNone; c = cands.next(c + 1)) {
        const int ac = meet[a * nb + c], bc = meet[b * nb + c];
        const Bitset dcands =
            ((cands & adj[c]) - s.pencil_blocks(ac)) - s.pencil_blocks(bc);
        for (int d = dcands.next(c + 1); d != Bitset::kNone; d = dcands.next(d + 1)) {
          found.push_back({{a, b, c, d},
                           {ab, ac, meet[a * nb + d], bc, meet[b * nb + d], meet[c * nb + d]}});
          if (limit != 0 && found.size() >= limit) return found;
        }
      }
    }
  }
  return found;
}

}  // namespace unital
