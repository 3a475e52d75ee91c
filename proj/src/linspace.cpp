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

#include "unital/linspace.hpp"

#include <algorithm>
#include <map>

#include "unital/error.hpp"

namespace unital {

namespace {

std::string Str(int v) { return std::to_string(v); }

int LineSize(const IncidenceStructure& d, int b) { return static_cast<int>(d.block(b).size()); }

// Block sets of q-point lines and of all lines through p with given sizes.
std::vector<int> LinesThroughOfSize(const IncidenceStructure& d, int p, int size) {
  std::vector<int> out;
  for (int b : d.pencil(p))
    if (LineSize(d, b) == size) out.push_back(b);
  return out;
}

class FullPencilSearch {
 public:
  FullPencilSearch(const IncidenceStructure& d, const IncidenceStructure& host)
      : d_(d), host_(host) {
    const int hn = host.num_points();
    host_join_.assign(static_cast<std::size_t>(hn) * hn, -1);
    for (int b = 0; b < host.num_blocks(); ++b)
      for (int x : host.block(b))
        for (int y : host.block(b))
          if (x != y) host_join_[x * hn + y] = b;
    map_.assign(d.num_points(), -1);
    used_points_ = Bitset(hn);
    line_host_.assign(d.num_blocks(), -1);
    mapped_on_line_.assign(d.num_blocks(), 0);
    host_line_owner_.assign(host.num_blocks(), -1);
  }

  bool Run() { return Step(0); }
  const std::vector<int>& map() const { return map_; }

 private:
  int NextPoint() const {
    int best = -1, best_score = -1;
    for (int x = 0; x < d_.num_points(); ++x) {
      if (map_[x] >= 0) continue;
      int score = 0;
      for (int b : d_.pencil(x))
        if (mapped_on_line_[b] > 0) ++score;
      if (score > best_score) {
        best = x;
        best_score = score;
      }
    }
    return best;
  }

  bool Step(int depth) {
    if (depth == d_.num_points()) return true;
    const int x = NextPoint();
    Bitset cands(host_.num_points());
    for (int h = 0; h < host_.num_points(); ++h) cands.set(h);
    cands -= used_points_;
    for (int b : d_.pencil(x))
      if (line_host_[b] >= 0) cands &= host_.block_points(line_host_[b]);

    for (int h = cands.first(); h != Bitset::kNone; h = cands.next(h + 1)) {
      std::vector<int> claimed;  // D-lines whose host line is fixed by this step
      bool ok = true;
      for (int b : d_.pencil(x)) {
        if (mapped_on_line_[b] != 1 || line_host_[b] >= 0) continue;
        int y = -1;
        for (int p : d_.block(b))
          if (map_[p] >= 0) y = p;
        const int hl = host_join_[map_[y] * host_.num_points() + h];
        if (host_line_owner_[hl] >= 0) {
          ok = false;
          break;
        }
        host_line_owner_[hl] = b;
        line_host_[b] = hl;
        claimed.push_back(b);
      }
      if (ok) {
        map_[x] = h;
        used_points_.set(h);
        for (int b : d_.pencil(x)) ++mapped_on_line_[b];
        if (Step(depth + 1)) return true;
        for (int b : d_.pencil(x)) --mapped_on_line_[b];
        used_points_.reset(h);
        map_[x] = -1;
      }
      for (int b : claimed) {
        host_line_owner_[line_host_[b]] = -1;
        line_host_[b] = -1;
      }
    }
    return false;
  }

  const IncidenceStructure& d_;
  const IncidenceStructure& host_;
  std::vector<int> host_join_;
  std::vector<int> map_;
  Bitset used_points_;
  std::vector<int> line_host_;
  std::vector<int> mapped_on_line_;
  std::vector<int> host_line_owner_;
};

std::vector<int> Complement(int n, const std::vector<int>& image) {
  std::vector<bool> hit(n, false);
  for (int h : image) hit[h] = true;
  std::vector<int> out;
  for (int h = 0; h < n; ++h)
    if (!hit[h]) out.push_back(h);
  return out;
}

void CheckWitness(const IncidenceStructure& d, const EmbeddingWitness& w) {
  if (auto failure = VerifyEmbedding(d, w))
    throw Error(ErrorCode::kInternalCheckFailed, "embedding witness rejected: " + *failure);
}

}  // namespace

std::string_view LinSpaceCaseName(LinSpaceCase c) {
  switch (c) {
    case LinSpaceCase::kAffinePlane: return "affine_plane";
    case LinSpaceCase::kThinPoint: return "thin_point";
    case LinSpaceCase::kFullPencils: return "full_pencils";
  }
  return "unknown";
}

AssumptionReport CheckAssumptions(const IncidenceStructure& d, int q) {
  AssumptionReport r;
  auto fail = [&](std::string cond, int witness, std::string detail) {
    r.pass = false;
    r.violations.push_back({std::move(cond), witness, std::move(detail)});
  };
  if (q < 2) fail("point-count", -1, "q must exceed 1");
  if (d.num_points() != q * q)
    fail("point-count", -1, Str(d.num_points()) + " points, expected " + Str(q * q));
  if (!Validate(d).is_linear_space) fail("linear-space", -1, "some pair is not on exactly one line");
  for (int p = 0; p < d.num_points(); ++p)
    if (d.degree(p) > q + 1) fail("pencil-size", p, Str(d.degree(p)) + " lines through point");
  for (int b = 0; b < d.num_blocks(); ++b)
    if (LineSize(d, b) > q + 1) fail("line-size", b, Str(LineSize(d, b)) + " points on line");
  return r;
}

std::vector<int> FindProjectiveLines(const IncidenceStructure& d, int q) {
  std::vector<int> out;
  for (int b = 0; b < d.num_blocks(); ++b) {
    if (LineSize(d, b) != q + 1) continue;
    for (int x = 0; x < d.num_blocks(); ++x)
      if (!d.block_points(b).intersects(d.block_points(x)))
        throw Error(ErrorCode::kLemmaViolation,
                    "projective line " + Str(b) + " misses line " + Str(x));
    out.push_back(b);
  }
  return out;
}

std::vector<int> ThinPoints(const IncidenceStructure& d, int q) {
  std::vector<int> thin;
  for (int p = 0; p < d.num_points(); ++p)
    if (d.degree(p) <= q) thin.push_back(p);
  if (thin.size() > 1)
    throw Error(ErrorCode::kLemmaViolation, Str(static_cast<int>(thin.size())) + " thin points");
  if (thin.size() == 1) {
    const int u = thin.front();
    if (d.degree(u) != q)
      throw Error(ErrorCode::kLemmaViolation, "thin point " + Str(u) + " has " +
                                                  Str(d.degree(u)) + " lines");
    int short_lines = 0;
    for (int b : d.pencil(u)) {
      const int size = LineSize(d, b);
      if (size == q) ++short_lines;
      else if (size != q + 1)
        throw Error(ErrorCode::kLemmaViolation, "line " + Str(b) + " through the thin point has " +
                                                    Str(size) + " points");
    }
    if (short_lines != 1)
      throw Error(ErrorCode::kLemmaViolation,
                  Str(short_lines) + " lines of size q through the thin point");
  }
  return thin;
}

LinSpaceClass Classify(const IncidenceStructure& d, int q, bool embed) {
  if (q < 3) throw Error(ErrorCode::kQTooSmall, "classification needs q >= 3");
  const AssumptionReport rep = CheckAssumptions(d, q);
  if (!rep.pass) {
    const auto& v = rep.violations.front();
    throw Error(ErrorCode::kAssumptionViolation, v.condition + ": " + v.detail);
  }
  LinSpaceClass c;
  c.q = q;
  c.line_count = d.num_blocks();
  c.projective_lines = FindProjectiveLines(d, q);
  const std::vector<int> thin = ThinPoints(d, q);

  if (c.projective_lines.empty()) {
    c.kind = LinSpaceCase::kAffinePlane;
    if (c.line_count != q * q + q)
      throw Error(ErrorCode::kLemmaViolation, "space without projective lines has " +
                                                  Str(c.line_count) + " lines");
    if (embed) c.embedding = CompleteAffine(d);
  } else if (!thin.empty()) {
    c.kind = LinSpaceCase::kThinPoint;
    c.thin_point = thin.front();
    c.short_line = LinesThroughOfSize(d, thin.front(), q).front();
    if (c.line_count != q * q + q)
      throw Error(ErrorCode::kLemmaViolation, "thin-point space has " + Str(c.line_count) + " lines");
    if (embed) c.embedding = CompleteThinPoint(d, q, thin.front());
  } else {
    c.kind = LinSpaceCase::kFullPencils;
    if (c.line_count != q * q + q + 1)
      throw Error(ErrorCode::kLemmaViolation, "full-pencil space has " + Str(c.line_count) + " lines");
    for (int p = 0; p < d.num_points(); ++p)
      if (d.degree(p) != q + 1)
        throw Error(ErrorCode::kLemmaViolation, "point " + Str(p) + " has a short pencil");
    if (embed && q <= 4) c.embedding = EmbedFullPencils(d, q);
  }
  return c;
}

EmbeddingWitness CompleteAffine(const IncidenceStructure& d) {
  auto reject = [](const std::string& why) { throw Error(ErrorCode::kNotAffinePlane, why); };
  const int n = d.num_points();
  if (d.num_blocks() == 0) reject("no lines");
  const int q = LineSize(d, 0);
  if (q * q != n) reject(Str(n) + " points with lines of size " + Str(q));
  if (d.num_blocks() != q * q + q) reject(Str(d.num_blocks()) + " lines");
  for (int b = 0; b < d.num_blocks(); ++b)
    if (LineSize(d, b) != q) reject("line " + Str(b) + " has the wrong size");
  if (!Validate(d).is_linear_space) reject("not a linear space");

  // Parallel classes: maximal sets of pairwise disjoint lines.
  std::vector<int> cls(d.num_blocks(), -1);
  int classes = 0;
  for (int b = 0; b < d.num_blocks(); ++b) {
    if (cls[b] >= 0) continue;
    std::vector<int> members{b};
    for (int x = b + 1; x < d.num_blocks(); ++x) {
      if (cls[x] >= 0) continue;
      bool disjoint = true;
      for (int m : members)
        if (d.block_points(m).intersects(d.block_points(x))) disjoint = false;
      if (disjoint) members.push_back(x);
    }
    if (static_cast<int>(members.size()) != q) reject("parallel class of line " + Str(b) + " has wrong size");
    for (int m : members) cls[m] = classes;
    ++classes;
  }
  if (classes != q + 1) reject(Str(classes) + " parallel classes");

  std::vector<Block> lines;
  for (int b = 0; b < d.num_blocks(); ++b) {
    Block l = d.block(b);
    l.push_back(n + cls[b]);
    lines.push_back(std::move(l));
  }
  Block infinity;
  for (int k = 0; k <= q; ++k) infinity.push_back(n + k);
  lines.push_back(infinity);

  std::vector<std::string> labels;
  for (int p = 0; p < n; ++p) labels.push_back(d.labels().empty() ? Str(p) : d.labels()[p]);
  for (int k = 0; k <= q; ++k) labels.push_back("inf" + Str(k));

  EmbeddingWitness w;
  w.host = IncidenceStructure::FromUnsorted(n + q + 1, std::move(lines), std::move(labels));
  w.point_map.resize(n);
  for (int p = 0; p < n; ++p) w.point_map[p] = p;
  w.deleted = infinity;
  return w;
}

EmbeddingWitness CompleteThinPoint(const IncidenceStructure& d, int q, int u) {
  const std::vector<int> thin = ThinPoints(d, q);
  if (thin.size() != 1 || thin.front() != u)
    throw Error(ErrorCode::kPreconditionViolation, "point " + Str(u) + " is not the thin point");
  const int n = d.num_points();
  const int short_line = LinesThroughOfSize(d, u, q).front();

  // For every point off the short line, the unique line through it missing
  // the short line.
  std::vector<bool> gets_new_point(d.num_blocks(), false);
  gets_new_point[short_line] = true;
  for (int p = 0; p < n; ++p) {
    if (d.incident(p, short_line)) continue;
    int missing = -1, count = 0;
    for (int b : d.pencil(p)) {
      if (!d.block_points(b).intersects(d.block_points(short_line))) {
        missing = b;
        ++count;
      }
    }
    if (count != 1)
      throw Error(ErrorCode::kConstructionFailed,
                  "point " + Str(p) + " has " + Str(count) + " lines missing the short line");
    gets_new_point[missing] = true;
  }

  // The new point reuses index u.
  std::vector<Block> lines;
  for (int b = 0; b < d.num_blocks(); ++b) {
    Block l;
    for (int p : d.block(b))
      if (p != u) l.push_back(p);
    if (gets_new_point[b]) l.push_back(u);
    std::sort(l.begin(), l.end());
    lines.push_back(std::move(l));
  }
  Block swapped_short;
  EmbeddingWitness affine;
  try {
    swapped_short = lines[short_line];
    affine = CompleteAffine(IncidenceStructure::FromUnsorted(n, std::move(lines)));
  } catch (const Error& e) {
    throw Error(ErrorCode::kConstructionFailed, std::string("swapped space: ") + e.what());
  }

  // The point at infinity of the short line's parallel class stands for u.
  const IncidenceStructure& host = affine.host;
  int u_host = -1;
  if (const auto hl = host.Join(swapped_short[0], swapped_short[1])) {
    for (int h : host.block(*hl))
      if (h >= n) u_host = h;
  }
  if (u_host < 0) throw Error(ErrorCode::kInternalCheckFailed, "short line has no point at infinity");

  EmbeddingWitness w;
  w.host = host;
  w.point_map.resize(n);
  for (int p = 0; p < n; ++p) w.point_map[p] = p == u ? u_host : p;
  w.deleted = Complement(host.num_points(), w.point_map);
  CheckWitness(d, w);

  // Line sizes relative to u and the new point v (host index u), ignoring
  // the line at infinity.
  const int v = u;
  std::vector<int> in_image(host.num_points(), 0);
  for (int h : w.point_map) in_image[h] = 1;
  for (int b = 0; b < host.num_blocks(); ++b) {
    const Block& hl = host.block(b);
    if (hl.front() >= n) continue;
    int size = 0;
    for (int h : hl) size += in_image[h];
    const bool has_u = host.incident(u_host, b), has_v = host.incident(v, b);
    const int expected = has_u && has_v ? q : has_u ? q + 1 : has_v ? q - 1 : q;
    if (size != expected)
      throw Error(ErrorCode::kInternalCheckFailed,
                  "host line " + Str(b) + " carries " + Str(size) + " points, expected " + Str(expected));
  }
  return w;
}

EmbeddingWitness EmbedFullPencils(const IncidenceStructure& d, int q) {
  if (q > 4) throw Error(ErrorCode::kQTooLargeForSearch, "embedding search is limited to q <= 4");
  if (d.num_points() != q * q || d.num_blocks() != q * q + q + 1)
    throw Error(ErrorCode::kPreconditionViolation, "not a full-pencil space");
  for (int p = 0; p < d.num_points(); ++p)
    if (d.degree(p) != q + 1)
      throw Error(ErrorCode::kPreconditionViolation, "point " + Str(p) + " has a short pencil");

  EmbeddingWitness w;
  w.host = ProjectivePlane(q);
  FullPencilSearch search(d, w.host);
  if (!search.Run()) throw Error(ErrorCode::kNoEmbeddingFound, "no embedding into PG(2," + Str(q) + ")");
  w.point_map = search.map();
  w.deleted = Complement(w.host.num_points(), w.point_map);
  CheckWitness(d, w);

  const Bitset deleted = Bitset::from_indices(w.host.num_points(), w.deleted);
  for (int b = 0; b < w.host.num_blocks(); ++b)
    if (w.host.block_points(b).intersection_count(deleted) >= q)
      throw Error(ErrorCode::kInternalCheckFailed, Str(q) + " deleted points on host line " + Str(b));
  for (int y : w.deleted) {
    bool tangent = false;
    for (int x = 0; x < d.num_blocks() && !tangent; ++x) {
      if (LineSize(d, x) != q) continue;
      Block image;
      for (int p : d.block(x)) image.push_back(w.point_map[p]);
      std::sort(image.begin(), image.end());
      const auto hl = w.host.Join(image[0], image[1]);
      tangent = hl && w.host.incident(y, *hl);
    }
    if (!tangent) throw Error(ErrorCode::kInternalCheckFailed, "deleted point " + Str(y) + " has no tangent");
  }
  return w;
}

std::optional<std::string> VerifyEmbedding(const IncidenceStructure& d, const EmbeddingWitness& w) {
  const IncidenceStructure& host = w.host;
  const int hn = host.num_points();
  if (static_cast<int>(w.point_map.size()) != d.num_points()) return "point map has the wrong length";
  std::vector<int> hits(hn, 0);
  for (int h : w.point_map) {
    if (h < 0 || h >= hn) return "point map leaves the host";
    if (++hits[h] > 1) return "point map is not injective";
  }
  std::vector<int> expected_deleted;
  for (int h = 0; h < hn; ++h)
    if (hits[h] == 0) expected_deleted.push_back(h);
  std::vector<int> deleted = w.deleted;
  std::sort(deleted.begin(), deleted.end());
  if (deleted != expected_deleted) return "deleted set is not the complement of the image";
  if (host.num_blocks() == 0) return "host has no lines";
  const int host_q = static_cast<int>(host.block(0).size()) - 1;
  if (static_cast<int>(deleted.size()) != host_q + 1)
    return "deleted set has " + Str(static_cast<int>(deleted.size())) + " points";

  std::vector<int> owner(host.num_blocks(), -1);
  for (int x = 0; x < d.num_blocks(); ++x) {
    Bitset image(hn);
    for (int p : d.block(x)) image.set(w.point_map[p]);
    int containing = 0, which = -1;
    for (int b = 0; b < host.num_blocks(); ++b) {
      if (image.is_subset_of(host.block_points(b))) {
        ++containing;
        which = b;
      }
    }
    if (containing != 1) return "line " + Str(x) + " lies in " + Str(containing) + " host lines";
    if (owner[which] >= 0) return "lines " + Str(owner[which]) + " and " + Str(x) + " share a host line";
    owner[which] = x;
  }
  return std::nullopt;
}

std::vector<int> HostedLineSizes(const IncidenceStructure& d, const EmbeddingWitness& w,
                                 int host_point) {
  std::vector<int> in_image(w.host.num_points(), 0);
  for (int h : w.point_map) in_image[h] = 1;
  (void)d;
  std::vector<int> sizes;
  for (int b : w.host.pencil(host_point)) {
    int size = 0;
    for (int h : w.host.block(b)) size += in_image[h];
    if (size >= 2) sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

FourPointSpace Q2SpecialClassify(const IncidenceStructure& d) {
  auto out_of_scope = [](const std::string& why) { throw Error(ErrorCode::kNotInScope, why); };
  if (d.num_points() != 4) out_of_scope(Str(d.num_points()) + " points");
  if (!Validate(d).is_linear_space) out_of_scope("not a linear space");
  for (int p = 0; p < 4; ++p)
    if (d.degree(p) > 3) out_of_scope("pencil larger than 3");
  std::map<int, int> sizes;
  for (const auto& b : d.blocks()) sizes[static_cast<int>(b.size())]++;
  if (sizes == std::map<int, int>{{2, 6}}) return FourPointSpace::kAffinePlaneOfOrder2;
  if (sizes == std::map<int, int>{{2, 3}, {3, 1}}) {
    // The size-3 line makes three of the four points collinear.
    bool quadrangle = true;
    for (const auto& b : d.blocks())
      if (b.size() >= 3) quadrangle = false;
    if (quadrangle) throw Error(ErrorCode::kInternalCheckFailed, "near pencil contains a quadrangle");
    return FourPointSpace::kNearPencilStructure;
  }
  out_of_scope("line sizes do not match either four-point space");
  return FourPointSpace::kAffinePlaneOfOrder2;
}

}  // namespace unital
