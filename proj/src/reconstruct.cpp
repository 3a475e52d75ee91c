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

#include "unital/reconstruct.hpp"

#include <algorithm>
#include <map>

#include "unital/error.hpp"

namespace unital {

namespace {

std::string Str(int v) { return std::to_string(v); }

[[noreturn]] void NotUnitalGraph(const std::string& why) {
  throw Error(ErrorCode::kNotAUnitalGraph, why);
}

// Connected components of the complement, each sorted; empty unless every
// component is a triangle.
std::vector<std::vector<int>> ComplementTriangles(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<int> comp{v};
    seen[v] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int w = 0; w < n; ++w) {
        if (w != comp[i] && !g.adjacent(comp[i], w) && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    if (comp.size() != 3) return {};
    for (int a : comp)
      for (int b : comp)
        if (a != b && g.adjacent(a, b)) return {};
    out.push_back(std::move(comp));
  }
  return out;
}

Reconstruction OrderTwo(const Graph& g) {
  const auto triangles = ComplementTriangles(g);
  if (triangles.size() != 4) NotUnitalGraph("12-vertex graph is not K_{3,3,3,3}");
  Reconstruction r;
  r.q = 2;
  r.order_two_shortcut = true;
  r.structure = AffinePlane(3);
  // Parallel classes of AG(2,3) in order of their first line.
  const IncidenceStructure& s = r.structure;
  std::vector<std::vector<int>> classes;
  std::vector<int> cls(s.num_blocks(), -1);
  for (int b = 0; b < s.num_blocks(); ++b) {
    if (cls[b] >= 0) continue;
    classes.push_back({});
    for (int x = b; x < s.num_blocks(); ++x) {
      if (cls[x] < 0 && (x == b || !s.block_points(b).intersects(s.block_points(x)))) {
        cls[x] = static_cast<int>(classes.size()) - 1;
        classes.back().push_back(x);
      }
    }
  }
  r.vertex_block.assign(g.num_vertices(), -1);
  for (std::size_t t = 0; t < triangles.size(); ++t)
    for (std::size_t i = 0; i < 3; ++i) r.vertex_block[triangles[t][i]] = classes[t][i];
  return r;
}

class IsoSearch {
 public:
  IsoSearch(const IncidenceStructure& a, const IncidenceStructure& b) : a_(a), b_(b) {
    const int n = a.num_points();
    mult_a_ = PairMultiplicity(a);
    mult_b_ = PairMultiplicity(b);
    sig_a_ = Signatures(a);
    sig_b_ = Signatures(b);
    phi_.assign(n, -1);
    used_.assign(n, false);
    // Static order: next point shares blocks with the most already-ordered
    // points; lowest index on ties.
    std::vector<int> links(n, 0);
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int x = 0; x < n; ++x)
        if (!placed[x] && (best < 0 || links[x] > links[best])) best = x;
      placed[best] = true;
      order_.push_back(best);
      for (int y = 0; y < n; ++y)
        if (mult_a_[best * n + y] > 0) ++links[y];
    }
  }

  std::optional<std::vector<int>> Run() {
    if (Step(0)) return phi_;
    return std::nullopt;
  }

 private:
  static std::vector<int> PairMultiplicity(const IncidenceStructure& s) {
    const int n = s.num_points();
    std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
    for (const auto& blk : s.blocks())
      for (int x : blk)
        for (int y : blk)
          if (x != y) m[x * n + y]++;
    return m;
  }

  static std::vector<std::vector<int>> Signatures(const IncidenceStructure& s) {
    std::vector<std::vector<int>> sig(s.num_points());
    for (int p = 0; p < s.num_points(); ++p) {
      for (int b : s.pencil(p)) sig[p].push_back(static_cast<int>(s.block(b).size()));
      std::sort(sig[p].begin(), sig[p].end());
    }
    return sig;
  }

  bool Consistent(int x, int h) const {
    const int n = a_.num_points();
    if (used_[h] || sig_a_[x] != sig_b_[h]) return false;
    for (int y = 0; y < n; ++y)
      if (phi_[y] >= 0 && mult_a_[x * n + y] != mult_b_[h * n + phi_[y]]) return false;
    for (int blk : a_.pencil(x)) {
      Bitset through = b_.pencil_blocks(h);
      bool any_mapped = false;
      for (int y : a_.block(blk)) {
        if (y == x || phi_[y] < 0) continue;
        any_mapped = true;
        through &= b_.pencil_blocks(phi_[y]);
      }
      if (!any_mapped) continue;
      bool fits = false;
      const std::size_t size = a_.block(blk).size();
      through.for_each([&](int c) { fits = fits || b_.block(c).size() == size; });
      if (!fits) return false;
    }
    return true;
  }

  bool Complete() const {
    for (const auto& blk : a_.blocks()) {
      Block image;
      for (int x : blk) image.push_back(phi_[x]);
      std::sort(image.begin(), image.end());
      if (!b_.FindBlock(image)) return false;
    }
    return true;
  }

  bool Step(std::size_t depth) {
    if (depth == order_.size()) return Complete();
    const int x = order_[depth];
    const int n = a_.num_points();
    auto attempt = [&](int h) {
      if (!Consistent(x, h)) return false;
      phi_[x] = h;
      used_[h] = true;
      if (Step(depth + 1)) return true;
      phi_[x] = -1;
      used_[h] = false;
      return false;
    };
    if (attempt(x)) return true;
    for (int h = 0; h < n; ++h)
      if (h != x && attempt(h)) return true;
    return false;
  }

  const IncidenceStructure& a_;
  const IncidenceStructure& b_;
  std::vector<int> mult_a_, mult_b_;
  std::vector<std::vector<int>> sig_a_, sig_b_;
  std::vector<int> order_;
  std::vector<int> phi_;
  std::vector<bool> used_;
};

}  // namespace

Reconstruction ReconstructUnital(const Graph& g) {
  const auto q_opt = InferOrder(g);
  if (!q_opt) NotUnitalGraph("vertex count and degree do not match any unital order");
  const int q = *q_opt;
  if (q == 2) return OrderTwo(g);

  Reconstruction r;
  r.q = q;
  r.points = EnumerateMaximalCliques(g, q * q);
  for (const auto& c : r.points)
    if (static_cast<int>(c.size()) != q * q)
      NotUnitalGraph("clique of size " + Str(static_cast<int>(c.size())) + " exceeds q^2");
  if (static_cast<int>(r.points.size()) != q * q * q + 1)
    NotUnitalGraph(Str(static_cast<int>(r.points.size())) + " cliques of size q^2, expected " +
                   Str(q * q * q + 1));

  std::vector<Block> blocks(g.num_vertices());
  for (int j = 0; j < static_cast<int>(r.points.size()); ++j)
    for (int v : r.points[j]) blocks[v].push_back(j);
  try {
    r.structure = IncidenceStructure::FromUnsorted(static_cast<int>(r.points.size()), blocks);
  } catch (const Error& e) {
    NotUnitalGraph(std::string("clique incidence is not a design: ") + e.what());
  }
  r.vertex_block.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::sort(blocks[v].begin(), blocks[v].end());
    r.vertex_block[v] = *r.structure.FindBlock(blocks[v]);
  }
  if (UnitalOrder(r.structure) != q) NotUnitalGraph("rebuilt structure is not a unital of order " + Str(q));
  return r;
}

std::vector<int> ExtendGraphIsomorphism(const std::vector<int>& beta, const IncidenceStructure& s,
                                        const IncidenceStructure& s2) {
  const auto q = UnitalOrder(s);
  const auto q2 = UnitalOrder(s2);
  if (!q || !q2) throw Error(ErrorCode::kPreconditionViolation, "inputs must be unitals");
  if (*q <= 2) throw Error(ErrorCode::kPreconditionViolation, "pencil recognition needs q > 2");

  const int nb = s.num_blocks();
  if (static_cast<int>(beta.size()) != nb || s2.num_blocks() != nb)
    throw Error(ErrorCode::kNotAGraphIsomorphism, "block counts differ");
  std::vector<bool> hit(nb, false);
  for (int b : beta) {
    if (b < 0 || b >= nb || hit[b]) throw Error(ErrorCode::kNotAGraphIsomorphism, "not a bijection");
    hit[b] = true;
  }
  const Graph g = BuildConfluence(s);
  const Graph g2 = BuildConfluence(s2);
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j)
      if (g.adjacent(i, j) != g2.adjacent(beta[i], beta[j]))
        throw Error(ErrorCode::kNotAGraphIsomorphism,
                    "adjacency of blocks " + Str(i) + ", " + Str(j) + " not preserved");

  std::map<std::vector<int>, int> pencil_owner;
  for (int p = 0; p < s2.num_points(); ++p) pencil_owner.emplace(s2.pencil(p), p);
  std::vector<int> point_map(s.num_points());
  for (int p = 0; p < s.num_points(); ++p) {
    std::vector<int> image;
    for (int b : s.pencil(p)) image.push_back(beta[b]);
    std::sort(image.begin(), image.end());
    const auto it = pencil_owner.find(image);
    if (it == pencil_owner.end())
      throw Error(ErrorCode::kPencilImageNotAPencil, "pencil of point " + Str(p));
    point_map[p] = it->second;
  }
  for (int b = 0; b < nb; ++b) {
    Block image;
    for (int p : s.block(b)) image.push_back(point_map[p]);
    std::sort(image.begin(), image.end());
    if (image != s2.block(beta[b]))
      throw Error(ErrorCode::kInternalCheckFailed, "extended map does not carry block " + Str(b));
  }
  return point_map;
}

std::optional<std::vector<int>> Isomorphic(const IncidenceStructure& a, const IncidenceStructure& b) {
  if (a.num_points() != b.num_points() || a.num_blocks() != b.num_blocks()) return std::nullopt;
  auto degrees = [](const IncidenceStructure& s) {
    std::vector<int> d;
    for (int p = 0; p < s.num_points(); ++p) d.push_back(s.degree(p));
    std::sort(d.begin(), d.end());
    return d;
  };
  auto sizes = [](const IncidenceStructure& s) {
    std::vector<std::size_t> d;
    for (const auto& blk : s.blocks()) d.push_back(blk.size());
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b) || sizes(a) != sizes(b)) return std::nullopt;
  return IsoSearch(a, b).Run();
}

}  // namespace unital
