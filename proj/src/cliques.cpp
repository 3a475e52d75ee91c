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

#include "unital/cliques.hpp"

#include <algorithm>
#include <cstdint>

#include "unital/error.hpp"

namespace unital {

namespace {

int ChoosePivot(const Graph& g, const Bitset& cands) {
  int best = Bitset::kNone, best_count = -1;
  cands.for_each([&](int u) {
    const int c = g.neighbors(u).intersection_count(cands);
    if (c > best_count) {
      best = u;
      best_count = c;
    }
  });
  return best;
}

class Enumerator {
 public:
  Enumerator(const Graph& g, const std::function<void(const Clique&)>& visit, int min_size)
      : g_(g), visit_(visit), min_size_(min_size) {}

  void Run() {
    const int n = g_.num_vertices();
    if (n == 0) return;
    Bitset all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    Expand(all, Bitset(n));
  }

 private:
  void Expand(Bitset cands, Bitset excluded) {
    if (cands.none()) {
      if (excluded.none() && static_cast<int>(current_.size()) >= min_size_) {
        Clique c = current_;
        std::sort(c.begin(), c.end());
        visit_(c);
      }
      return;
    }
    if (static_cast<int>(current_.size()) + cands.count() < min_size_) return;
    const int pivot = ChoosePivot(g_, cands);
    const Bitset branch = cands - g_.neighbors(pivot);
    branch.for_each([&](int v) {
      current_.push_back(v);
      Expand(cands & g_.neighbors(v), excluded & g_.neighbors(v));
      current_.pop_back();
      cands.reset(v);
      excluded.set(v);
    });
  }

  const Graph& g_;
  const std::function<void(const Clique&)>& visit_;
  int min_size_;
  Clique current_;
};

void MaxSearch(const Graph& g, Bitset cands, int depth, int& best) {
  if (cands.none()) {
    best = std::max(best, depth);
    return;
  }
  if (depth + cands.count() <= best) return;
  const int pivot = ChoosePivot(g, cands);
  const Bitset branch = cands - g.neighbors(pivot);
  for (int v = branch.first(); v != Bitset::kNone; v = branch.next(v + 1)) {
    if (depth + cands.count() <= best) return;
    MaxSearch(g, cands & g.neighbors(v), depth + 1, best);
    cands.reset(v);
  }
}

// Visits every clique once (members in increasing order); `common` holds
// all vertices adjacent to every member, so the clique is maximal iff it is
// empty.
void NaiveExtend(const std::vector<std::uint64_t>& adj, int n, std::uint64_t clique,
                 std::uint64_t common, int last, std::vector<Clique>& out) {
  if (common == 0) {
    Clique c;
    for (int v = 0; v < n; ++v)
      if (clique >> v & 1) c.push_back(v);
    out.push_back(std::move(c));
  }
  for (int v = last + 1; v < n; ++v)
    if (common >> v & 1)
      NaiveExtend(adj, n, clique | std::uint64_t{1} << v, common & adj[v], v, out);
}

}  // namespace

void ForEachMaximalClique(const Graph& g, const std::function<void(const Clique&)>& visit,
                          int min_size) {
  Enumerator(g, visit, min_size).Run();
}

std::vector<Clique> EnumerateMaximalCliques(const Graph& g, int min_size) {
  std::vector<Clique> out;
  ForEachMaximalClique(g, [&](const Clique& c) { out.push_back(c); }, min_size);
  std::sort(out.begin(), out.end());
  return out;
}

int MaxCliqueSize(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return 0;
  Bitset all(n);
  for (int v = 0; v < n; ++v) all.set(v);
  int best = 0;
  MaxSearch(g, all, 0, best);
  return best;
}

std::vector<Clique> NaiveMaximalCliques(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 64) throw Error(ErrorCode::kGraphTooLarge, "reference enumerator handles n <= 64");
  std::vector<std::uint64_t> adj(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) adj[i] |= std::uint64_t{1} << j;
  std::vector<Clique> out;
  for (int v = 0; v < n; ++v) NaiveExtend(adj, n, std::uint64_t{1} << v, adj[v], v, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view CliqueTagName(CliqueTag tag) {
  switch (tag) {
    case CliqueTag::kPencil: return "pencil";
    case CliqueTag::kNearPencil: return "near_pencil";
    case CliqueTag::kOther: return "other";
  }
  return "other";
}

CliqueClassification ClassifyClique(const IncidenceStructure& s, Clique clique) {
  std::sort(clique.begin(), clique.end());
  clique.erase(std::unique(clique.begin(), clique.end()), clique.end());
  for (int b : clique)
    if (b < 0 || b >= s.num_blocks()) throw Error(ErrorCode::kInvalidArgument, "block out of range");
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (!s.block_points(clique[i]).intersects(s.block_points(clique[j])))
        throw Error(ErrorCode::kNotAClique, "blocks " + std::to_string(clique[i]) + " and " +
                                                std::to_string(clique[j]) + " are disjoint");

  CliqueClassification out;
  out.clique = clique;
  if (clique.empty()) return out;

  Bitset common = s.block_points(clique.front());
  for (int b : clique) common &= s.block_points(b);
  if (common.any()) {
    for (int p = common.first(); p != Bitset::kNone; p = common.next(p + 1)) {
      if (s.pencil(p) == clique) {
        out.tag = CliqueTag::kPencil;
        out.point = p;
        return out;
      }
    }
    out.note = "sub-pencil";
    return out;
  }

  // Near pencil (p, L): p lies on every member except L.
  for (int line : clique) {
    Bitset apex(s.num_points());
    for (int p = 0; p < s.num_points(); ++p) apex.set(p);
    for (int b : clique)
      if (b != line) apex &= s.block_points(b);
    apex -= s.block_points(line);
    for (int p = apex.first(); p != Bitset::kNone; p = apex.next(p + 1)) {
      std::vector<int> np;
      try {
        np = NearPencil(s, p, line);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNotLinearSpace) throw;
        continue;
      }
      if (np == clique) {
        out.tag = CliqueTag::kNearPencil;
        out.point = p;
        out.line = line;
        return out;
      }
    }
  }
  return out;
}

StarReport VerifyStarProperty(const IncidenceStructure& s, const Clique& clique, int q) {
  if (static_cast<int>(clique.size()) != q * q)
    throw Error(ErrorCode::kWrongCliqueSize, "expected " + std::to_string(q * q) + " blocks, got " +
                                                 std::to_string(clique.size()));
  StarReport r;
  r.expected_meets = q + 1;
  Bitset members(s.num_blocks());
  for (int b : clique) members.set(b);
  r.pass = true;
  for (int b = 0; b < s.num_blocks(); ++b) {
    if (members.test(b)) continue;
    int meets = 0;
    for (int c : clique)
      if (s.block_points(b).intersects(s.block_points(c))) ++meets;
    r.meet_histogram[meets]++;
    if (meets != q + 1) {
      r.pass = false;
      if (!r.first_failure) r.first_failure = b;
    }
  }
  return r;
}

}  // namespace unital
