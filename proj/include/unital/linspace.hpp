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

#ifndef UNITAL_LINSPACE_HPP_
#define UNITAL_LINSPACE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "unital/incidence.hpp"

namespace unital {

// Linear spaces on q^2 points whose pencils and lines have at most q+1
// members. Every such space with q >= 3 is a projective plane of order q
// minus q+1 points; the routines here classify which of the three shapes
// occurs and rebuild the plane explicitly.

// An injection of a space's points into a projective plane carrying lines
// into distinct host lines. `deleted` lists the host points not hit.
struct EmbeddingWitness {
  IncidenceStructure host;
  std::vector<int> point_map;
  std::vector<int> deleted;
};

enum class LinSpaceCase { kAffinePlane, kThinPoint, kFullPencils };

std::string_view LinSpaceCaseName(LinSpaceCase c);

struct LinSpaceClass {
  int q = 0;
  LinSpaceCase kind = LinSpaceCase::kAffinePlane;
  std::optional<int> thin_point;   // kThinPoint only
  std::optional<int> short_line;   // the unique q-point line through it
  int line_count = 0;
  std::vector<int> projective_lines;
  std::optional<EmbeddingWitness> embedding;
};

struct AssumptionViolation {
  std::string condition;  // "point-count", "linear-space", "pencil-size", "line-size"
  int witness = -1;       // offending point or block, -1 when global
  std::string detail;
};

struct AssumptionReport {
  bool pass = true;
  std::vector<AssumptionViolation> violations;
};

AssumptionReport CheckAssumptions(const IncidenceStructure& d, int q);

// Blocks with q+1 points. Each must meet every block; throws
// kLemmaViolation otherwise.
std::vector<int> FindProjectiveLines(const IncidenceStructure& d, int q);

// Points whose pencil has at most q blocks. Throws kLemmaViolation unless
// there is at most one, with exactly q blocks of which one has q points and
// the rest q+1.
std::vector<int> ThinPoints(const IncidenceStructure& d, int q);

// Throws kQTooSmall for q < 3 and kAssumptionViolation when
// CheckAssumptions fails. With `embed`, attaches the matching completion;
// full-pencil spaces above q = 4 are left without a witness.
LinSpaceClass Classify(const IncidenceStructure& d, int q, bool embed = true);

// Projective completion of an affine plane: one new point per parallel class
// and a line through all of them. Throws kNotAffinePlane.
EmbeddingWitness CompleteAffine(const IncidenceStructure& d);

// Swaps the thin point u for a new point on the lines missing its short
// line, completes the resulting affine plane and maps u to the point at
// infinity of the short line. Throws kPreconditionViolation if u is not the
// thin point, kConstructionFailed if the swap does not give an affine plane.
EmbeddingWitness CompleteThinPoint(const IncidenceStructure& d, int q, int u);

// Backtracking search for an embedding into PG(2,q), q <= 4, for spaces with
// q^2+q+1 lines and all pencils of size q+1. Verifies that no q deleted
// points are collinear and each deleted point is on a q-point line of d.
EmbeddingWitness EmbedFullPencils(const IncidenceStructure& d, int q);

// Independent check of a witness: injective map, each line of d inside
// exactly one host line, distinct lines on distinct host lines, deleted set
// is the complement of the image with host-line-size many points. Returns the
// first failure, or nullopt when valid.
std::optional<std::string> VerifyEmbedding(const IncidenceStructure& d, const EmbeddingWitness& w);

// Sizes (in points of d) of the host lines through `host_point` that carry at
// least two points of d, ascending.
std::vector<int> HostedLineSizes(const IncidenceStructure& d, const EmbeddingWitness& w,
                                 int host_point);

enum class FourPointSpace { kAffinePlaneOfOrder2, kNearPencilStructure };

// The two linear spaces on four points with pencils and lines of size <= 3.
// Throws kNotInScope for anything else.
FourPointSpace Q2SpecialClassify(const IncidenceStructure& d);

}  // namespace unital

#endif  // UNITAL_LINSPACE_HPP_
