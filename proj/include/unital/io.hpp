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

#ifndef UNITAL_IO_HPP_
#define UNITAL_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "unital/cliques.hpp"
#include "unital/confluence.hpp"
#include "unital/incidence.hpp"
#include "unital/linspace.hpp"

namespace unital {

// incidence-v1:
//   {"format": "incidence-v1", "num_points": N,
//    "blocks": [[...], ...], "labels": [...]}
// Blocks are 0-based, strictly increasing, listed in lexicographic order;
// labels are optional. Parsing rejects anything else with kParseError or
// kMalformedStructure.
IncidenceStructure ParseIncidenceJson(std::string_view text);
std::string ToIncidenceJson(const IncidenceStructure& s);

// {"host": incidence-v1, "point_map": [...], "deleted": [...]}
std::string ToEmbeddingJson(const EmbeddingWitness& w);
EmbeddingWitness ParseEmbeddingJson(std::string_view text);

// Array of {"blocks", "size", "tag", "point"?, "line"?}, sorted by size
// descending and then by blocks.
std::string ToCliqueReportJson(std::vector<CliqueClassification> cliques);

// DIMACS edge format: optional "c" comment lines (carrying provenance),
// "p edge N M", then "e I J" per edge with 1-based I < J. Writing emits edges
// in lexicographic order, so write(parse(text)) == text for our own output.
Graph ParseDimacs(std::string_view text);
std::string ToDimacs(const Graph& g);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace unital

#endif  // UNITAL_IO_HPP_
