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

#include "unital/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "unital/error.hpp"

namespace unital {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void ParseFail(const std::string& why) { throw Error(ErrorCode::kParseError, why); }

template <typename Seq>
void WriteIntArray(std::ostream& os, const Seq& xs) {
  os << '[';
  bool first = true;
  for (int x : xs) {
    if (!first) os << ", ";
    first = false;
    os << x;
  }
  os << ']';
}

void WriteIncidence(std::ostream& os, const IncidenceStructure& s, const std::string& indent) {
  os << "{\n";
  os << indent << "  \"format\": \"incidence-v1\",\n";
  os << indent << "  \"num_points\": " << s.num_points() << ",\n";
  os << indent << "  \"blocks\": [";
  for (int b = 0; b < s.num_blocks(); ++b) {
    os << (b == 0 ? "\n" : ",\n") << indent << "    ";
    WriteIntArray(os, s.block(b));
  }
  os << (s.num_blocks() == 0 ? "]" : "\n" + indent + "  ]");
  if (!s.labels().empty()) {
    os << ",\n" << indent << "  \"labels\": [";
    for (std::size_t i = 0; i < s.labels().size(); ++i)
      os << (i == 0 ? "" : ", ") << json(s.labels()[i]).dump();
    os << ']';
  }
  os << '\n' << indent << '}';
}

std::vector<int> IntArray(const json& j, const std::string& what) {
  if (!j.is_array()) ParseFail(what + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) ParseFail(what + " must contain integers");
    out.push_back(x.get<int>());
  }
  return out;
}

IncidenceStructure IncidenceFromJson(const json& j) {
  if (!j.is_object()) ParseFail("incidence document must be an object");
  if (!j.contains("format") || j["format"] != "incidence-v1") ParseFail("format must be incidence-v1");
  if (!j.contains("num_points") || !j["num_points"].is_number_integer() || j["num_points"].get<long long>() < 0)
    ParseFail("num_points must be a non-negative integer");
  if (!j.contains("blocks") || !j["blocks"].is_array()) ParseFail("blocks must be an array");
  std::vector<Block> blocks;
  for (const auto& b : j["blocks"]) blocks.push_back(IntArray(b, "block"));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) ParseFail("labels must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) ParseFail("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != j["num_points"].get<std::size_t>()) ParseFail("labels length differs from num_points");
  }
  try {
    return IncidenceStructure(j["num_points"].get<int>(), std::move(blocks), std::move(labels));
  } catch (const Error& e) {
    ParseFail(e.what());
  }
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    ParseFail(e.what());
  }
}

}  // namespace

IncidenceStructure ParseIncidenceJson(std::string_view text) { return IncidenceFromJson(ParseJson(text)); }

std::string ToIncidenceJson(const IncidenceStructure& s) {
  std::ostringstream os;
  WriteIncidence(os, s, "");
  os << '\n';
  return os.str();
}

std::string ToEmbeddingJson(const EmbeddingWitness& w) {
  std::ostringstream os;
  os << "{\n  \"host\": ";
  WriteIncidence(os, w.host, "  ");
  os << ",\n  \"point_map\": ";
  WriteIntArray(os, w.point_map);
  os << ",\n  \"deleted\": ";
  WriteIntArray(os, w.deleted);
  os << "\n}\n";
  return os.str();
}

EmbeddingWitness ParseEmbeddingJson(std::string_view text) {
  const json j = ParseJson(text);
  if (!j.is_object() || !j.contains("host") || !j.contains("point_map") || !j.contains("deleted"))
    ParseFail("embedding must have host, point_map and deleted");
  EmbeddingWitness w;
  w.host = IncidenceFromJson(j["host"]);
  w.point_map = IntArray(j["point_map"], "point_map");
  w.deleted = IntArray(j["deleted"], "deleted");
  return w;
}

std::string ToCliqueReportJson(std::vector<CliqueClassification> cliques) {
  std::sort(cliques.begin(), cliques.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.clique < b.clique;
  });
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const auto& c = cliques[i];
    ordered_json entry;
    entry["blocks"] = c.clique;
    entry["size"] = c.size();
    entry["tag"] = std::string(CliqueTagName(c.tag));
    if (c.tag != CliqueTag::kOther && c.point) entry["point"] = *c.point;
    if (c.line) entry["line"] = *c.line;
    if (!c.note.empty()) entry["note"] = c.note;
    os << (i == 0 ? "\n  " : ",\n  ") << entry.dump();
  }
  os << (cliques.empty() ? "]\n" : "\n]\n");
  return os.str();
}

Graph ParseDimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string comments;
  bool have_header = false;
  long long n = 0, m = 0, seen = 0;
  Graph g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (line.empty()) continue;
    if (line[0] == 'c') {
      if (!comments.empty()) comments += '\n';
      comments += line.size() > 2 ? line.substr(2) : "";
      continue;
    }
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string kind;
      if (have_header) ParseFail(where + "duplicate header");
      if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0) ParseFail(where + "bad header");
      if (n > 10000) ParseFail(where + "graph too large for dense rows");
      g = Graph(static_cast<int>(n));
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) ParseFail(where + "edge before header");
      long long i = 0, j = 0;
      if (!(ls >> i >> j)) ParseFail(where + "bad edge");
      if (i < 1 || j < 1 || i > n || j > n) ParseFail(where + "vertex out of range");
      if (i == j) ParseFail(where + "self-loop");
      if (g.adjacent(static_cast<int>(i - 1), static_cast<int>(j - 1))) ParseFail(where + "duplicate edge");
      g.AddEdge(static_cast<int>(i - 1), static_cast<int>(j - 1));
      ++seen;
    } else {
      ParseFail(where + "unknown line type '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) ParseFail(where + "trailing tokens");
  }
  if (!have_header) ParseFail("missing 'p edge' header");
  if (seen != m) ParseFail("header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
  g.provenance = comments;
  return g;
}

std::string ToDimacs(const Graph& g) {
  std::ostringstream os;
  if (!g.provenance.empty()) {
    std::istringstream lines(g.provenance);
    for (std::string l; std::getline(lines, l);) os << "c " << l << '\n';
  }
  const auto edges = g.Edges();
  os << "p edge " << g.num_vertices() << ' ' << edges.size() << '\n';
  for (const auto& [i, j] : edges) os << "e " << i + 1 << ' ' << j + 1 << '\n';
  return os.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace unital
