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

#include "unital/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "unital/cliques.hpp"
#include "unital/confluence.hpp"
#include "unital/error.hpp"
#include "unital/incidence.hpp"
#include "unital/io.hpp"
#include "unital/linspace.hpp"
#include "unital/reconstruct.hpp"

namespace unital {

namespace {

// A checked property did not hold.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool IsVerificationFailure(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLemmaViolation:
    case ErrorCode::kNoEmbeddingFound:
    case ErrorCode::kInternalCheckFailed:
    case ErrorCode::kNotAUnitalGraph:
    case ErrorCode::kPencilImageNotAPencil:
    case ErrorCode::kConstructionFailed:
      return true;
    default:
      return false;
  }
}

void Emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-")
    out << contents;
  else
    WriteFile(path, contents);
}

bool LooksLikeJson(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

std::string BaseName(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

std::vector<int> ParseIndexList(const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad point index '" + tok + "' in --delete");
    }
  }
  return out;
}

// Named deletion sets in PG(2,q): the line x0 = 0; that line minus (0:0:1)
// plus (1:0:0); the conic {(1:t:t^2)} + {(0:0:1)}.
std::vector<int> NamedDeletion(const std::string& name, int q) {
  const auto pp = AsPrimePower(q);
  if (!pp) throw Error(ErrorCode::kNotPrimePower, std::to_string(q) + " is not a prime power");
  const Field f = Field::Create(pp->prime, pp->exponent);
  std::vector<int> out;
  if (name == "line") {
    for (int i = 0; i <= q; ++i) out.push_back(i);
  } else if (name == "line-swap") {
    for (int i = 1; i <= q + 1; ++i) out.push_back(i);
  } else if (name == "conic") {
    for (int t = 0; t < q; ++t) out.push_back(ProjectivePointIndex(f, {1, t, f.Mul(t, t)}));
    out.push_back(ProjectivePointIndex(f, {0, 0, 1}));
    std::sort(out.begin(), out.end());
  } else {
    return ParseIndexList(name);
  }
  return out;
}

IncidenceStructure LoadIncidence(const std::string& path) { return ParseIncidenceJson(ReadFile(path)); }

// DIMACS or incidence-v1 (turned into its confluence graph).
Graph LoadGraph(const std::string& path) {
  const std::string text = ReadFile(path);
  if (LooksLikeJson(text)) return BuildConfluence(ParseIncidenceJson(text));
  return ParseDimacs(text);
}

std::string Join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

struct Options {
  std::string kind, input, input2, output, del, in_file, verify, json_path;
  int q = 0;
  int expect_unital = 0;
  std::size_t limit = 0;
  bool classify = false, max_only = false, expect_none = false, embed = false;
};

int CmdBuild(const Options& o, std::ostream& out) {
  IncidenceStructure s;
  if (o.kind == "hermitian") {
    s = HermitianUnital(o.q);
  } else if (o.kind == "pg") {
    s = ProjectivePlane(o.q);
  } else if (o.kind == "ag") {
    s = AffinePlane(o.q);
  } else {
    if (o.del.empty()) throw UsageError("puncture needs --delete");
    if (!o.in_file.empty()) {
      s = Puncture(LoadIncidence(o.in_file), ParseIndexList(o.del));
    } else {
      s = Puncture(ProjectivePlane(o.q), NamedDeletion(o.del, o.q));
    }
  }
  Emit(o.output, ToIncidenceJson(s), out);
  return kExitOk;
}

int CmdGraph(const Options& o, std::ostream& out) {
  Graph g = BuildConfluence(LoadIncidence(o.input));
  g.provenance = "confluence graph of " + BaseName(o.input) + "; vertex i is block i-1";
  Emit(o.output, ToDimacs(g), out);
  return kExitOk;
}

int CmdSrg(const Options& o, std::ostream& out) {
  const Graph g = LoadGraph(o.input);
  const auto params = SrgCheck(g);
  if (!params) {
    out << "not strongly regular\n";
    if (o.expect_unital > 0) throw CheckFailed("graph is not strongly regular");
    return kExitOk;
  }
  out << "v=" << params->v << " k=" << params->k << " lambda=" << params->lambda << " mu=" << params->mu;
  if (params->r && params->s) {
    out << " r=" << *params->r << " s=" << *params->s;
    if (*params->s < 0) out << " hoffman=" << HoffmanBound(*params).ToString();
  } else {
    out << " eigenvalues irrational (discriminant " << params->discriminant() << ")";
  }
  out << '\n';
  if (o.expect_unital > 0) {
    const SrgParams want = ExpectedUnitalParams(o.expect_unital);
    if (!(want == *params)) throw CheckFailed("parameters differ from a unital of order " + std::to_string(o.expect_unital));
    out << "matches unital of order " << o.expect_unital << '\n';
  }
  return kExitOk;
}

int CmdCliques(const Options& o, std::ostream& out) {
  const std::string text = ReadFile(o.input);
  const bool is_structure = LooksLikeJson(text);
  if (!is_structure && (o.classify || !o.json_path.empty()))
    throw UsageError("--classify and --json need an incidence-v1 input");
  std::optional<IncidenceStructure> s;
  Graph g;
  if (is_structure) {
    s = ParseIncidenceJson(text);
    g = BuildConfluence(*s);
  } else {
    g = ParseDimacs(text);
  }
  std::vector<Clique> cliques = EnumerateMaximalCliques(g);
  if (o.max_only && !cliques.empty()) {
    std::size_t best = 0;
    for (const auto& c : cliques) best = std::max(best, c.size());
    std::erase_if(cliques, [&](const Clique& c) { return c.size() != best; });
  }

  std::map<int, int> by_size;
  for (const auto& c : cliques) by_size[static_cast<int>(c.size())]++;
  out << "maximal cliques: " << cliques.size() << '\n';
  for (auto it = by_size.rbegin(); it != by_size.rend(); ++it)
    out << "  size " << it->first << ": " << it->second << '\n';
  if (!s) return kExitOk;

  std::vector<CliqueClassification> tagged;
  std::map<std::string, int> by_tag;
  for (const auto& c : cliques) {
    tagged.push_back(ClassifyClique(*s, c));
    by_tag[std::string(CliqueTagName(tagged.back().tag))]++;
  }
  for (const auto& [tag, n] : by_tag) out << "  " << tag << ": " << n << '\n';
  if (!o.json_path.empty()) WriteFile(o.json_path, ToCliqueReportJson(tagged));

  if (o.classify) {
    const auto q = UnitalOrder(*s);
    if (!q || *q <= 2) {
      out << "classification checks apply to unitals of order > 2; none run\n";
      return kExitOk;
    }
    const int qq = *q * *q;
    int big = 0;
    for (const auto& c : tagged) {
      if (c.size() > qq) throw CheckFailed("clique larger than q^2");
      if (c.size() == qq) {
        ++big;
        if (c.tag != CliqueTag::kPencil) throw CheckFailed("clique of size q^2 that is not a pencil");
      }
    }
    if (!o.max_only || big > 0) {
      if (big != *q * qq + 1) throw CheckFailed("expected q^3+1 cliques of size q^2, found " + std::to_string(big));
      out << "check: all " << big << " cliques of size " << qq << " are pencils\n";
    }
    if (FindOnan(*s, 1).empty()) {
      for (const auto& c : tagged) {
        if (c.tag == CliqueTag::kOther) throw CheckFailed("O'Nan-free unital has a clique that is neither pencil nor near pencil");
        if (c.tag == CliqueTag::kNearPencil && c.size() != *q + 2) throw CheckFailed("near pencil of unexpected size");
      }
      out << "check: O'Nan-free; every maximal clique is a pencil or a near pencil\n";
    }
  }
  return kExitOk;
}

int CmdOnan(const Options& o, std::ostream& out) {
  const IncidenceStructure s = LoadIncidence(o.input);
  const auto found = FindOnan(s, o.limit);
  out << "O'Nan configurations: " << found.size() << (o.limit != 0 && found.size() == o.limit ? " (limit reached)" : "") << '\n';
  for (const auto& c : found)
    out << "  blocks " << Join({c.blocks.begin(), c.blocks.end()}) << " points "
        << Join({c.points.begin(), c.points.end()}) << '\n';
  if (o.expect_none && !found.empty()) throw CheckFailed("O'Nan configuration present");
  return kExitOk;
}

int CmdClassify(const Options& o, std::ostream& out) {
  const IncidenceStructure d = LoadIncidence(o.input);
  const LinSpaceClass c = Classify(d, o.q, o.embed);
  out << "case: " << LinSpaceCaseName(c.kind) << '\n';
  out << "lines: " << c.line_count << '\n';
  out << "projective lines: " << c.projective_lines.size() << '\n';
  if (c.thin_point) out << "thin point: " << *c.thin_point << " (short line " << *c.short_line << ")\n";
  if (o.embed) {
    if (!c.embedding) {
      out << "embedding: not attempted for q > 4\n";
    } else {
      if (auto failure = VerifyEmbedding(d, *c.embedding)) throw CheckFailed("embedding rejected: " + *failure);
      out << "embedding: host " << c.embedding->host.num_points() << " points, deleted " << Join(c.embedding->deleted)
          << '\n';
    }
  }
  if (!o.json_path.empty()) {
    nlohmann::ordered_json j;
    j["case"] = std::string(LinSpaceCaseName(c.kind));
    j["q"] = c.q;
    j["line_count"] = c.line_count;
    j["projective_lines"] = c.projective_lines;
    if (c.thin_point) {
      j["thin_point"] = *c.thin_point;
      j["short_line"] = *c.short_line;
    }
    if (c.embedding) j["embedding"] = nlohmann::ordered_json::parse(ToEmbeddingJson(*c.embedding));
    WriteFile(o.json_path, j.dump(2) + "\n");
  }
  return kExitOk;
}

int CmdReconstruct(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = ParseDimacs(ReadFile(o.input));
  const Reconstruction r = ReconstructUnital(g);
  Emit(o.output, ToIncidenceJson(r.structure), out);
  if (!o.verify.empty()) {
    const IncidenceStructure want = LoadIncidence(o.verify);
    if (!Isomorphic(r.structure, want)) throw CheckFailed("reconstruction is not isomorphic to " + o.verify);
    err << "verified: reconstruction of order " << r.q << " is isomorphic to " << BaseName(o.verify) << '\n';
  }
  return kExitOk;
}

int CmdIsomorphic(const Options& o, std::ostream& out) {
  const auto phi = Isomorphic(LoadIncidence(o.input), LoadIncidence(o.input2));
  if (!phi) {
    out << "none\n";
    return kExitCheckFailed;
  }
  out << "isomorphic\n";
  for (std::size_t i = 0; i < phi->size(); ++i) out << i << " -> " << (*phi)[i] << '\n';
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unitals, confluence graphs and embeddings of small linear spaces", "unital"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "Construct an incidence structure (incidence-v1 JSON)");
  build->add_option("kind", o.kind, "hermitian | pg | ag | puncture")
      ->required()
      ->check(CLI::IsMember({"hermitian", "pg", "ag", "puncture"}));
  build->add_option("--q", o.q, "Order parameter")->required();
  build->add_option("--delete", o.del, "line | line-swap | conic | IDX,IDX,...");
  build->add_option("--in", o.in_file, "Puncture this incidence-v1 file instead of PG(2,q)");
  build->add_option("-o,--output", o.output, "Output path (stdout if omitted)");

  auto* graph = app.add_subcommand("graph", "Write the confluence graph as DIMACS");
  graph->add_option("file", o.input)->required();
  graph->add_option("-o,--output", o.output, "Output path (stdout if omitted)");

  auto* srg = app.add_subcommand("srg", "Strongly regular parameters of a graph");
  srg->add_option("file", o.input, "DIMACS graph or incidence-v1 structure")->required();
  srg->add_option("--expect-unital", o.expect_unital, "Fail unless parameters match this unital order");

  auto* cliques = app.add_subcommand("cliques", "Enumerate and classify maximal cliques");
  cliques->add_option("file", o.input, "incidence-v1 structure or DIMACS graph")->required();
  cliques->add_flag("--classify", o.classify, "Check pencil / near-pencil structure");
  cliques->add_flag("--max-only", o.max_only, "Keep only cliques of maximum size");
  cliques->add_option("--json", o.json_path, "Write the clique report here");

  auto* onan = app.add_subcommand("onan", "Search O'Nan configurations");
  onan->add_option("file", o.input)->required();
  onan->add_option("--limit", o.limit, "Stop after this many (0 = all)");
  onan->add_flag("--expect-none", o.expect_none, "Fail if any configuration exists");

  auto* cls = app.add_subcommand("classify-linspace", "Classify a linear space on q^2 points");
  cls->add_option("file", o.input)->required();
  cls->add_option("--q", o.q)->required();
  cls->add_flag("--embed", o.embed, "Construct and verify an embedding witness");
  cls->add_option("--json", o.json_path, "Write the classification report here");

  auto* rec = app.add_subcommand("reconstruct", "Rebuild a unital from its confluence graph");
  rec->add_option("graph", o.input, "DIMACS graph")->required();
  rec->add_option("--verify", o.verify, "Check isomorphism with this incidence-v1 file");
  rec->add_option("-o,--output", o.output, "Output path (stdout if omitted)");

  auto* iso = app.add_subcommand("isomorphic", "Search an isomorphism between two structures");
  iso->add_option("a", o.input)->required();
  iso->add_option("b", o.input2)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) return CmdBuild(o, out);
    if (graph->parsed()) return CmdGraph(o, out);
    if (srg->parsed()) return CmdSrg(o, out);
    if (cliques->parsed()) return CmdCliques(o, out);
    if (onan->parsed()) return CmdOnan(o, out);
    if (cls->parsed()) return CmdClassify(o, out);
    if (rec->parsed()) return CmdReconstruct(o, out, err);
    if (iso->parsed()) return CmdIsomorphic(o, out);
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return IsVerificationFailure(e.code()) ? kExitCheckFailed : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace unital
