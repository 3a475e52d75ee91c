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

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "doctest.h"
#include "unital/cli.hpp"
#include "unital/io.hpp"

namespace unital {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("unital_cli_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

TEST_CASE("usage errors exit with 2") {
  CHECK(Cli({}).code == 2);
  CHECK(Cli({"frobnicate"}).code == 2);
  CHECK(Cli({"build", "hermitian"}).code == 2);
  CHECK(Cli({"build", "hermitian", "--q", "3", "--bogus"}).code == 2);
  CHECK(Cli({"build", "pg", "--q", "6"}).code == 2);
  CHECK(Cli({"graph", "/nonexistent/file.json"}).code == 2);
  const Run r = Cli({"build", "puncture", "--q", "3", "--delete", "1,x"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("build, graph and srg") {
  TempDir dir;
  CHECK(Cli({"build", "hermitian", "--q", "3", "-o", dir / "h3.json"}).code == 0);
  CHECK(ParseIncidenceJson(ReadFile(dir / "h3.json")).num_points() == 28);
  CHECK(Cli({"graph", dir / "h3.json", "-o", dir / "h3.dimacs"}).code == 0);
  const Run srg = Cli({"srg", dir / "h3.dimacs", "--expect-unital", "3"});
  CHECK(srg.code == 0);
  CHECK(srg.out.find("v=63 k=32 lambda=16 mu=16 r=4 s=-4") != std::string::npos);
  CHECK(Cli({"srg", dir / "h3.dimacs", "--expect-unital", "4"}).code == 1);

  CHECK(Cli({"build", "puncture", "--q", "3", "--delete", "conic", "-o", dir / "c.json"}).code == 0);
  CHECK(ParseIncidenceJson(ReadFile(dir / "c.json")).num_blocks() == 13);
  CHECK(Cli({"build", "pg", "--q", "3", "-o", dir / "pg.json"}).code == 0);
  CHECK(Cli({"build", "puncture", "--q", "3", "--in", dir / "pg.json", "--delete", "0,1,2,3", "-o", dir / "a.json"}).code ==
        0);
  CHECK(ParseIncidenceJson(ReadFile(dir / "a.json")).num_points() == 9);
}

TEST_CASE("stdout output is deterministic") {
  const Run a = Cli({"build", "ag", "--q", "3"});
  const Run b = Cli({"build", "ag", "--q", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(ParseIncidenceJson(a.out).num_blocks() == 12);
}

TEST_CASE("verification subcommands") {
  TempDir dir;
  Cli({"build", "hermitian", "--q", "3", "-o", dir / "h3.json"});
  Cli({"build", "pg", "--q", "2", "-o", dir / "fano.json"});
  Cli({"build", "ag", "--q", "3", "-o", dir / "ag3.json"});
  Cli({"build", "hermitian", "--q", "2", "-o", dir / "h2.json"});

  CHECK(Cli({"onan", dir / "h3.json", "--expect-none"}).code == 0);
  CHECK(Cli({"onan", dir / "fano.json", "--expect-none"}).code == 1);
  CHECK(Cli({"onan", dir / "fano.json"}).code == 0);

  const Run cl = Cli({"cliques", dir / "h3.json", "--classify", "--json", dir / "cl.json"});
  CHECK(cl.code == 0);
  CHECK(ReadFile(dir / "cl.json").find("near_pencil") != std::string::npos);
  CHECK(Cli({"cliques", dir / "h3.json", "--max-only"}).code == 0);

  CHECK(Cli({"isomorphic", dir / "h2.json", dir / "ag3.json"}).code == 0);
  const Run none = Cli({"isomorphic", dir / "h3.json", dir / "ag3.json"});
  CHECK(none.code == 1);
  CHECK(none.out.find("none") != std::string::npos);

  Cli({"graph", dir / "h3.json", "-o", dir / "h3.dimacs"});
  CHECK(Cli({"reconstruct", dir / "h3.dimacs", "--verify", dir / "h3.json", "-o", dir / "r.json"}).code == 0);
  CHECK(Cli({"reconstruct", dir / "h3.dimacs", "--verify", dir / "ag3.json"}).code == 1);
}

TEST_CASE("classify-linspace") {
  TempDir dir;
  Cli({"build", "puncture", "--q", "3", "--delete", "line-swap", "-o", dir / "t.json"});
  const Run r = Cli({"classify-linspace", dir / "t.json", "--q", "3", "--embed", "--json", dir / "t.out"});
  CHECK(r.code == 0);
  CHECK(r.out.find("thin_point") != std::string::npos);
  CHECK(ReadFile(dir / "t.out").find("\"deleted\"") != std::string::npos);
  Cli({"build", "pg", "--q", "3", "-o", dir / "pg.json"});
  // Out-of-scope input is an operator error, not a failed check.
  CHECK(Cli({"classify-linspace", dir / "pg.json", "--q", "3"}).code == 2);
}

}  // namespace
}  // namespace unital
