// Copyright 2026 The entnorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "entnorm/cli/operator_file.hpp"
#include "entnorm/cli/run.hpp"
#include "entnorm/error.hpp"
#include "entnorm/schmidt.hpp"
#include "entnorm/states.hpp"

using namespace entnorm;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("entnorm_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }

 private:
  fs::path path_;
};

const char* kBell = R"({"dims": [2, 2], "kind": "state_vector",
  "data": [[0.7071067811865476, 0], [0, 0], [0, 0], [0.7071067811865476, 0]],
  "meta": {"name": "bell"}})";

std::string bell_density() {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back({(i % 3 == 0 && j % 3 == 0) ? 0.5 : 0.0, 0.0});
    rows.push_back(row);
  }
  return json{{"dims", {2, 2}}, {"kind", "density"}, {"data", rows}}.dump();
}

json result_of(const Outcome& o) {
  REQUIRE(o.code == 0);
  return json::parse(o.out)["result"];
}

}  // namespace

TEST_CASE("operator files") {
  TempDir dir;
  const cli::OperatorFile bell = cli::load_operator(dir.write("bell.json", kBell));
  REQUIRE(bell.is_pure());
  CHECK(schmidt_rank(bell.pure()) == 2);
  CHECK(bell.meta.at("name") == "bell");
  CHECK(bell.warnings.empty());
  CHECK(bell.digest.size() == 64);

  json d = json::parse(bell_density());
  d["data"][0][0] = {0.499999, 0.0};
  const cli::OperatorFile off = cli::load_operator(dir.write("trace.json", d.dump()));
  // Lowering one diagonal entry of the Bell projector also breaks positivity.
  REQUIRE(off.warnings.size() == 2);
  CHECK(off.warnings[0].find("trace") != std::string::npos);
  CHECK(off.warnings[1].find("positive") != std::string::npos);
  CHECK(off.op().mat()(0, 0).real() == 0.499999);

  json bad = json::parse(bell_density());
  bad["data"][1] = {0.0, 0.0, 0.0, 0.0};
  try {
    cli::load_operator(dir.write("bad.json", bad.dump()));
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
    CHECK(std::string(e.what()).find("/data/1/0") != std::string::npos);
  }
  for (const char* text : {R"({"dims": [2], "kind": "density", "data": []})",
                           R"({"dims": [2, 2], "kind": "matrix", "data": []})",
                           R"({"dims": [1, 2], "kind": "state_vector", "data": [[1, 0]]})",
                           R"({"dims": [1, 1], "kind": "state_vector", "data": [[0, 0]]})",
                           R"({"dims": [1, 1], "kind": "state_vector", "data": [["1", 0]]})", "[1, 2"}) {
    CHECK_THROWS_AS(cli::load_operator(dir.write("bad2.json", text)), Error);
  }
}

TEST_CASE("round trip is bit stable") {
  TempDir dir;
  for (const char* kind : {"haar_pure", "ginibre_density", "sn_bounded_density", "isotropic"}) {
    const std::string path = dir.file(std::string(kind) + ".json");
    const Outcome o = invoke({"gen", "--kind", kind, "--m", "2", "--n", "3", "--k", "2", "--p", "0.3",
                              "--seed", "11", "--out", path});
    if (std::string(kind) == "isotropic") {
      CHECK(o.code == cli::kExitInput);  // isotropic needs m == n
      continue;
    }
    REQUIRE(o.code == 0);
    EnsembleSpec spec;
    spec.kind = ensemble_kind_from_string(kind);
    spec.dim_a = 2;
    spec.dim_b = 3;
    spec.k = 2;
    spec.seed = 11;
    const Generated g = generate(spec);
    const cli::OperatorFile f = cli::load_operator(path);
    CHECK(f.warnings.empty());
    if (g.is_pure()) CHECK(f.pure().amplitudes() == g.pure().amplitudes());
    else CHECK(f.op().mat() == g.op().mat());
    // Re-serializing the loaded value reproduces the file byte for byte.
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto meta = f.meta;
    const json again = f.is_pure() ? cli::to_json(f.pure(), meta) : cli::to_json(f.op(), cli::OperatorKind::density, meta);
    CHECK(cli::dump(again) == buf.str());
  }
}

TEST_CASE("command examples") {
  TempDir dir;
  const std::string bell = dir.write("bell.json", kBell);
  const std::string rho = dir.write("bell_density.json", bell_density());

  const json gamma = result_of(invoke({"norm", "--which", "gamma", "--k", "1", bell}));
  CHECK(gamma["lower"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(gamma["upper"].get<double>() - gamma["lower"].get<double>() <= 1e-9);

  const json det = result_of(invoke({"detect", "--k", "1", rho}));
  CHECK(det["detected"].get<bool>());
  CHECK(det["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(det["certificate"]["verdict"] == "exceeds_k");

  const std::string phi3 = dir.file("phi3.json");
  REQUIRE(invoke({"gen", "--kind", "max_entangled", "--m", "3", "--n", "3", "--seed", "7", "--out", phi3}).code == 0);
  const json radius = result_of(invoke({"norm", "--which", "radius", "--k", "2", phi3}));
  CHECK(radius["lower"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(radius["upper"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  CHECK(result_of(invoke({"schmidt", bell}))["rank"] == 2);
  CHECK(result_of(invoke({"norm", "--which", "k2dual", "--k", "1", bell}))["value"].get<double>() ==
        doctest::Approx(std::sqrt(2.0)));
  CHECK(result_of(invoke({"norm", "--which", "sk-dual-vec", "--k", "1", bell}))["decomposition"].size() == 2);
  CHECK(result_of(invoke({"blockpos", "--k", "1", rho}))["verdict"] == "certified_positive");
  CHECK(result_of(invoke({"witness", "--k", "1", rho}))["witness"]["value"].get<double>() ==
        doctest::Approx(2.0).epsilon(1e-9));
  const json oracle = result_of(invoke({"oracle", "--k", "1", "--budget", "300", rho}));
  CHECK(oracle["upper"].get<double>() >= 2.0 - 1e-9);
  CHECK(result_of(invoke({"probe-conjecture", "--k", "1", bell}))["candidate"].get<double>() == doctest::Approx(3.0));
  CHECK(result_of(invoke({"invariance", "--k", "1", "--trials", "3", "--seed", "2"}))["passed"].get<bool>());

  const Outcome text = invoke({"--format", "text", "schmidt", bell});
  CHECK(text.code == 0);
  CHECK(text.out.find("result.rank: 2") != std::string::npos);

  const std::string report = dir.file("report.json");
  CHECK(invoke({"--out", report, "schmidt", bell}).code == 0);
  CHECK(fs::exists(report));
}

TEST_CASE("reports are reproducible and schema stable") {
  TempDir dir;
  const std::string path = dir.file("g.json");
  REQUIRE(invoke({"gen", "--kind", "ginibre_density", "--m", "3", "--n", "3", "--seed", "5", "--out", path}).code == 0);
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"norm", "--which", "sk", "--k", "2", "--seed", "3", path},
        std::vector<std::string>{"detect", "--k", "1", "--filter", "--weak", path}}) {
    json a = json::parse(invoke(args).out);
    json b = json::parse(invoke(args).out);
    a.erase("wall_time_ms");
    b.erase("wall_time_ms");
    CHECK(a.dump() == b.dump());
    std::vector<std::string> keys;
    for (const auto& [key, value] : json::parse(invoke(args).out).items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"command", "inputs", "k", "result", "seed", "tolerances", "wall_time_ms",
                                           "warnings"});
  }
}

TEST_CASE("exit codes") {
  TempDir dir;
  json bad = json::parse(bell_density());
  bad["data"][2] = 5;
  const Outcome malformed = invoke({"detect", "--k", "1", dir.write("bad.json", bad.dump())});
  CHECK(malformed.code == cli::kExitInput);
  CHECK(malformed.err.find("/data/2") != std::string::npos);

  CHECK(invoke({"detect", "--k", "1", dir.file("missing.json")}).code == cli::kExitInput);
  CHECK(invoke({"frobnicate"}).code == cli::kExitInput);
  CHECK(invoke({"norm", "--which", "nope", "--k", "1", dir.write("bell.json", kBell)}).code == cli::kExitInput);
  CHECK(invoke({"norm", "--which", "sk", "--k", "9", dir.file("bell.json")}).code == cli::kExitInput);
  CHECK(invoke({"--help"}).code == cli::kExitOk);

  const std::string rho = dir.write("rho.json", bell_density());
  const Outcome svd_fail = invoke({"--inject-svd-failure", "detect", "--k", "1", rho});
  CHECK(svd_fail.code == cli::kExitNumerical);
  // The injected failure does not leak into later runs.
  CHECK(invoke({"detect", "--k", "1", rho}).code == cli::kExitOk);

  const std::string iso = dir.file("iso.json");
  REQUIRE(invoke({"gen", "--kind", "isotropic", "--m", "3", "--n", "3", "--p", "0.2", "--out", iso}).code == 0);
  CHECK(invoke({"detect", "--k", "1", iso}).code == cli::kExitOk);
  const Outcome undecided = invoke({"--require-decision", "detect", "--k", "1", iso});
  CHECK(undecided.code == cli::kExitUndecided);
  CHECK(json::parse(undecided.out)["result"]["certificate"]["verdict"] == "undecided");
  CHECK(invoke({"--require-decision", "detect", "--k", "1", rho}).code == cli::kExitOk);
}
