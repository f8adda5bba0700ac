// Copyright 2026 The entwit authors. All Rights Reserved.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "entwit/cli.hpp"
#include "entwit/io.hpp"

using namespace entwit;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  const auto dir = fs::temp_directory_path() / "entwit_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

json run_json(const std::vector<std::string>& args, const fs::path& out_path) {
  std::vector<std::string> full = args;
  full.push_back("--output");
  full.push_back(out_path.string());
  REQUIRE(cli::run(full) == 0);
  return json::parse(slurp(out_path));
}

}  // namespace

TEST_CASE("evaluate on the pure W family detects entanglement") {
  const auto out = temp_dir() / "eval_w.json";
  const json report = run_json({"evaluate", "--family", "w-noise", "--n", "3",
                                "--visibility", "1.0", "--criterion",
                                "theorem1"},
                               out);
  REQUIRE(report["reports"].size() == 1);
  CHECK(report["reports"][0]["verdict"] == "DETECTED");
  CHECK(report["reports"][0]["margin"].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report["state"]["noise"].get<double>() == 0.0);
}

TEST_CASE("evaluate at the cat-state threshold reports BOUNDARY") {
  const auto out = temp_dir() / "eval_ghz.json";
  const json report =
      run_json({"evaluate", "--family", "ghz-noise", "--n", "3", "--d", "2",
                "--visibility", "0.2", "--criterion", "theorem2"},
               out);
  CHECK(report["reports"][0]["verdict"] == "BOUNDARY");
}

TEST_CASE("evaluate a qutrit cat-state family with explicit labels") {
  const auto out = temp_dir() / "eval_qutrit.json";
  const json report =
      run_json({"evaluate", "--family", "qudit-ghz-noise", "--n", "3", "--d",
                "3", "--visibility", "0.1", "--criterion", "theorem2",
                "--phi1", "0,0,0", "--phi2", "2,2,2"},
               out);
  CHECK(report["reports"][0]["verdict"] == "BOUNDARY");
  CHECK(report["reports"][0]["labels"]["phi2"] == json::array({2, 2, 2}));
}

TEST_CASE("evaluate a maximally mixed input file") {
  const auto dir = temp_dir();
  const auto state_path = dir / "maximally_mixed.json";
  {
    std::ofstream state_file(state_path);
    state_file << to_json(maximally_mixed<double>(DimVec::qubits(3))).dump();
  }
  const auto out = dir / "eval_mm.json";
  const json report = run_json({"evaluate", "--input", state_path.string(),
                                "--criterion", "theorem3"},
                               out);
  CHECK(report["reports"][0]["verdict"] == "NOT_DETECTED");
  CHECK(report["state"]["hermiticity_defect"].get<double>() == 0.0);
}

TEST_CASE("evaluate requires exactly one state source") {
  CHECK(cli::run({"evaluate", "--criterion", "theorem1"}) == 2);
  CHECK(cli::run({"evaluate", "--input", "x.json", "--family", "w-noise",
                  "--n", "3", "--visibility", "0.5"}) == 2);
}

TEST_CASE("evaluate rejects ill-formed matrix files with exit 2") {
  const auto dir = temp_dir();
  const auto bad_path = dir / "bad.json";
  {
    std::ofstream bad(bad_path);
    bad << "{\"re\": []}";
  }
  CHECK(cli::run({"evaluate", "--input", bad_path.string(), "--criterion",
                  "theorem1"}) == 2);

  const auto nonjson_path = dir / "bad2.json";
  {
    std::ofstream bad(nonjson_path);
    bad << "not json";
  }
  CHECK(cli::run({"evaluate", "--input", nonjson_path.string(), "--criterion",
                  "theorem1"}) == 2);
}

TEST_CASE("evaluate rejects non-Hermitian inputs unless forced") {
  const auto dir = temp_dir();
  auto rho = maximally_mixed<double>(DimVec::qubits(2));
  auto entries = rho.entries();
  entries(0, 1) = std::complex<double>(0.05, 0);
  const auto skewed_path = dir / "skewed.json";
  {
    std::ofstream out(skewed_path);
    out << to_json(DensityMatrix<double>(rho.dims(), entries)).dump();
  }
  CHECK(cli::run({"evaluate", "--input", skewed_path.string(), "--criterion",
                  "theorem3"}) == 2);
  CHECK(cli::run({"evaluate", "--input", skewed_path.string(), "--criterion",
                  "theorem3", "--force", "--output",
                  (dir / "forced.json").string()}) == 0);
}

TEST_CASE("dense capacity override via environment") {
  const auto dir = temp_dir();
  const auto state_path = dir / "mm3.json";
  {
    std::ofstream state_file(state_path);
    state_file << to_json(maximally_mixed<double>(DimVec::qubits(3))).dump();
  }
  setenv("ENTWIT_DENSE_CAP", "4", 1);
  CHECK(cli::run({"evaluate", "--input", state_path.string(), "--criterion",
                  "theorem3"}) == 3);
  setenv("ENTWIT_DENSE_CAP", "banana", 1);
  CHECK(cli::run({"evaluate", "--input", state_path.string(), "--criterion",
                  "theorem3"}) == 2);
  unsetenv("ENTWIT_DENSE_CAP");
}

TEST_CASE("threshold closed forms through the CLI") {
  const auto dir = temp_dir();
  const json t1 = run_json({"threshold", "--family", "w-noise", "--n", "6",
                            "--criterion", "theorem1"},
                           dir / "thr1.json");
  CHECK(t1["noise_exact"] == "32/59");

  const json h3 = run_json({"threshold", "--family", "w-noise", "--n", "6",
                            "--criterion", "huber3"},
                           dir / "thr2.json");
  CHECK(h3["noise_exact"] == "4/13");

  const json t2 = run_json({"threshold", "--family", "qudit-ghz-noise", "--n",
                            "4", "--d", "3", "--criterion", "theorem2"},
                           dir / "thr3.json");
  CHECK(t2["visibility_exact"] == "1/28");
}

TEST_CASE("threshold --force-bisect reports both routes") {
  const auto dir = temp_dir();
  const json both = run_json({"threshold", "--family", "w-noise", "--n", "5",
                              "--criterion", "theorem1", "--force-bisect"},
                             dir / "thr_both.json");
  CHECK(both.contains("closed_form"));
  CHECK(both.contains("bisection"));
  CHECK(std::abs(both["difference_visibility"].get<double>()) <= 1e-8);
}

TEST_CASE("threshold falls back to bisection without a closed form") {
  const auto dir = temp_dir();
  const json corner = run_json({"threshold", "--family", "ghz-noise", "--n",
                                "3", "--criterion", "corner"},
                               dir / "thr_corner.json");
  CHECK(corner["method"] == "BISECTION");
  CHECK(std::abs(corner["visibility"].get<double>() - 0.2) <= 1e-9);
}

TEST_CASE("threshold bracket failure exits 4") {
  CHECK(cli::run({"threshold", "--family", "w-noise", "--n", "3",
                  "--criterion", "theorem2"}) == 4);
}

TEST_CASE("scan emits a deterministic CSV") {
  const auto dir = temp_dir();
  const auto first = dir / "scan1.csv";
  const auto second = dir / "scan2.csv";
  REQUIRE(cli::run({"scan", "--n", "3", "--steps", "10", "--output",
                    first.string()}) == 0);
  REQUIRE(cli::run({"scan", "--n", "3", "--steps", "10", "--output",
                    second.string()}) == 0);
  const std::string a = slurp(first);
  CHECK(a == slurp(second));

  std::istringstream lines(a);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "alpha,beta,theorem1_margin,huber3_margin,theorem1_verdict,"
        "huber3_verdict");
  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 55);
}

TEST_CASE("plan counts through the CLI") {
  const auto dir = temp_dir();
  const json p1 = run_json({"plan", "--criterion", "theorem1", "--n", "3"},
                           dir / "plan1.json");
  CHECK(p1["counts"]["total"] == 19);
  CHECK(p1["settings"].size() == 19);

  const json p2 = run_json({"plan", "--criterion", "theorem2", "--n", "5",
                            "--phi1", "0,0,0,0,0", "--phi2", "1,1,1,1,1"},
                           dir / "plan2.json");
  CHECK(p2["counts"]["total"] == 40);

  const json p3 = run_json({"plan", "--criterion", "theorem3", "--n", "3"},
                           dir / "plan3.json");
  CHECK(p3["counts"]["total"] == 16);
}

TEST_CASE("unknown flags and tags exit 2") {
  CHECK(cli::run({"evaluate", "--family", "w-noise", "--n", "3",
                  "--visibility", "0.5", "--criterion", "theorem9"}) == 2);
  CHECK(cli::run({"frobnicate"}) == 2);
  CHECK(cli::run({"scan", "--n", "3", "--steps", "banana"}) == 2);
}

TEST_CASE("scan capacity exits 3") {
  CHECK(cli::run({"scan", "--n", "31", "--steps", "10"}) == 3);
}
