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

#include <sstream>

#include "entwit/io.hpp"
#include "entwit/random.hpp"

using namespace entwit;

TEST_CASE("density matrix JSON round trip is exact") {
  const auto rho = random_density_matrix(DimVec(std::vector<int>{2, 3}), 3, 99);
  const auto parsed = density_matrix_from_json(to_json(rho));
  CHECK(parsed.dims() == rho.dims());
  CHECK((parsed.entries() - rho.entries()).cwiseAbs().maxCoeff() == 0.0);

  // Through text too: nlohmann prints doubles with round-trip precision.
  const auto reparsed =
      density_matrix_from_json(json::parse(to_json(rho).dump()));
  CHECK((reparsed.entries() - rho.entries()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("density matrix JSON rejection diagnostics") {
  const auto rho = white_noise_mix(w(2), 0.5);
  json good = to_json(rho);

  json no_dims = good;
  no_dims.erase("dims");
  CHECK_THROWS_WITH_AS(density_matrix_from_json(no_dims),
                       "matrix JSON: missing \"dims\" array", DataError);

  json bad_shape = good;
  bad_shape["re"].erase(0);
  CHECK_THROWS_AS(density_matrix_from_json(bad_shape), DataError);

  json bad_entry = good;
  bad_entry["im"][0][0] = "zero";
  CHECK_THROWS_AS(density_matrix_from_json(bad_entry), DataError);

  json bad_dim = good;
  bad_dim["dims"] = {2, 1};
  CHECK_THROWS_AS(density_matrix_from_json(bad_dim), DomainError);

  CHECK_THROWS_AS(density_matrix_from_json(good, 2), CapacityError);
  CHECK_THROWS_AS(density_matrix_from_json(json::array()), DataError);
}

TEST_CASE("criterion report JSON carries 1-based entry labels") {
  const auto acc = QuditGhzAccessor<double>(3, 2, 0.2);
  const auto report = corner_qubit(acc);
  const json out = to_json(report);
  CHECK(out["criterion"] == "corner");
  CHECK(out["verdict"] == "BOUNDARY");
  CHECK(out["labels"]["phi1"] == json::array({0, 0, 0}));
  // The corner element sits at rho_{1,2^n} in 1-based labeling.
  CHECK(out["elements_used"][0]["entry"] == json::array({1, 8}));
  CHECK(out["elements_used"].size() == 7);
  CHECK(out.contains("lhs"));
  CHECK(out.contains("rhs"));
  CHECK(out.contains("margin"));
  CHECK(out.contains("tolerance"));
}

TEST_CASE("criterion report JSON for excitation criteria carries locals") {
  const auto acc = DenseAccessor<double>(projector(w(3)));
  const json out = to_json(theorem1(acc, LocalPair::standard(3)));
  CHECK(out["locals"]["x"] == json::array({0, 0, 0}));
  CHECK(out["locals"]["y"] == json::array({1, 1, 1}));
  CHECK(out["extension"] == false);
  CHECK(out["verdict"] == "DETECTED");
}

TEST_CASE("threshold result JSON carries both conventions") {
  const auto closed = closed_form_threshold(FamilySpec{Family::WNoise, 6, 2},
                                            CriterionTag::Theorem1);
  const json out = to_json(closed);
  CHECK(out["method"] == "CLOSED_FORM");
  CHECK(out["noise_exact"] == "32/59");
  CHECK(out["visibility_exact"] == "27/59");
  CHECK(out["family"] == "w-noise");
  CHECK(std::abs(out["visibility"].get<double>() +
                 out["noise"].get<double>() - 1.0) < 1e-15);

  const auto bisected = bisect_threshold(FamilySpec{Family::WNoise, 4, 2},
                                         CriterionTag::Theorem1);
  const json bout = to_json(bisected);
  CHECK(bout["method"] == "BISECTION");
  CHECK(bout["bracket"] == json::array({0.0, 1.0}));
  CHECK(bout.contains("margin_at_threshold"));
}

TEST_CASE("measurement plan JSON") {
  const auto the_plan =
      plan(CriterionTag::Theorem1, DimVec::qubits(3), LocalPair::standard(3));
  const json out = to_json(the_plan);
  CHECK(out["criterion"] == "theorem1");
  CHECK(out["counts"]["total"] == 19);
  CHECK(out["settings"].size() == 19);
  CHECK(out["settings"][0]["role"]["kind"] == "diag_phi0");
  CHECK(out["settings"][0]["factors"].size() == 3);

  const auto plan2 = plan(CriterionTag::Theorem2, DimVec::qubits(3),
                          MultiIndex({0, 0, 0}), MultiIndex({1, 1, 1}));
  const json out2 = to_json(plan2);
  bool saw_angle = false;
  for (const auto& setting : out2["settings"]) {
    for (const auto& factor : setting["factors"]) {
      if (factor["kind"] == "R") saw_angle = factor.contains("angle");
    }
  }
  CHECK(saw_angle);
}

TEST_CASE("region CSV layout and determinism") {
  const auto grid = scan_region(
      3, {CriterionTag::Theorem1, CriterionTag::HuberIII}, 10, 10);
  std::ostringstream first, second;
  write_region_csv(first, grid);
  write_region_csv(second, grid);
  CHECK(first.str() == second.str());

  std::istringstream lines(first.str());
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
