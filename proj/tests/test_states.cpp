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

#include "entwit/accessor.hpp"
#include "entwit/random.hpp"
#include "entwit/states.hpp"

using namespace entwit;
using Complex = std::complex<double>;

namespace {

void check_builder_invariants(const DensityMatrix<double>& rho) {
  const auto diag = validate(rho, true);
  CHECK(diag.hermiticity_defect <= 1e-12);
  CHECK(diag.trace_defect <= 1e-12);
  REQUIRE(diag.min_eigenvalue.has_value());
  CHECK(*diag.min_eigenvalue >= -1e-10);
}

}  // namespace

TEST_CASE("ghz amplitudes") {
  const auto g32 = ghz(3, 2);
  CHECK(std::abs(g32.amplitudes()(0) - Complex(1 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(g32.amplitudes()(7) - Complex(1 / std::sqrt(2.0))) < 1e-15);
  CHECK(g32.amplitudes().cwiseAbs().sum() ==
        doctest::Approx(2 / std::sqrt(2.0)).epsilon(1e-14));

  const auto g23 = ghz(2, 3);
  for (const int flat : {0, 4, 8}) {
    CHECK(std::abs(g23.amplitudes()(flat) - Complex(1 / std::sqrt(3.0))) < 1e-15);
  }

  const auto g42 = ghz(4, 2);
  CHECK(std::abs(g42.amplitudes().norm() - 1.0) < 1e-14);
  int nonzeros = 0;
  for (Eigen::Index i = 0; i < g42.amplitudes().size(); ++i) {
    if (std::abs(g42.amplitudes()(i)) > 0) ++nonzeros;
  }
  CHECK(nonzeros == 2);

  CHECK_THROWS_AS(ghz(40, 2), CapacityError);
}

TEST_CASE("w amplitudes") {
  const auto w3 = w(3);
  for (const int flat : {1, 2, 4}) {
    CHECK(std::abs(w3.amplitudes()(flat) - Complex(1 / std::sqrt(3.0))) < 1e-15);
  }
  CHECK(std::abs(w3.amplitudes()(0)) == 0.0);

  const auto w2 = w(2);
  for (const int flat : {1, 2}) {
    CHECK(std::abs(w2.amplitudes()(flat) - Complex(1 / std::sqrt(2.0))) < 1e-15);
  }

  const auto w10 = w(10);
  int nonzeros = 0;
  for (Eigen::Index i = 0; i < w10.amplitudes().size(); ++i) {
    if (std::abs(w10.amplitudes()(i)) > 0) {
      ++nonzeros;
      CHECK(std::abs(w10.amplitudes()(i) - Complex(1 / std::sqrt(10.0))) < 1e-15);
    }
  }
  CHECK(nonzeros == 10);
}

TEST_CASE("white noise mixing") {
  const auto w3 = w(3);
  const auto pure = white_noise_mix(w3, 1.0);
  CHECK((pure.entries() - projector(w3).entries()).cwiseAbs().maxCoeff() == 0.0);

  const auto mixed = white_noise_mix(w3, 0.0);
  CHECK((mixed.entries() - maximally_mixed<double>(w3.dims()).entries())
            .cwiseAbs()
            .maxCoeff() == 0.0);

  CHECK_THROWS_AS(white_noise_mix(w3, 1.5), DomainError);
  CHECK_THROWS_AS(white_noise_mix(w3, -0.1), DomainError);

  check_builder_invariants(white_noise_mix(w3, 9.0 / 17.0));
}

TEST_CASE("ghz_w_family") {
  const int n = 3;
  const auto noise_only = ghz_w_family(n, 0.0, 0.0);
  CHECK((noise_only.entries() -
         maximally_mixed<double>(DimVec::qubits(n)).entries())
            .cwiseAbs()
            .maxCoeff() == 0.0);

  const auto ghz_only = ghz_w_family(3, 1.0, 0.0);
  CHECK((ghz_only.entries() - projector(ghz(3, 2)).entries())
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  const auto w_slice = ghz_w_family(10, 0.0, 0.2);
  const auto direct = white_noise_mix(w(10), 0.2);
  CHECK((w_slice.entries() - direct.entries()).cwiseAbs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(ghz_w_family(3, 0.7, 0.5), DomainError);
  CHECK_THROWS_AS(ghz_w_family(3, -0.1, 0.5), DomainError);

  check_builder_invariants(ghz_w_family(4, 0.3, 0.4));
}

TEST_CASE("mix") {
  const auto rho = white_noise_mix(w(3), 0.5);
  const auto single = mix<double>({{1.0, rho}});
  CHECK((single.entries() - rho.entries()).cwiseAbs().maxCoeff() == 0.0);

  const auto halves = mix<double>({{0.5, rho}, {0.5, rho}});
  CHECK((halves.entries() - rho.entries()).cwiseAbs().maxCoeff() < 1e-16);

  DensityMatrix<double>::Matrix zeros_entries =
      DensityMatrix<double>::Matrix::Zero(8, 8);
  zeros_entries(0, 0) = 1;
  DensityMatrix<double>::Matrix ones_entries =
      DensityMatrix<double>::Matrix::Zero(8, 8);
  ones_entries(7, 7) = 1;
  const DimVec qubits3 = DimVec::qubits(3);
  const auto classical = mix<double>(
      {{0.5, DensityMatrix<double>(qubits3, zeros_entries)},
       {0.5, DensityMatrix<double>(qubits3, ones_entries)}});
  CHECK(classical.entries()(0, 0) == Complex(0.5));
  CHECK(classical.entries()(7, 7) == Complex(0.5));
  CHECK(classical.entries().cwiseAbs().sum() == 1.0);

  CHECK_THROWS_AS(mix<double>({{0.7, rho}}), DomainError);
  CHECK_THROWS_AS(
      mix<double>({{0.5, rho}, {0.5, white_noise_mix(w(4), 0.5)}}),
      ShapeError);
}

TEST_CASE("validate diagnostics") {
  const auto mm = maximally_mixed<double>(DimVec::qubits(3));
  const auto clean = validate(mm, true);
  CHECK(clean.hermiticity_defect == 0.0);
  CHECK(clean.trace_defect == 0.0);
  CHECK(*clean.min_eigenvalue == doctest::Approx(1.0 / 8).epsilon(1e-14));

  auto bumped = mm.entries();
  bumped(0, 1) += Complex(1e-3, 0);
  const auto skewed = validate(DensityMatrix<double>(mm.dims(), bumped), false);
  CHECK(skewed.hermiticity_defect == doctest::Approx(1e-3).epsilon(1e-9));

  const auto pure = validate(projector(w(3)), true);
  CHECK(std::abs(*pure.min_eigenvalue) <= 1e-12);
}

TEST_CASE("random fixtures are deterministic and physical") {
  const DimVec qubits3 = DimVec::qubits(3);
  const auto a = random_biseparable(qubits3, 4, 42);
  const auto b = random_biseparable(qubits3, 4, 42);
  CHECK((a.entries() - b.entries()).cwiseAbs().maxCoeff() == 0.0);
  const auto c = random_biseparable(qubits3, 4, 43);
  CHECK((a.entries() - c.entries()).cwiseAbs().maxCoeff() > 0.0);

  check_builder_invariants(a);
  check_builder_invariants(random_fully_separable(qubits3, 3, 7));
  check_builder_invariants(random_density_matrix(qubits3, 4, 9));

  // terms = 1 gives a rank-1 state: tr(rho^2) = 1.
  const auto pure = random_biseparable(qubits3, 1, 5);
  CHECK(std::abs((pure.entries() * pure.entries()).trace().real() - 1.0) < 1e-12);

  CHECK_THROWS_AS(random_biseparable(qubits3, 0, 1), DomainError);
}

TEST_CASE("family accessors match dense constructions") {
  const int n = 3;
  const double alpha = 0.35, beta = 0.25;
  const GhzWAccessor<double> acc(n, alpha, beta);
  const auto dense = ghz_w_family(n, alpha, beta);
  const DimVec dims = DimVec::qubits(n);
  for (std::int64_t i = 0; i < dims.total_dim(); ++i) {
    for (std::int64_t j = 0; j < dims.total_dim(); ++j) {
      const auto a = acc.element(unflatten(i, dims), unflatten(j, dims));
      const auto b = dense.entries()(i, j);
      CHECK(std::abs(a - b) <= 1e-15);
    }
  }

  const QuditGhzAccessor<double> qacc(3, 3, 0.4);
  const auto qdense = white_noise_mix(ghz(3, 3), 0.4);
  const DimVec qdims = DimVec::uniform(3, 3);
  for (std::int64_t i = 0; i < qdims.total_dim(); ++i) {
    for (std::int64_t j = 0; j < qdims.total_dim(); ++j) {
      const auto a = qacc.element(unflatten(i, qdims), unflatten(j, qdims));
      const auto b = qdense.entries()(i, j);
      CHECK(std::abs(a - b) <= 1e-15);
    }
  }
}

TEST_CASE("pure state norm validation") {
  PureState<double>::Vector amps = PureState<double>::Vector::Zero(4);
  amps(0) = Complex(0.5, 0);
  CHECK_THROWS_AS(PureState<double>(DimVec::qubits(2), amps), DataError);
}
