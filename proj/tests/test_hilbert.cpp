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

#include <random>

#include "entwit/hilbert.hpp"

using namespace entwit;

TEST_CASE("flat_index on mixed-radix labels") {
  const DimVec qubits3 = DimVec::qubits(3);
  CHECK(flat_index(MultiIndex({0, 0, 0}), qubits3) == 0);
  CHECK(flat_index(MultiIndex({1, 1, 1}), qubits3) == 7);

  // Hand mixed-radix check: 1*9 + 0*3 + 2.
  const DimVec mixed(std::vector<int>{2, 3, 3});
  CHECK(flat_index(MultiIndex({1, 0, 2}), mixed) == 11);
}

TEST_CASE("flat_index rejects out-of-range digits") {
  const DimVec dims(std::vector<int>{2, 3});
  CHECK_THROWS_AS(flat_index(MultiIndex({2, 0}), dims), DomainError);
  CHECK_THROWS_AS(flat_index(MultiIndex({0, -1}), dims), DomainError);
  CHECK_THROWS_AS(flat_index(MultiIndex({0, 0, 0}), dims), ShapeError);
}

TEST_CASE("flat_index and unflatten round-trip on random dims") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);  // n <= 6
    std::vector<int> dims_list;
    for (int l = 0; l < n; ++l) dims_list.push_back(2 + static_cast<int>(rng() % 3));
    const DimVec dims(dims_list);
    for (std::int64_t flat = 0; flat < dims.total_dim(); ++flat) {
      CHECK(flat_index(unflatten(flat, dims), dims) == flat);
    }
  }
}

TEST_CASE("DimVec validation") {
  CHECK_THROWS_AS(DimVec(std::vector<int>{2}), DomainError);
  CHECK_THROWS_AS(DimVec(std::vector<int>{2, 1}), DomainError);
  CHECK(DimVec::uniform(4, 3).total_dim() == 81);
  CHECK(DimVec::qubits(3).all_qubits());
  CHECK_FALSE(DimVec(std::vector<int>{2, 3}).all_qubits());
}

TEST_CASE("excitation labels") {
  const DimVec qubits3 = DimVec::qubits(3);
  const LocalPair lp = LocalPair::standard(3);
  CHECK(excitation_label(qubits3, lp, std::vector<int>{2}) ==
        MultiIndex({0, 1, 0}));
  CHECK(excitation_label(qubits3, lp, std::vector<int>{1, 3}) ==
        MultiIndex({1, 0, 1}));

  const DimVec qutrits2 = DimVec::uniform(2, 3);
  const LocalPair lp02 = LocalPair::uniform(2, 0, 2);
  CHECK(excitation_label(qutrits2, lp02, std::vector<int>{}) ==
        MultiIndex({0, 0}));

  CHECK_THROWS_AS(excitation_label(qubits3, lp, std::vector<int>{4}), DomainError);
}

TEST_CASE("excitation labels differ in exactly one digit for one site") {
  const DimVec dims(std::vector<int>{2, 3, 4, 2});
  const LocalPair lp = LocalPair::standard(4);
  const MultiIndex phi0 = excitation_label(dims, lp, std::vector<int>{});
  for (int i = 1; i <= 4; ++i) {
    const MultiIndex phi_i = excitation_label(dims, lp, std::vector<int>{i});
    int differing = 0;
    for (int l = 1; l <= 4; ++l) {
      if (phi0.digit(l) != phi_i.digit(l)) ++differing;
    }
    CHECK(differing == 1);
  }
}

TEST_CASE("subset swap") {
  const MultiIndex a({0, 0, 0});
  const MultiIndex b({1, 1, 1});
  CHECK(subset_swap_label(a, b, std::vector<int>{1}) ==
        std::make_pair(MultiIndex({1, 0, 0}), MultiIndex({0, 1, 1})));
  CHECK(subset_swap_label(a, b, std::vector<int>{}) == std::make_pair(a, b));

  const MultiIndex c({0, 1});
  const MultiIndex d({2, 0});
  CHECK(subset_swap_label(c, d, std::vector<int>{1, 2}) == std::make_pair(d, c));
}

TEST_CASE("subset swap is an involution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<int> da, db;
    for (int l = 0; l < n; ++l) {
      da.push_back(static_cast<int>(rng() % 4));
      db.push_back(static_cast<int>(rng() % 4));
    }
    const MultiIndex a(da), b(db);
    const std::uint64_t mask = rng() & full_mask(n);
    const auto [a2, b2] = subset_swap_label(a, b, mask);
    const auto [a3, b3] = subset_swap_label(a2, b2, mask);
    CHECK(a3 == a);
    CHECK(b3 == b);
  }
}

TEST_CASE("LocalPair checks") {
  CHECK_THROWS_AS(LocalPair::uniform(3, 1, 1), DomainError);
  CHECK(LocalPair::standard(3).uniform_levels());
  const LocalPair mixed({0, 0, 1}, {1, 1, 0});
  CHECK_FALSE(mixed.uniform_levels());

  const DimVec qubits3 = DimVec::qubits(3);
  CHECK_THROWS_AS(LocalPair::uniform(3, 0, 2).check_compatible(qubits3),
                  DomainError);
  CHECK_THROWS_AS(LocalPair::standard(4).check_compatible(qubits3), ShapeError);

  CHECK_THROWS_AS(LocalPair::from_labels(MultiIndex({0, 1}), MultiIndex({1, 1})),
                  DomainError);
}
