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

#ifndef ENTWIT_RANDOM_HPP
#define ENTWIT_RANDOM_HPP

#include <cmath>
#include <random>
#include <vector>

#include "entwit/states.hpp"

// Seeded random-state fixtures. Haar-random pure factors are drawn as
// normalized complex Gaussian vectors; Box-Muller is hand-rolled on top of
// mt19937_64 so a seed fixes every output bit-exactly.

namespace entwit {

namespace detail {

template <typename Scalar = double>
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  Scalar uniform() {
    // 53-bit mantissa draw in (0, 1].
    const std::uint64_t bits = engine_() >> 11;
    return (static_cast<Scalar>(bits) + Scalar(1)) / Scalar(9007199254740993.0);
  }

  Scalar gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const Scalar u = uniform();
    const Scalar v = uniform();
    const Scalar radius = std::sqrt(Scalar(-2) * std::log(u));
    const Scalar angle = Scalar(2) * Scalar(M_PI) * v;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  std::complex<Scalar> complex_gaussian() {
    const Scalar re = gaussian();
    const Scalar im = gaussian();
    return {re, im};
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  Scalar spare_ = 0;
};

template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> haar_vector(
    GaussianSource<Scalar>& source, std::int64_t dim) {
  Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> v(dim);
  for (std::int64_t i = 0; i < dim; ++i) v(i) = source.complex_gaussian();
  v /= v.norm();
  return v;
}

// Flat dimension of the sites selected by the mask.
inline std::int64_t masked_dim(const DimVec& dims, std::uint64_t mask) {
  std::int64_t total = 1;
  for (int l = 1; l <= dims.sites(); ++l) {
    if ((mask >> (l - 1)) & 1) total *= dims.local_dim(l);
  }
  return total;
}

// Flat index of the digits of `label` restricted to the masked sites,
// row-major in ascending site order.
inline std::int64_t masked_flat(const MultiIndex& label, const DimVec& dims,
                                std::uint64_t mask) {
  std::int64_t flat = 0;
  for (int l = 1; l <= dims.sites(); ++l) {
    if ((mask >> (l - 1)) & 1) {
      flat = flat * dims.local_dim(l) + label.digit(l);
    }
  }
  return flat;
}

// Product of a Haar vector on the masked sites with one on the rest.
template <typename Scalar>
PureState<Scalar> random_bipartite_product(GaussianSource<Scalar>& source,
                                           const DimVec& dims,
                                           std::uint64_t mask) {
  const std::uint64_t complement = full_mask(dims.sites()) & ~mask;
  const auto factor_a = haar_vector(source, masked_dim(dims, mask));
  const auto factor_b = haar_vector(source, masked_dim(dims, complement));
  typename PureState<Scalar>::Vector amps(dims.total_dim());
  for (std::int64_t flat = 0; flat < dims.total_dim(); ++flat) {
    const MultiIndex label = unflatten(flat, dims);
    amps(flat) = factor_a(masked_flat(label, dims, mask)) *
                 factor_b(masked_flat(label, dims, complement));
  }
  return PureState<Scalar>(dims, std::move(amps));
}

// Dirichlet(1) mixing weights.
template <typename Scalar>
std::vector<Scalar> simplex_weights(GaussianSource<Scalar>& source, int terms) {
  std::vector<Scalar> weights(static_cast<std::size_t>(terms));
  Scalar sum = 0;
  for (auto& weight : weights) {
    weight = -std::log(source.uniform());
    sum += weight;
  }
  for (auto& weight : weights) weight /= sum;
  return weights;
}

}  // namespace detail

// Haar-random fully product pure state |psi_1>...|psi_n>.
template <typename Scalar = double>
PureState<Scalar> random_product_state(const DimVec& dims, std::uint64_t seed,
                                       std::int64_t dense_cap = kDefaultDenseCap) {
  check_dense_capacity(dims.total_dim(), dense_cap);
  detail::GaussianSource<Scalar> source(seed);
  typename PureState<Scalar>::Vector amps =
      PureState<Scalar>::Vector::Ones(dims.total_dim());
  for (int l = 1; l <= dims.sites(); ++l) {
    const auto local = detail::haar_vector(source, dims.local_dim(l));
    for (std::int64_t flat = 0; flat < dims.total_dim(); ++flat) {
      amps(flat) *= local(unflatten(flat, dims).digit(l));
    }
  }
  return PureState<Scalar>(dims, std::move(amps));
}

// Convex mixture of `terms` pure states, each a Haar-random product across a
// uniformly random nontrivial bipartition. Deterministic per seed.
template <typename Scalar = double>
DensityMatrix<Scalar> random_biseparable(const DimVec& dims, int terms,
                                         std::uint64_t seed,
                                         std::int64_t dense_cap = kDefaultDenseCap) {
  if (terms < 1) throw DomainError("random_biseparable: need terms >= 1");
  check_dense_capacity(dims.total_dim(), dense_cap);
  detail::GaussianSource<Scalar> source(seed);
  const auto weights = detail::simplex_weights(source, terms);
  typename DensityMatrix<Scalar>::Matrix entries =
      DensityMatrix<Scalar>::Matrix::Zero(dims.total_dim(), dims.total_dim());
  const std::uint64_t nontrivial = full_mask(dims.sites()) - 1;  // 1..2^n-2
  for (int t = 0; t < terms; ++t) {
    const std::uint64_t mask = 1 + source.raw() % nontrivial;
    const auto psi = detail::random_bipartite_product(source, dims, mask);
    entries += weights[static_cast<std::size_t>(t)] *
               (psi.amplitudes() * psi.amplitudes().adjoint());
  }
  return DensityMatrix<Scalar>(dims, std::move(entries));
}

// Convex mixture of `terms` Haar-random fully product pure states.
template <typename Scalar = double>
DensityMatrix<Scalar> random_fully_separable(
    const DimVec& dims, int terms, std::uint64_t seed,
    std::int64_t dense_cap = kDefaultDenseCap) {
  if (terms < 1) throw DomainError("random_fully_separable: need terms >= 1");
  check_dense_capacity(dims.total_dim(), dense_cap);
  detail::GaussianSource<Scalar> source(seed);
  const auto weights = detail::simplex_weights(source, terms);
  typename DensityMatrix<Scalar>::Matrix entries =
      DensityMatrix<Scalar>::Matrix::Zero(dims.total_dim(), dims.total_dim());
  for (int t = 0; t < terms; ++t) {
    typename PureState<Scalar>::Vector amps =
        PureState<Scalar>::Vector::Ones(dims.total_dim());
    for (int l = 1; l <= dims.sites(); ++l) {
      const auto local = detail::haar_vector(source, dims.local_dim(l));
      for (std::int64_t flat = 0; flat < dims.total_dim(); ++flat) {
        amps(flat) *= local(unflatten(flat, dims).digit(l));
      }
    }
    entries += weights[static_cast<std::size_t>(t)] * (amps * amps.adjoint());
  }
  return DensityMatrix<Scalar>(dims, std::move(entries));
}

// Unconstrained random mixed state: normalized G G^dagger with G a complex
// Gaussian D x rank matrix. General-position fixture, not separable.
template <typename Scalar = double>
DensityMatrix<Scalar> random_density_matrix(
    const DimVec& dims, int rank, std::uint64_t seed,
    std::int64_t dense_cap = kDefaultDenseCap) {
  if (rank < 1) throw DomainError("random_density_matrix: need rank >= 1");
  check_dense_capacity(dims.total_dim(), dense_cap);
  detail::GaussianSource<Scalar> source(seed);
  typename DensityMatrix<Scalar>::Matrix g(dims.total_dim(), rank);
  for (std::int64_t i = 0; i < dims.total_dim(); ++i) {
    for (int j = 0; j < rank; ++j) g(i, j) = source.complex_gaussian();
  }
  typename DensityMatrix<Scalar>::Matrix entries = g * g.adjoint();
  entries /= entries.trace();
  return DensityMatrix<Scalar>(dims, std::move(entries));
}

}  // namespace entwit

#endif
