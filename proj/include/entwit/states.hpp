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

#ifndef ENTWIT_STATES_HPP
#define ENTWIT_STATES_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "entwit/common.hpp"
#include "entwit/hilbert.hpp"
#include "entwit/linalg.hpp"

// Dense n-partite state construction: the GHZ/W families, white-noise
// mixtures, convex combinations, and physicality diagnostics.

namespace entwit {

inline void check_dense_capacity(std::int64_t total_dim, std::int64_t cap) {
  if (total_dim > cap) {
    throw CapacityError("dense dimension " + std::to_string(total_dim) +
                        " exceeds capacity " + std::to_string(cap));
  }
}

template <typename Scalar = double>
class PureState {
 public:
  using Complex = std::complex<Scalar>;
  using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  PureState(DimVec dims, Vector amplitudes)
      : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
    if (amps_.size() != dims_.total_dim()) {
      throw ShapeError("PureState: amplitude vector length " +
                       std::to_string(amps_.size()) + " != total dimension " +
                       std::to_string(dims_.total_dim()));
    }
    const Scalar defect = std::abs(amps_.norm() - Scalar(1));
    if (defect > Scalar(1e-12)) {
      throw DataError("PureState: norm defect " + std::to_string(defect));
    }
  }

  const DimVec& dims() const { return dims_; }
  const Vector& amplitudes() const { return amps_; }
  std::int64_t total_dim() const { return dims_.total_dim(); }

 private:
  DimVec dims_;
  Vector amps_;
};

template <typename Scalar = double>
class DensityMatrix {
 public:
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

  DensityMatrix(DimVec dims, Matrix entries)
      : dims_(std::move(dims)), entries_(std::move(entries)) {
    if (entries_.rows() != dims_.total_dim() ||
        entries_.cols() != dims_.total_dim()) {
      throw ShapeError("DensityMatrix: expected " +
                       std::to_string(dims_.total_dim()) + "x" +
                       std::to_string(dims_.total_dim()) + " entries, got " +
                       std::to_string(entries_.rows()) + "x" +
                       std::to_string(entries_.cols()));
    }
  }

  const DimVec& dims() const { return dims_; }
  const Matrix& entries() const { return entries_; }
  std::int64_t total_dim() const { return dims_.total_dim(); }

 private:
  DimVec dims_;
  Matrix entries_;
};

// |psi><psi| as a dense matrix.
template <typename Scalar>
DensityMatrix<Scalar> projector(const PureState<Scalar>& psi) {
  return DensityMatrix<Scalar>(
      psi.dims(), psi.amplitudes() * psi.amplitudes().adjoint());
}

// (1/sqrt d) sum_i |i...i>: the d-level cat state on n sites.
template <typename Scalar = double>
PureState<Scalar> ghz(int n, int d, std::int64_t dense_cap = kDefaultDenseCap) {
  if (n < 2 || d < 2) {
    throw DomainError("ghz: need n >= 2 and d >= 2");
  }
  const DimVec dims = DimVec::uniform(n, d);
  check_dense_capacity(dims.total_dim(), dense_cap);
  typename PureState<Scalar>::Vector amps =
      PureState<Scalar>::Vector::Zero(dims.total_dim());
  const Scalar amp = Scalar(1) / std::sqrt(Scalar(d));
  for (int i = 0; i < d; ++i) {
    const MultiIndex label(std::vector<int>(static_cast<std::size_t>(n), i));
    amps(flat_index(label, dims)) = amp;
  }
  return PureState<Scalar>(dims, std::move(amps));
}

// Equal superposition of the n single-excitation qubit labels.
template <typename Scalar = double>
PureState<Scalar> w(int n, std::int64_t dense_cap = kDefaultDenseCap) {
  if (n < 2) throw DomainError("w: need n >= 2");
  const DimVec dims = DimVec::qubits(n);
  check_dense_capacity(dims.total_dim(), dense_cap);
  typename PureState<Scalar>::Vector amps =
      PureState<Scalar>::Vector::Zero(dims.total_dim());
  const Scalar amp = Scalar(1) / std::sqrt(Scalar(n));
  for (int site = 1; site <= n; ++site) {
    MultiIndex label(std::vector<int>(static_cast<std::size_t>(n), 0));
    label.set_digit(site, 1);
    amps(flat_index(label, dims)) = amp;
  }
  return PureState<Scalar>(dims, std::move(amps));
}

template <typename Scalar = double>
DensityMatrix<Scalar> maximally_mixed(const DimVec& dims,
                                      std::int64_t dense_cap = kDefaultDenseCap) {
  using Matrix = typename DensityMatrix<Scalar>::Matrix;
  check_dense_capacity(dims.total_dim(), dense_cap);
  const std::int64_t total = dims.total_dim();
  return DensityMatrix<Scalar>(dims, Matrix(Matrix::Identity(total, total) /
                                            Scalar(total)));
}

// visibility * |psi><psi| + (1 - visibility) * I/D.
template <typename Scalar>
DensityMatrix<Scalar> white_noise_mix(const PureState<Scalar>& psi,
                                      Scalar visibility) {
  if (!(visibility >= Scalar(0) && visibility <= Scalar(1))) {
    throw DomainError("white_noise_mix: visibility must lie in [0,1]");
  }
  const std::int64_t total = psi.total_dim();
  typename DensityMatrix<Scalar>::Matrix entries =
      visibility * (psi.amplitudes() * psi.amplitudes().adjoint());
  entries += ((Scalar(1) - visibility) / Scalar(total)) *
             DensityMatrix<Scalar>::Matrix::Identity(total, total);
  return DensityMatrix<Scalar>(psi.dims(), std::move(entries));
}

// (1-alpha-beta)/2^n I + alpha |GHZ_n><GHZ_n| + beta |W_n><W_n| on n qubits.
template <typename Scalar = double>
DensityMatrix<Scalar> ghz_w_family(int n, Scalar alpha, Scalar beta,
                                   std::int64_t dense_cap = kDefaultDenseCap) {
  if (alpha < Scalar(0) || beta < Scalar(0) ||
      alpha + beta > Scalar(1) + Scalar(1e-12)) {
    throw DomainError("ghz_w_family: (alpha, beta) outside the simplex");
  }
  const PureState<Scalar> g = ghz<Scalar>(n, 2, dense_cap);
  const PureState<Scalar> wn = w<Scalar>(n, dense_cap);
  const std::int64_t total = g.total_dim();
  const Scalar noise = std::max(Scalar(0), Scalar(1) - alpha - beta);
  typename DensityMatrix<Scalar>::Matrix entries =
      (noise / Scalar(total)) *
      DensityMatrix<Scalar>::Matrix::Identity(total, total);
  entries += alpha * (g.amplitudes() * g.amplitudes().adjoint());
  entries += beta * (wn.amplitudes() * wn.amplitudes().adjoint());
  return DensityMatrix<Scalar>(g.dims(), std::move(entries));
}

// Convex combination of density matrices on identical dims.
template <typename Scalar>
DensityMatrix<Scalar> mix(
    const std::vector<std::pair<Scalar, DensityMatrix<Scalar>>>& components) {
  if (components.empty()) throw DomainError("mix: no components");
  const DimVec& dims = components.front().second.dims();
  Scalar weight_sum = 0;
  typename DensityMatrix<Scalar>::Matrix entries =
      DensityMatrix<Scalar>::Matrix::Zero(dims.total_dim(), dims.total_dim());
  for (const auto& [weight, rho] : components) {
    if (weight < Scalar(0)) throw DomainError("mix: negative weight");
    if (rho.dims() != dims) throw ShapeError("mix: mismatched dims");
    entries += weight * rho.entries();
    weight_sum += weight;
  }
  if (std::abs(weight_sum - Scalar(1)) > Scalar(1e-12)) {
    throw DomainError("mix: weights sum to " + std::to_string(weight_sum));
  }
  return DensityMatrix<Scalar>(dims, std::move(entries));
}

template <typename Scalar = double>
struct StateDiagnostics {
  Scalar hermiticity_defect = 0;
  Scalar trace_defect = 0;
  std::optional<Scalar> min_eigenvalue;

  bool physical(Scalar tol, Scalar psd_tol) const {
    if (hermiticity_defect > tol || trace_defect > tol) return false;
    return !min_eigenvalue || *min_eigenvalue >= -psd_tol;
  }
};

// Hermiticity/trace defects and (optionally) the smallest eigenvalue.
// Never throws; the caller decides what to do with the defects.
template <typename Scalar>
StateDiagnostics<Scalar> validate(const DensityMatrix<Scalar>& rho,
                                  bool check_psd = false) {
  StateDiagnostics<Scalar> diag;
  diag.hermiticity_defect = hermiticity_defect(rho.entries());
  diag.trace_defect = trace_defect(rho.entries());
  if (check_psd) {
    diag.min_eigenvalue = min_hermitian_eigenvalue(rho.entries());
  }
  return diag;
}

// State families appearing in the detection examples. The scan and threshold
// drivers key off this tag; "visibility" is always the weight on the
// entangled pure state, and reports echo the noise weight 1 - visibility too.
enum class Family {
  WNoise,         // visibility*|W_n><W_n| + noise*I/2^n
  GhzNoise,       // qubit GHZ with white noise
  GhzWNoise,      // two-parameter GHZ/W mixture with white noise
  QuditGhzNoise,  // d-level GHZ with white noise
  CustomMixture,  // arbitrary density matrix supplied by the caller
};

struct FamilySpec {
  Family family = Family::WNoise;
  int n = 0;
  int d = 2;
};

inline std::string family_name(Family family) {
  switch (family) {
    case Family::WNoise: return "w-noise";
    case Family::GhzNoise: return "ghz-noise";
    case Family::GhzWNoise: return "ghz-w-noise";
    case Family::QuditGhzNoise: return "qudit-ghz-noise";
    case Family::CustomMixture: return "custom-mixture";
  }
  throw DomainError("family_name: unknown family");
}

inline Family family_from_name(const std::string& name) {
  if (name == "w-noise") return Family::WNoise;
  if (name == "ghz-noise") return Family::GhzNoise;
  if (name == "ghz-w-noise") return Family::GhzWNoise;
  if (name == "qudit-ghz-noise") return Family::QuditGhzNoise;
  if (name == "custom-mixture") return Family::CustomMixture;
  throw DomainError("unknown family \"" + name + "\"");
}

}  // namespace entwit

#endif
