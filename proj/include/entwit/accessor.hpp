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

#ifndef ENTWIT_ACCESSOR_HPP
#define ENTWIT_ACCESSOR_HPP

#include <cmath>
#include <complex>
#include <memory>
#include <utility>

#include "entwit/states.hpp"

// Matrix-element access <a|rho|b> for product-basis labels. The criteria
// consume this interface, never raw matrices, so closed-form family backends
// evaluate at any n without materializing 2^n x 2^n storage.

namespace entwit {

template <typename Scalar = double>
class ElementAccessor {
 public:
  using Complex = std::complex<Scalar>;

  virtual ~ElementAccessor() = default;

  virtual const DimVec& dims() const = 0;
  virtual Complex element(const MultiIndex& bra, const MultiIndex& ket) const = 0;
};

template <typename Scalar = double>
class DenseAccessor final : public ElementAccessor<Scalar> {
 public:
  explicit DenseAccessor(DensityMatrix<Scalar> rho) : rho_(std::move(rho)) {}

  const DimVec& dims() const override { return rho_.dims(); }

  typename ElementAccessor<Scalar>::Complex element(
      const MultiIndex& bra, const MultiIndex& ket) const override {
    return rho_.entries()(flat_index(bra, rho_.dims()),
                          flat_index(ket, rho_.dims()));
  }

  const DensityMatrix<Scalar>& state() const { return rho_; }

 private:
  DensityMatrix<Scalar> rho_;
};

// Closed-form elements of (1-a-b)/2^n I + a |GHZ_n><GHZ_n| + b |W_n><W_n|
// on n qubits. alpha = 0 gives the W/white-noise family with visibility beta,
// beta = 0 the qubit GHZ/white-noise family with visibility alpha.
template <typename Scalar = double>
class GhzWAccessor final : public ElementAccessor<Scalar> {
 public:
  GhzWAccessor(int n, Scalar alpha, Scalar beta)
      : dims_(DimVec::qubits(n)), alpha_(alpha), beta_(beta) {
    if (alpha < Scalar(0) || beta < Scalar(0) ||
        alpha + beta > Scalar(1) + Scalar(1e-12)) {
      throw DomainError("GhzWAccessor: (alpha, beta) outside the simplex");
    }
    noise_entry_ = std::max(Scalar(0), Scalar(1) - alpha - beta) *
                   std::exp2(static_cast<Scalar>(-n));
    ghz_amp_ = Scalar(1) / std::sqrt(Scalar(2));
    w_amp_ = Scalar(1) / std::sqrt(Scalar(n));
  }

  static GhzWAccessor w_noise(int n, Scalar visibility) {
    return GhzWAccessor(n, Scalar(0), visibility);
  }

  const DimVec& dims() const override { return dims_; }

  typename ElementAccessor<Scalar>::Complex element(
      const MultiIndex& bra, const MultiIndex& ket) const override {
    Scalar value = 0;
    if (alpha_ != Scalar(0)) value += alpha_ * ghz_amp(bra) * ghz_amp(ket);
    if (beta_ != Scalar(0)) value += beta_ * w_amp(bra) * w_amp(ket);
    if (bra == ket) value += noise_entry_;
    return {value, Scalar(0)};
  }

 private:
  Scalar ghz_amp(const MultiIndex& label) const {
    check_label(label);
    int ones = 0;
    for (int digit : label.digits()) ones += digit;
    return (ones == 0 || ones == dims_.sites()) ? ghz_amp_ : Scalar(0);
  }

  Scalar w_amp(const MultiIndex& label) const {
    check_label(label);
    int ones = 0;
    for (int digit : label.digits()) ones += digit;
    return ones == 1 ? w_amp_ : Scalar(0);
  }

  void check_label(const MultiIndex& label) const {
    if (label.sites() != dims_.sites()) {
      throw ShapeError("GhzWAccessor: label has wrong site count");
    }
    for (int digit : label.digits()) {
      if (digit != 0 && digit != 1) {
        throw DomainError("GhzWAccessor: non-qubit digit in label");
      }
    }
  }

  DimVec dims_;
  Scalar alpha_, beta_, noise_entry_, ghz_amp_, w_amp_;
};

// Closed-form elements of p |Psi><Psi| + (1-p)/d^n I with Psi the d-level
// cat state on n sites.
template <typename Scalar = double>
class QuditGhzAccessor final : public ElementAccessor<Scalar> {
 public:
  QuditGhzAccessor(int n, int d, Scalar visibility)
      : dims_(DimVec::uniform(n, d)), visibility_(visibility) {
    if (!(visibility >= Scalar(0) && visibility <= Scalar(1))) {
      throw DomainError("QuditGhzAccessor: visibility must lie in [0,1]");
    }
    ghz_entry_ = visibility_ / Scalar(d);
    noise_entry_ = (Scalar(1) - visibility_) /
                   std::pow(Scalar(d), static_cast<Scalar>(n));
  }

  const DimVec& dims() const override { return dims_; }

  typename ElementAccessor<Scalar>::Complex element(
      const MultiIndex& bra, const MultiIndex& ket) const override {
    Scalar value = 0;
    if (constant_label(bra) && constant_label(ket)) value += ghz_entry_;
    if (bra == ket) value += noise_entry_;
    return {value, Scalar(0)};
  }

 private:
  bool constant_label(const MultiIndex& label) const {
    if (label.sites() != dims_.sites()) {
      throw ShapeError("QuditGhzAccessor: label has wrong site count");
    }
    const int first = label.digit(1);
    for (int l = 1; l <= label.sites(); ++l) {
      const int digit = label.digit(l);
      if (digit < 0 || digit >= dims_.local_dim(l)) {
        throw DomainError("QuditGhzAccessor: digit out of range");
      }
      if (digit != first) return false;
    }
    return true;
  }

  DimVec dims_;
  Scalar visibility_, ghz_entry_, noise_entry_;
};

// One-parameter slice of a family at the given visibility; used by the
// threshold solver. The GHZ-W family is two-parameter and not supported here.
template <typename Scalar = double>
std::unique_ptr<ElementAccessor<Scalar>> family_accessor(const FamilySpec& spec,
                                                         Scalar visibility) {
  switch (spec.family) {
    case Family::WNoise:
      return std::make_unique<GhzWAccessor<Scalar>>(spec.n, Scalar(0), visibility);
    case Family::GhzNoise:
      return std::make_unique<QuditGhzAccessor<Scalar>>(spec.n, 2, visibility);
    case Family::QuditGhzNoise:
      return std::make_unique<QuditGhzAccessor<Scalar>>(spec.n, spec.d, visibility);
    case Family::GhzWNoise:
      throw DomainError(
          "family_accessor: ghz-w-noise is two-parameter; construct "
          "GhzWAccessor(n, alpha, beta) directly");
    case Family::CustomMixture:
      throw DomainError("family_accessor: custom mixtures come from dense input");
  }
  throw DomainError("family_accessor: unknown family");
}

}  // namespace entwit

#endif
