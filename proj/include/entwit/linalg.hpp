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

#ifndef ENTWIT_LINALG_HPP
#define ENTWIT_LINALG_HPP

#include <Eigen/Dense>

namespace entwit {

// Kronecker product of two dense expressions, row-major block layout.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Matrix = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic,
                               Eigen::Dynamic>;
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Largest entrywise deviation from the adjoint.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real hermiticity_defect(
    const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// |tr m - 1|.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real trace_defect(
    const Eigen::MatrixBase<Derived>& m) {
  using std::abs;
  return abs(m.trace() - typename Derived::Scalar(1));
}

// Smallest eigenvalue of the Hermitian part (m + m^dagger)/2.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real
min_hermitian_eigenvalue(const Eigen::MatrixBase<Derived>& m) {
  using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic,
                               Eigen::Dynamic>;
  Matrix sym = (m + m.adjoint()) / 2;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace entwit

#endif
