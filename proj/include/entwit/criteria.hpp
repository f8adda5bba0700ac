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

#ifndef ENTWIT_CRITERIA_HPP
#define ENTWIT_CRITERIA_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entwit/accessor.hpp"
#include "entwit/hilbert.hpp"
#include "entwit/linalg.hpp"
#include "entwit/states.hpp"

// The separability criteria evaluated from density-matrix elements. A state
// violating the biseparable bound (theorem1) is certified genuinely
// n-partite entangled; violating the fully-separable bounds (theorem2,
// theorem3) certifies non-separability. huber3 is the older baseline bound
// that theorem1 tightens. Every criterion term reduces to single-copy matrix
// elements; two_copy_oracle recomputes the same terms on the doubled space
// by brute force and is the independent cross-check.

namespace entwit {

enum class CriterionTag { Theorem1, HuberIII, Theorem2, Theorem3, CornerQubit };

inline std::string criterion_name(CriterionTag tag) {
  switch (tag) {
    case CriterionTag::Theorem1: return "theorem1";
    case CriterionTag::HuberIII: return "huber3";
    case CriterionTag::Theorem2: return "theorem2";
    case CriterionTag::Theorem3: return "theorem3";
    case CriterionTag::CornerQubit: return "corner";
  }
  throw DomainError("criterion_name: unknown tag");
}

inline CriterionTag criterion_from_name(const std::string& name) {
  if (name == "theorem1") return CriterionTag::Theorem1;
  if (name == "huber3" || name == "huber_iii") return CriterionTag::HuberIII;
  if (name == "theorem2") return CriterionTag::Theorem2;
  if (name == "theorem3") return CriterionTag::Theorem3;
  if (name == "corner" || name == "corner_qubit") return CriterionTag::CornerQubit;
  throw DomainError("unknown criterion \"" + name + "\"");
}

enum class Verdict { Detected, NotDetected, Boundary };

inline std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Detected: return "DETECTED";
    case Verdict::NotDetected: return "NOT_DETECTED";
    case Verdict::Boundary: return "BOUNDARY";
  }
  throw DomainError("to_string: unknown verdict");
}

inline Verdict verdict_for(double margin, double tol) {
  if (margin > tol) return Verdict::Detected;
  if (margin < -tol) return Verdict::NotDetected;
  return Verdict::Boundary;
}

template <typename Scalar = double>
struct ElementRecord {
  MultiIndex bra, ket;
  std::complex<Scalar> value;
};

template <typename Scalar = double>
struct CriterionReport {
  CriterionTag criterion = CriterionTag::Theorem1;
  DimVec dims = DimVec::qubits(2);
  Scalar lhs = 0;
  Scalar rhs = 0;
  Scalar margin = 0;
  Verdict verdict = Verdict::NotDetected;
  Scalar tolerance = Scalar(kDefaultTolerance);
  std::optional<LocalPair> locals;
  std::optional<std::pair<MultiIndex, MultiIndex>> labels;
  // Per-site (x,y) pairs beyond the single global pair of the source
  // construction; flagged rather than rejected.
  bool extension = false;
  std::vector<ElementRecord<Scalar>> elements_used;
};

namespace detail {

inline constexpr double kDiagImagTol = 1e-10;

// Subset enumeration walks 2^n - 2 bitmasks; beyond this it is hopeless.
inline constexpr int kSubsetEnumerationMaxSites = 24;

template <typename Scalar>
Scalar checked_diagonal(const ElementAccessor<Scalar>& acc,
                        const MultiIndex& label, Scalar tol) {
  const auto value = acc.element(label, label);
  if (std::abs(value.imag()) > Scalar(kDiagImagTol)) {
    throw DataError("diagonal element " + label.str() +
                    " has non-vanishing imaginary part");
  }
  if (value.real() < -tol) {
    throw DataError("diagonal element " + label.str() + " is negative: " +
                    std::to_string(value.real()));
  }
  return std::max(value.real(), Scalar(0));
}

// Shared element harvest for the excitation-label criteria. Sums run over
// unordered pairs i < j; the ordered-pair sums of the bounds are twice these
// by Hermiticity.
template <typename Scalar>
struct PhiHarvest {
  Scalar d0 = 0;                 // <phi_0|rho|phi_0>
  std::vector<Scalar> di;        // <phi_i|rho|phi_i>, only when requested
  Scalar sum_offdiag_abs = 0;    // sum_{i<j} |<phi_i|rho|phi_j>|
  Scalar sum_sqrt_d0_dij = 0;    // sum_{i<j} sqrt(d0 * <phi_ij|rho|phi_ij>)
  std::vector<ElementRecord<Scalar>> elements;
};

template <typename Scalar>
PhiHarvest<Scalar> harvest_phi_elements(const ElementAccessor<Scalar>& acc,
                                        const LocalPair& lp, Scalar tol,
                                        bool need_single_diagonals) {
  const DimVec& dims = acc.dims();
  lp.check_compatible(dims);
  const int n = dims.sites();

  PhiHarvest<Scalar> harvest;
  const MultiIndex phi0 = excitation_label(dims, lp, std::uint64_t{0});
  harvest.d0 = checked_diagonal(acc, phi0, tol);
  harvest.elements.push_back({phi0, phi0, {harvest.d0, 0}});

  std::vector<MultiIndex> phi(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    phi[static_cast<std::size_t>(i - 1)] =
        excitation_label(dims, lp, std::uint64_t{1} << (i - 1));
  }
  if (need_single_diagonals) {
    harvest.di.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      const MultiIndex& label = phi[static_cast<std::size_t>(i - 1)];
      const Scalar di = checked_diagonal(acc, label, tol);
      harvest.di.push_back(di);
      harvest.elements.push_back({label, label, {di, 0}});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const MultiIndex& phi_i = phi[static_cast<std::size_t>(i - 1)];
      const MultiIndex& phi_j = phi[static_cast<std::size_t>(j - 1)];
      const auto offdiag = acc.element(phi_i, phi_j);
      harvest.sum_offdiag_abs += std::abs(offdiag);
      harvest.elements.push_back({phi_i, phi_j, offdiag});

      const MultiIndex phi_ij = excitation_label(
          dims, lp, (std::uint64_t{1} << (i - 1)) | (std::uint64_t{1} << (j - 1)));
      const Scalar dij = checked_diagonal(acc, phi_ij, tol);
      harvest.sum_sqrt_d0_dij += std::sqrt(harvest.d0 * dij);
      harvest.elements.push_back({phi_ij, phi_ij, {dij, 0}});
    }
  }
  return harvest;
}

template <typename Scalar>
CriterionReport<Scalar> finish_report(CriterionTag tag, const DimVec& dims,
                                      Scalar lhs, Scalar rhs, Scalar tol) {
  CriterionReport<Scalar> report;
  report.criterion = tag;
  report.dims = dims;
  report.lhs = lhs;
  report.rhs = rhs;
  report.margin = lhs - rhs;
  report.tolerance = tol;
  report.verdict = verdict_for(static_cast<double>(report.margin),
                               static_cast<double>(tol));
  return report;
}

inline void validate_label(const DimVec& dims, const MultiIndex& label,
                           const char* who) {
  if (label.sites() != dims.sites()) {
    throw ShapeError(std::string(who) + ": label has wrong site count");
  }
  for (int l = 1; l <= dims.sites(); ++l) {
    if (label.digit(l) < 0 || label.digit(l) >= dims.local_dim(l)) {
      throw DomainError(std::string(who) + ": digit out of range at site " +
                        std::to_string(l));
    }
  }
}

}  // namespace detail

// Biseparable bound. lhs = sum_{i!=j} |<phi_i|rho|phi_j>|; rhs adds the
// geometric-mean diagonal terms and (n-2) times the single-excitation
// diagonals. DETECTED certifies genuine n-partite entanglement.
template <typename Scalar>
CriterionReport<Scalar> theorem1(const ElementAccessor<Scalar>& acc,
                                 const LocalPair& lp,
                                 Scalar tol = Scalar(kDefaultTolerance)) {
  const int n = acc.dims().sites();
  if (n < 3) {
    throw DomainError("theorem1: needs n >= 3; the (n-2) weight degenerates");
  }
  auto harvest = detail::harvest_phi_elements(acc, lp, tol, true);
  Scalar single_sum = 0;
  for (Scalar di : harvest.di) single_sum += di;
  const Scalar lhs = 2 * harvest.sum_offdiag_abs;
  const Scalar rhs = 2 * harvest.sum_sqrt_d0_dij + Scalar(n - 2) * single_sum;
  auto report = detail::finish_report(CriterionTag::Theorem1, acc.dims(), lhs,
                                      rhs, tol);
  report.locals = lp;
  report.extension = !lp.uniform_levels();
  report.elements_used = std::move(harvest.elements);
  return report;
}

// Baseline bound: same lhs, rhs = (n-2) * sum over ALL ordered pairs (i,j)
// of the permutation terms, the i = j convention contributing the plain
// single-excitation diagonals.
template <typename Scalar>
CriterionReport<Scalar> huber_iii(const ElementAccessor<Scalar>& acc,
                                  const LocalPair& lp,
                                  Scalar tol = Scalar(kDefaultTolerance)) {
  const int n = acc.dims().sites();
  if (n < 3) {
    throw DomainError("huber_iii: needs n >= 3");
  }
  auto harvest = detail::harvest_phi_elements(acc, lp, tol, true);
  Scalar single_sum = 0;
  for (Scalar di : harvest.di) single_sum += di;
  const Scalar lhs = 2 * harvest.sum_offdiag_abs;
  const Scalar rhs =
      Scalar(n - 2) * (2 * harvest.sum_sqrt_d0_dij + single_sum);
  auto report = detail::finish_report(CriterionTag::HuberIII, acc.dims(), lhs,
                                      rhs, tol);
  report.locals = lp;
  report.extension = !lp.uniform_levels();
  report.elements_used = std::move(harvest.elements);
  return report;
}

// Fully-separable bound over excitation labels: lhs as theorem1, rhs only
// the geometric-mean diagonal terms. DETECTED certifies non-separability.
// Holds with equality on pure fully separable states.
template <typename Scalar>
CriterionReport<Scalar> theorem3(const ElementAccessor<Scalar>& acc,
                                 const LocalPair& lp,
                                 Scalar tol = Scalar(kDefaultTolerance)) {
  auto harvest = detail::harvest_phi_elements(acc, lp, tol, false);
  const Scalar lhs = 2 * harvest.sum_offdiag_abs;
  const Scalar rhs = 2 * harvest.sum_sqrt_d0_dij;
  auto report = detail::finish_report(CriterionTag::Theorem3, acc.dims(), lhs,
                                      rhs, tol);
  report.locals = lp;
  report.extension = !lp.uniform_levels();
  report.elements_used = std::move(harvest.elements);
  return report;
}

// Fully-separable bound over an arbitrary product-label pair: the corner
// element against the (2^{n+1}-4)-th root of the product of all
// subset-swapped diagonal pairs. Any vanishing factor collapses rhs to 0;
// the product is otherwise accumulated in log space so the 2^n - 2 factors
// cannot underflow.
template <typename Scalar>
CriterionReport<Scalar> theorem2(const ElementAccessor<Scalar>& acc,
                                 const MultiIndex& phi1, const MultiIndex& phi2,
                                 Scalar tol = Scalar(kDefaultTolerance)) {
  const DimVec& dims = acc.dims();
  detail::validate_label(dims, phi1, "theorem2");
  detail::validate_label(dims, phi2, "theorem2");
  if (phi1 == phi2) {
    throw DomainError("theorem2: the two product labels must differ");
  }
  const int n = dims.sites();
  if (n > detail::kSubsetEnumerationMaxSites) {
    throw CapacityError("theorem2: subset enumeration capped at n = " +
                        std::to_string(detail::kSubsetEnumerationMaxSites));
  }

  std::vector<ElementRecord<Scalar>> elements;
  const auto corner = acc.element(phi1, phi2);
  elements.push_back({phi1, phi2, corner});
  const Scalar lhs = std::abs(corner);

  Scalar log_sum = 0;
  bool zero_factor = false;
  const std::uint64_t last = full_mask(n) - 1;
  for (std::uint64_t mask = 1; mask <= last; ++mask) {
    const auto [swapped1, swapped2] = subset_swap_label(phi1, phi2, mask);
    const Scalar diag1 = detail::checked_diagonal(acc, swapped1, tol);
    const Scalar diag2 = detail::checked_diagonal(acc, swapped2, tol);
    // swapped2 reappears as the swapped1 of the complement mask; recording
    // the swapped1 side once per mask lists each consumed diagonal exactly
    // once when the labels differ at every site.
    elements.push_back({swapped1, swapped1, {diag1, 0}});
    if (diag1 <= Scalar(0) || diag2 <= Scalar(0)) {
      zero_factor = true;
    } else {
      log_sum += std::log(diag1) + std::log(diag2);
    }
  }
  const Scalar exponent_den = std::exp2(static_cast<Scalar>(n + 1)) - 4;
  const Scalar rhs = zero_factor ? Scalar(0) : std::exp(log_sum / exponent_den);

  auto report = detail::finish_report(CriterionTag::Theorem2, dims, lhs, rhs, tol);
  report.labels = std::make_pair(phi1, phi2);
  report.elements_used = std::move(elements);
  return report;
}

// Qubit specialization of theorem2 at phi1 = |0...0>, phi2 = |1...1>:
// |rho_{1,2^n}| against the geometric mean of the 2^n - 2 interior diagonal
// entries.
template <typename Scalar>
CriterionReport<Scalar> corner_qubit(const ElementAccessor<Scalar>& acc,
                                     Scalar tol = Scalar(kDefaultTolerance)) {
  const DimVec& dims = acc.dims();
  if (!dims.all_qubits()) {
    throw DomainError("corner_qubit: defined for qubit systems only");
  }
  const int n = dims.sites();
  if (n > detail::kSubsetEnumerationMaxSites) {
    throw CapacityError("corner_qubit: diagonal sweep capped at n = " +
                        std::to_string(detail::kSubsetEnumerationMaxSites));
  }
  const MultiIndex zeros(std::vector<int>(static_cast<std::size_t>(n), 0));
  const MultiIndex ones(std::vector<int>(static_cast<std::size_t>(n), 1));

  std::vector<ElementRecord<Scalar>> elements;
  const auto corner = acc.element(zeros, ones);
  elements.push_back({zeros, ones, corner});
  const Scalar lhs = std::abs(corner);

  Scalar log_sum = 0;
  bool zero_factor = false;
  const std::int64_t total = dims.total_dim();
  for (std::int64_t flat = 1; flat <= total - 2; ++flat) {
    const MultiIndex label = unflatten(flat, dims);
    const Scalar diag = detail::checked_diagonal(acc, label, tol);
    elements.push_back({label, label, {diag, 0}});
    if (diag <= Scalar(0)) {
      zero_factor = true;
    } else {
      log_sum += std::log(diag);
    }
  }
  const Scalar rhs =
      zero_factor ? Scalar(0)
                  : std::exp(log_sum / (static_cast<Scalar>(total) - 2));

  auto report = detail::finish_report(CriterionTag::CornerQubit, dims, lhs,
                                      rhs, tol);
  report.labels = std::make_pair(zeros, ones);
  report.elements_used = std::move(elements);
  return report;
}

// Uniform entry point used by the scan and the CLI. theorem2 takes the label
// pair (default: all-zeros vs all-ones); the excitation criteria take the
// local pair (default: x = 0, y = 1 at every site).
template <typename Scalar = double>
struct CriterionInputs {
  std::optional<LocalPair> locals;
  std::optional<std::pair<MultiIndex, MultiIndex>> labels;
  Scalar tolerance = Scalar(kDefaultTolerance);
};

template <typename Scalar>
CriterionReport<Scalar> evaluate_criterion(
    CriterionTag tag, const ElementAccessor<Scalar>& acc,
    const CriterionInputs<Scalar>& inputs = {}) {
  const int n = acc.dims().sites();
  const LocalPair lp = inputs.locals ? *inputs.locals : LocalPair::standard(n);
  switch (tag) {
    case CriterionTag::Theorem1:
      return theorem1(acc, lp, inputs.tolerance);
    case CriterionTag::HuberIII:
      return huber_iii(acc, lp, inputs.tolerance);
    case CriterionTag::Theorem3:
      return theorem3(acc, lp, inputs.tolerance);
    case CriterionTag::Theorem2: {
      if (inputs.labels) {
        return theorem2(acc, inputs.labels->first, inputs.labels->second,
                        inputs.tolerance);
      }
      const MultiIndex zeros(std::vector<int>(static_cast<std::size_t>(n), 0));
      const MultiIndex ones(std::vector<int>(static_cast<std::size_t>(n), 1));
      return theorem2(acc, zeros, ones, inputs.tolerance);
    }
    case CriterionTag::CornerQubit:
      return corner_qubit(acc, inputs.tolerance);
  }
  throw DomainError("evaluate_criterion: unknown tag");
}

// ---------------------------------------------------------------------------
// Doubled-space brute force.

// The permutation applied to the two copies: the whole system (total) or the
// subsystems in a site subset.
class PermutationSpec {
 public:
  static PermutationSpec total() {
    PermutationSpec spec;
    spec.total_ = true;
    return spec;
  }
  static PermutationSpec subset(std::uint64_t mask) {
    PermutationSpec spec;
    spec.mask_ = mask;
    return spec;
  }
  static PermutationSpec subset(const std::vector<int>& sites, int n) {
    return subset(site_mask(sites, n));
  }

  bool is_total() const { return total_; }
  std::uint64_t mask_for(int n) const { return total_ ? full_mask(n) : mask_; }

 private:
  bool total_ = false;
  std::uint64_t mask_ = 0;
};

// Brute-force criterion terms on the doubled space: rho x rho is
// materialized, the permutation is applied as an operator, and the quadratic
// form is taken with dense algebra. No single-copy shortcut. The total form
// is the one-sided <Phi| rho^x2 P |Phi> of the criterion left-hand sides;
// a subset A gives the conjugated <Phi| P_A^+ rho^x2 P_A |Phi> of the
// right-hand sides.
template <typename Scalar>
Scalar two_copy_oracle(const DensityMatrix<Scalar>& rho, const MultiIndex& bra1,
                       const MultiIndex& bra2, const PermutationSpec& perm,
                       std::int64_t oracle_cap = kDefaultOracleCap) {
  const DimVec& dims = rho.dims();
  const std::int64_t total = dims.total_dim();
  if (total > oracle_cap) {
    throw CapacityError("two_copy_oracle: dimension " + std::to_string(total) +
                        " exceeds oracle capacity " + std::to_string(oracle_cap));
  }
  detail::validate_label(dims, bra1, "two_copy_oracle");
  detail::validate_label(dims, bra2, "two_copy_oracle");
  const std::uint64_t mask = perm.mask_for(dims.sites());
  if (mask > full_mask(dims.sites())) {
    throw DomainError("two_copy_oracle: mask addresses sites beyond n");
  }

  using Matrix = typename DensityMatrix<Scalar>::Matrix;
  using Vector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
  const Matrix doubled = kron(rho.entries(), rho.entries());

  const std::int64_t doubled_dim = total * total;
  Vector phi = Vector::Zero(doubled_dim);
  phi(flat_index(bra1, dims) * total + flat_index(bra2, dims)) = 1;

  // |a>|b> -> |a'>|b'> with digits exchanged on the masked sites.
  const auto permute = [&](const Vector& in) {
    Vector out = Vector::Zero(doubled_dim);
    for (std::int64_t j = 0; j < doubled_dim; ++j) {
      if (in(j) == std::complex<Scalar>(0)) continue;
      const MultiIndex a = unflatten(j / total, dims);
      const MultiIndex b = unflatten(j % total, dims);
      const auto [a2, b2] = subset_swap_label(a, b, mask);
      out(flat_index(a2, dims) * total + flat_index(b2, dims)) += in(j);
    }
    return out;
  };

  const Vector ket = permute(phi);
  const Vector bra = perm.is_total() ? phi : ket;
  const std::complex<Scalar> value = bra.dot(doubled * ket);
  if (std::abs(value.imag()) > Scalar(1e-10)) {
    throw DataError("two_copy_oracle: non-vanishing imaginary part " +
                    std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace entwit

#endif
