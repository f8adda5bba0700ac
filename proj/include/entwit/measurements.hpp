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

#ifndef ENTWIT_MEASUREMENTS_HPP
#define ENTWIT_MEASUREMENTS_HPP

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "entwit/criteria.hpp"
#include "entwit/hilbert.hpp"
#include "entwit/linalg.hpp"
#include "entwit/states.hpp"

// Local-observable measurement plans. Every matrix element a criterion
// consumes is reconstructed from expectation values of products of
// single-site Hermitian observables:
//   Px = |x><x|, Qy = |y><y|           (diagonal elements)
//   M  = |y><x| + |x><y|               (real parts, in pairs)
//   Mt = i|y><x| - i|x><y|             (imaginary parts, in pairs)
//   R(theta) = cos(theta) M + sin(theta) Mt   (cat-state corner elements)
// Plans are symbolic (factor tags plus angles) and are materialized to dense
// matrices only for verification.

namespace entwit {

enum class FactorKind { Px, Qy, M, Mt, R };

inline std::string to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::Px: return "Px";
    case FactorKind::Qy: return "Qy";
    case FactorKind::M: return "M";
    case FactorKind::Mt: return "Mt";
    case FactorKind::R: return "R";
  }
  throw DomainError("to_string: unknown factor kind");
}

struct SiteFactor {
  FactorKind kind = FactorKind::Px;
  double angle = 0;  // used by R only
};

// What a setting's expectation value contributes to.
struct SettingRole {
  enum class Kind {
    DiagPhi0,     // <phi_0|rho|phi_0>
    DiagPhiI,     // <phi_i|rho|phi_i>, site i
    DiagPhiIJ,    // <phi_ij|rho|phi_ij>, sites i < j
    DiagSubset,   // subset-swapped diagonal of theorem2, bitmask
    OffdiagMM,    // + (1/2) M_i M_j   } real part of <phi_i|rho|phi_j>
    OffdiagMtMt,  // + (1/2) Mt_i Mt_j }
    OffdiagMMt,   // + (1/2) M_i Mt_j  } imaginary part
    OffdiagMtM,   // - (1/2) Mt_i M_j  }
    GhzM,         // setting M_l of the corner-element construction
    GhzMt,        // companion Mt_l
  };
  Kind kind = Kind::DiagPhi0;
  int i = 0, j = 0;        // sites, where applicable
  std::uint64_t mask = 0;  // DiagSubset
  int l = 0;               // GhzM / GhzMt
};

// One product setting: a global coefficient times one factor per site.
struct LocalObservable {
  double coefficient = 1.0;
  std::vector<SiteFactor> factors;
  SettingRole role;
};

// A linear combination of product settings reconstructing one operator.
struct ObservableCombination {
  std::string target;
  std::vector<LocalObservable> terms;
};

struct MeasurementCounts {
  long long total = 0;
  long long offdiagonal = 0;
  long long diagonal = 0;
  long long ghz = 0;
};

// Closed-form observable counts:
//   theorem1: 5(n^2-n)/2 + n + 1
//   theorem3: 5(n^2-n)/2 + 1
//   theorem2: 2^n + 2n - 2
inline MeasurementCounts observable_count(CriterionTag criterion, int n) {
  MeasurementCounts counts;
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  switch (criterion) {
    case CriterionTag::Theorem1:
      if (n < 3) throw DomainError("observable_count: theorem1 needs n >= 3");
      counts.offdiagonal = 4 * pairs;
      counts.diagonal = 1 + n + pairs;
      break;
    case CriterionTag::Theorem3:
      if (n < 2) throw DomainError("observable_count: theorem3 needs n >= 2");
      counts.offdiagonal = 4 * pairs;
      counts.diagonal = 1 + pairs;
      break;
    case CriterionTag::Theorem2: {
      if (n < 2) throw DomainError("observable_count: theorem2 needs n >= 2");
      if (n > 62) throw DomainError("observable_count: 2^n overflows");
      counts.diagonal = (1LL << n) - 2;
      counts.ghz = 2LL * n;
      break;
    }
    default:
      throw DomainError("observable_count: no plan for criterion \"" +
                        criterion_name(criterion) + "\"");
  }
  counts.total = counts.offdiagonal + counts.diagonal + counts.ghz;
  return counts;
}

namespace detail {

inline LocalObservable product_setting(int n, double coefficient,
                                       SettingRole role, FactorKind at_i,
                                       FactorKind at_j) {
  LocalObservable setting;
  setting.coefficient = coefficient;
  setting.factors.assign(static_cast<std::size_t>(n), {FactorKind::Px, 0});
  setting.factors[static_cast<std::size_t>(role.i - 1)] = {at_i, 0};
  setting.factors[static_cast<std::size_t>(role.j - 1)] = {at_j, 0};
  setting.role = role;
  return setting;
}

}  // namespace detail

// The two 2-term combinations whose expectations give the real and (minus)
// imaginary part of <phi_i|rho|phi_j>:
//   O_ij  = (1/2)(..M..M..) + (1/2)(..Mt..Mt..) = |phi_i><phi_j| + h.c.
//   Ot_ij = (1/2)(..M..Mt..) - (1/2)(..Mt..M..) = -i|phi_i><phi_j| + h.c.
inline std::pair<ObservableCombination, ObservableCombination> offdiag_settings(
    int site_i, int site_j, const LocalPair& lp) {
  const int n = lp.sites();
  if (site_i < 1 || site_j > n || site_i >= site_j) {
    throw DomainError("offdiag_settings: need 1 <= i < j <= n");
  }
  using Kind = SettingRole::Kind;
  const auto role = [&](Kind kind) {
    SettingRole r;
    r.kind = kind;
    r.i = site_i;
    r.j = site_j;
    return r;
  };
  ObservableCombination real_part;
  real_part.target = "O_" + std::to_string(site_i) + "_" + std::to_string(site_j);
  real_part.terms.push_back(detail::product_setting(
      n, 0.5, role(Kind::OffdiagMM), FactorKind::M, FactorKind::M));
  real_part.terms.push_back(detail::product_setting(
      n, 0.5, role(Kind::OffdiagMtMt), FactorKind::Mt, FactorKind::Mt));

  ObservableCombination imag_part;
  imag_part.target = "Ot_" + std::to_string(site_i) + "_" + std::to_string(site_j);
  imag_part.terms.push_back(detail::product_setting(
      n, 0.5, role(Kind::OffdiagMMt), FactorKind::M, FactorKind::Mt));
  imag_part.terms.push_back(detail::product_setting(
      n, -0.5, role(Kind::OffdiagMtM), FactorKind::Mt, FactorKind::M));
  return {std::move(real_part), std::move(imag_part)};
}

// The 2n rotated product settings for the corner element <Phi_1|rho|Phi_2>:
// M_l uses angle l*pi/n at every site, the companion Mt_l uses
// (l*pi + pi/2)/n. They obey sum_l (-1)^l M_l = n(|Phi_1><Phi_2| + h.c.).
inline std::vector<LocalObservable> ghz_settings(const MultiIndex& phi1,
                                                 const MultiIndex& phi2) {
  // Requires phi1 and phi2 to differ at every site; LocalPair enforces it.
  const LocalPair lp = LocalPair::from_labels(phi1, phi2);
  const int n = lp.sites();
  if (n < 2) throw DomainError("ghz_settings: need n >= 2");
  std::vector<LocalObservable> settings;
  settings.reserve(static_cast<std::size_t>(2 * n));
  for (int l = 1; l <= n; ++l) {
    for (const bool companion : {false, true}) {
      const double angle = companion ? (l * M_PI + M_PI / 2) / n : l * M_PI / n;
      LocalObservable setting;
      setting.coefficient = 1.0;
      setting.factors.assign(static_cast<std::size_t>(n),
                             {FactorKind::R, angle});
      setting.role.kind =
          companion ? SettingRole::Kind::GhzMt : SettingRole::Kind::GhzM;
      setting.role.l = l;
      settings.push_back(std::move(setting));
    }
  }
  return settings;
}

struct MeasurementPlan {
  CriterionTag criterion = CriterionTag::Theorem1;
  DimVec dims = DimVec::qubits(2);
  LocalPair locals = LocalPair::standard(2);
  std::vector<LocalObservable> settings;
  MeasurementCounts counts;
};

namespace detail {

inline LocalObservable diagonal_setting(const DimVec& dims,
                                        std::uint64_t excited_mask,
                                        SettingRole role) {
  LocalObservable setting;
  setting.coefficient = 1.0;
  setting.factors.reserve(static_cast<std::size_t>(dims.sites()));
  for (int l = 1; l <= dims.sites(); ++l) {
    const bool excited = (excited_mask >> (l - 1)) & 1;
    setting.factors.push_back({excited ? FactorKind::Qy : FactorKind::Px, 0});
  }
  setting.role = role;
  return setting;
}

}  // namespace detail

// Full plan for theorem1 / theorem3 with a local pair.
inline MeasurementPlan plan(CriterionTag criterion, const DimVec& dims,
                            const LocalPair& lp) {
  if (criterion != CriterionTag::Theorem1 &&
      criterion != CriterionTag::Theorem3) {
    throw DomainError("plan: criterion \"" + criterion_name(criterion) +
                      "\" takes a product-label pair, not a local pair");
  }
  lp.check_compatible(dims);
  const int n = dims.sites();
  MeasurementPlan result;
  result.criterion = criterion;
  result.dims = dims;
  result.locals = lp;
  result.counts = observable_count(criterion, n);

  SettingRole role;
  role.kind = SettingRole::Kind::DiagPhi0;
  result.settings.push_back(detail::diagonal_setting(dims, 0, role));
  if (criterion == CriterionTag::Theorem1) {
    for (int i = 1; i <= n; ++i) {
      SettingRole r;
      r.kind = SettingRole::Kind::DiagPhiI;
      r.i = i;
      result.settings.push_back(
          detail::diagonal_setting(dims, std::uint64_t{1} << (i - 1), r));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      SettingRole r;
      r.kind = SettingRole::Kind::DiagPhiIJ;
      r.i = i;
      r.j = j;
      result.settings.push_back(detail::diagonal_setting(
          dims, (std::uint64_t{1} << (i - 1)) | (std::uint64_t{1} << (j - 1)),
          r));
      auto [real_part, imag_part] = offdiag_settings(i, j, lp);
      for (auto& term : real_part.terms) result.settings.push_back(std::move(term));
      for (auto& term : imag_part.terms) result.settings.push_back(std::move(term));
    }
  }
  if (static_cast<long long>(result.settings.size()) != result.counts.total) {
    throw Error("plan: setting count does not match the closed form");
  }
  return result;
}

// Full plan for theorem2 with a product-label pair differing at every site.
inline MeasurementPlan plan(CriterionTag criterion, const DimVec& dims,
                            const MultiIndex& phi1, const MultiIndex& phi2) {
  if (criterion != CriterionTag::Theorem2) {
    throw DomainError("plan: criterion \"" + criterion_name(criterion) +
                      "\" takes a local pair, not a product-label pair");
  }
  const LocalPair lp = LocalPair::from_labels(phi1, phi2);
  lp.check_compatible(dims);
  const int n = dims.sites();
  if (n > detail::kSubsetEnumerationMaxSites) {
    throw CapacityError("plan: theorem2 subset sweep capped at n = " +
                        std::to_string(detail::kSubsetEnumerationMaxSites));
  }
  MeasurementPlan result;
  result.criterion = criterion;
  result.dims = dims;
  result.locals = lp;
  result.counts = observable_count(criterion, n);

  const std::uint64_t last = full_mask(n) - 1;
  for (std::uint64_t mask = 1; mask <= last; ++mask) {
    SettingRole role;
    role.kind = SettingRole::Kind::DiagSubset;
    role.mask = mask;
    result.settings.push_back(detail::diagonal_setting(dims, mask, role));
  }
  for (auto& setting : ghz_settings(phi1, phi2)) {
    result.settings.push_back(std::move(setting));
  }
  if (static_cast<long long>(result.settings.size()) != result.counts.total) {
    throw Error("plan: setting count does not match the closed form");
  }
  return result;
}

// ---------------------------------------------------------------------------
// Materialization and reconstruction (verification path).

template <typename Scalar = double>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>
site_factor_matrix(const SiteFactor& factor, int dim, int x, int y) {
  using Matrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
  using Complex = std::complex<Scalar>;
  Matrix m = Matrix::Zero(dim, dim);
  switch (factor.kind) {
    case FactorKind::Px:
      m(x, x) = Complex(1, 0);
      break;
    case FactorKind::Qy:
      m(y, y) = Complex(1, 0);
      break;
    case FactorKind::M:
      m(y, x) = Complex(1, 0);
      m(x, y) = Complex(1, 0);
      break;
    case FactorKind::Mt:
      m(y, x) = Complex(0, 1);
      m(x, y) = Complex(0, -1);
      break;
    case FactorKind::R: {
      const Scalar angle = static_cast<Scalar>(factor.angle);
      m(y, x) = std::polar(Scalar(1), angle);
      m(x, y) = std::polar(Scalar(1), -angle);
      break;
    }
  }
  return m;
}

template <typename Scalar = double>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> materialize(
    const LocalObservable& setting, const DimVec& dims, const LocalPair& lp,
    std::int64_t dense_cap = kDefaultDenseCap) {
  lp.check_compatible(dims);
  check_dense_capacity(dims.total_dim(), dense_cap);
  if (static_cast<int>(setting.factors.size()) != dims.sites()) {
    throw ShapeError("materialize: factor count != site count");
  }
  using Matrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix out = site_factor_matrix<Scalar>(setting.factors[0], dims.local_dim(1),
                                          lp.x(1), lp.y(1));
  for (int l = 2; l <= dims.sites(); ++l) {
    out = kron(out, site_factor_matrix<Scalar>(
                        setting.factors[static_cast<std::size_t>(l - 1)],
                        dims.local_dim(l), lp.x(l), lp.y(l)));
  }
  return static_cast<Scalar>(setting.coefficient) * out;
}

template <typename Scalar = double>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> materialize(
    const ObservableCombination& combination, const DimVec& dims,
    const LocalPair& lp, std::int64_t dense_cap = kDefaultDenseCap) {
  using Matrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix out = Matrix::Zero(dims.total_dim(), dims.total_dim());
  for (const auto& term : combination.terms) {
    out += materialize<Scalar>(term, dims, lp, dense_cap);
  }
  return out;
}

// tr(rho * coefficient * O): what the experiment reads out for one setting.
template <typename Scalar>
Scalar setting_expectation(const LocalObservable& setting,
                           const DensityMatrix<Scalar>& rho,
                           const LocalPair& lp) {
  const auto observable = materialize<Scalar>(setting, rho.dims(), lp);
  const std::complex<Scalar> value = (rho.entries() * observable).trace();
  if (std::abs(value.imag()) > Scalar(1e-10)) {
    throw DataError("setting_expectation: observable expectation not real");
  }
  return value.real();
}

// Rebuilds every matrix element the plan's criterion consumes from the
// settings' expectation values alone.
template <typename Scalar = double>
std::vector<ElementRecord<Scalar>> reconstruct_elements(
    const MeasurementPlan& plan, const DensityMatrix<Scalar>& rho) {
  if (rho.dims() != plan.dims) {
    throw ShapeError("reconstruct_elements: state dims do not match the plan");
  }
  const DimVec& dims = plan.dims;
  const LocalPair& lp = plan.locals;
  const int n = dims.sites();

  using Kind = SettingRole::Kind;
  std::vector<ElementRecord<Scalar>> records;
  std::map<std::pair<int, int>, std::pair<Scalar, Scalar>> offdiag;  // <O>, <Ot>
  Scalar ghz_real = 0, ghz_imag = 0;
  bool has_ghz = false;

  for (const auto& setting : plan.settings) {
    const Scalar expectation = setting_expectation(setting, rho, lp);
    switch (setting.role.kind) {
      case Kind::DiagPhi0: {
        const MultiIndex label = excitation_label(dims, lp, std::uint64_t{0});
        records.push_back({label, label, {expectation, 0}});
        break;
      }
      case Kind::DiagPhiI: {
        const MultiIndex label = excitation_label(
            dims, lp, std::uint64_t{1} << (setting.role.i - 1));
        records.push_back({label, label, {expectation, 0}});
        break;
      }
      case Kind::DiagPhiIJ: {
        const MultiIndex label = excitation_label(
            dims, lp,
            (std::uint64_t{1} << (setting.role.i - 1)) |
                (std::uint64_t{1} << (setting.role.j - 1)));
        records.push_back({label, label, {expectation, 0}});
        break;
      }
      case Kind::DiagSubset: {
        const MultiIndex label = excitation_label(dims, lp, setting.role.mask);
        records.push_back({label, label, {expectation, 0}});
        break;
      }
      case Kind::OffdiagMM:
      case Kind::OffdiagMtMt:
        offdiag[{setting.role.i, setting.role.j}].first += expectation;
        break;
      case Kind::OffdiagMMt:
      case Kind::OffdiagMtM:
        offdiag[{setting.role.i, setting.role.j}].second += expectation;
        break;
      case Kind::GhzM:
        ghz_real += (setting.role.l % 2 == 0 ? 1 : -1) * expectation;
        has_ghz = true;
        break;
      case Kind::GhzMt:
        ghz_imag += (setting.role.l % 2 == 0 ? 1 : -1) * expectation;
        has_ghz = true;
        break;
    }
  }

  for (const auto& [sites, values] : offdiag) {
    const auto [o_value, ot_value] = values;
    const MultiIndex bra =
        excitation_label(dims, lp, std::uint64_t{1} << (sites.first - 1));
    const MultiIndex ket =
        excitation_label(dims, lp, std::uint64_t{1} << (sites.second - 1));
    records.push_back({bra, ket, {o_value / 2, -ot_value / 2}});
  }
  if (has_ghz) {
    // sum_l (-1)^l M_l = n O, so <O> = (1/n) sum_l (-1)^l <M_l>.
    const Scalar o_value = ghz_real / Scalar(n);
    const Scalar ot_value = ghz_imag / Scalar(n);
    const MultiIndex phi1(lp.x_levels());
    const MultiIndex phi2(lp.y_levels());
    records.push_back({phi1, phi2, {o_value / 2, -ot_value / 2}});
  }
  return records;
}

}  // namespace entwit

#endif
