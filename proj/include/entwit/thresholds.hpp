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

#ifndef ENTWIT_THRESHOLDS_HPP
#define ENTWIT_THRESHOLDS_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "entwit/accessor.hpp"
#include "entwit/criteria.hpp"
#include "entwit/rational.hpp"
#include "entwit/states.hpp"

// Detection thresholds along one-parameter noise families (closed form and
// bisected) and two-parameter region scans over the GHZ-W mixture.
//
// Every threshold is reported in both conventions: "visibility" is the
// weight on the entangled pure state, "noise" its complement.

namespace entwit {

enum class ThresholdMethod { ClosedForm, Bisection };

inline std::string to_string(ThresholdMethod method) {
  return method == ThresholdMethod::ClosedForm ? "CLOSED_FORM" : "BISECTION";
}

struct Bracket {
  double lo = 0;
  double hi = 1;
};

struct ThresholdResult {
  CriterionTag criterion = CriterionTag::Theorem1;
  FamilySpec family;
  std::string parameter = "visibility";
  double visibility = 0;
  double noise = 0;
  std::optional<Rational> visibility_exact;
  std::optional<Rational> noise_exact;
  ThresholdMethod method = ThresholdMethod::ClosedForm;
  std::optional<Bracket> bracket;
  double tolerance = 0;
  std::optional<double> margin_at_threshold;
};

// Noise-weight thresholds of the W/white-noise family:
//   theorem1: 2^n / (n(2n-3) + 2^n)   (n >= 3)
//   huber3:   2^n / (n^2(n-2) + 2^n)  (n >= 3)
//   theorem3: 2^n / (2^n + n)         (n >= 2)
inline Rational w_noise_closed_form(int n, CriterionTag criterion) {
  const auto pow2n = [n] {
    if (n > 62) throw DomainError("w_noise_closed_form: n too large for exact arithmetic");
    return checked_pow(2, n);
  };
  switch (criterion) {
    case CriterionTag::Theorem1: {
      if (n < 3) throw DomainError("w_noise_closed_form: theorem1 needs n >= 3");
      const std::int64_t p = pow2n();
      return Rational(p, checked_add(checked_mul(n, 2 * std::int64_t{n} - 3), p));
    }
    case CriterionTag::HuberIII: {
      if (n < 3) throw DomainError("w_noise_closed_form: huber3 needs n >= 3");
      const std::int64_t p = pow2n();
      return Rational(p, checked_add(checked_mul(checked_mul(n, n), n - 2), p));
    }
    case CriterionTag::Theorem3: {
      if (n < 2) throw DomainError("w_noise_closed_form: theorem3 needs n >= 2");
      const std::int64_t p = pow2n();
      return Rational(p, checked_add(p, n));
    }
    default:
      throw DomainError("w_noise_closed_form: no closed form for criterion \"" +
                        criterion_name(criterion) + "\"");
  }
}

// Visibility threshold 1/(1 + d^{n-1}) above which the d-level cat state
// with white noise is non-separable.
inline Rational qudit_ghz_closed_form(int n, int d) {
  if (n < 2 || d < 2) throw DomainError("qudit_ghz_closed_form: need n, d >= 2");
  return Rational(1, checked_add(1, checked_pow(d, n - 1)));
}

// Closed-form threshold for a family/criterion pair, in both conventions.
inline ThresholdResult closed_form_threshold(const FamilySpec& family,
                                             CriterionTag criterion) {
  ThresholdResult result;
  result.criterion = criterion;
  result.family = family;
  result.method = ThresholdMethod::ClosedForm;
  switch (family.family) {
    case Family::WNoise: {
      const Rational noise = w_noise_closed_form(family.n, criterion);
      result.noise_exact = noise;
      result.visibility_exact = noise.complement();
      break;
    }
    case Family::GhzNoise:
    case Family::QuditGhzNoise: {
      if (criterion != CriterionTag::Theorem2) {
        throw DomainError("closed_form_threshold: only theorem2 has a closed "
                          "form on the cat-state family");
      }
      const int d = family.family == Family::GhzNoise ? 2 : family.d;
      const Rational visibility = qudit_ghz_closed_form(family.n, d);
      result.visibility_exact = visibility;
      result.noise_exact = visibility.complement();
      break;
    }
    default:
      throw DomainError("closed_form_threshold: no closed form for family \"" +
                        family_name(family.family) + "\"");
  }
  result.visibility = result.visibility_exact->value();
  result.noise = result.noise_exact->value();
  return result;
}

namespace detail {

// Criterion margin as a function of the family visibility.
inline std::function<double(double)> family_margin(const FamilySpec& family,
                                                   CriterionTag criterion,
                                                   double tol) {
  return [family, criterion, tol](double visibility) {
    const auto acc = family_accessor<double>(family, visibility);
    CriterionInputs<double> inputs;
    inputs.tolerance = tol;
    return evaluate_criterion(criterion, *acc, inputs).margin;
  };
}

}  // namespace detail

// Bisection of the criterion margin along the family parameter. The margin
// must change sign across the bracket.
inline ThresholdResult bisect_threshold(const FamilySpec& family,
                                        CriterionTag criterion,
                                        Bracket bracket = {0.0, 1.0},
                                        double tol = 1e-10) {
  if (!(bracket.lo < bracket.hi)) {
    throw DomainError("bisect_threshold: need lo < hi");
  }
  if (tol <= 0) throw DomainError("bisect_threshold: need tol > 0");
  const auto margin = detail::family_margin(family, criterion, tol);

  double lo = bracket.lo;
  double hi = bracket.hi;
  double margin_lo = margin(lo);
  double margin_hi = margin(hi);
  if (margin_lo == 0 || margin_hi == 0 || (margin_lo < 0) == (margin_hi < 0)) {
    throw BracketError("bisect_threshold: margin does not change sign over [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double margin_mid = margin(mid);
    if (margin_mid == 0) {
      lo = hi = mid;
      break;
    }
    if ((margin_mid < 0) == (margin_lo < 0)) {
      lo = mid;
      margin_lo = margin_mid;
    } else {
      hi = mid;
      margin_hi = margin_mid;
    }
  }
  const double root = 0.5 * (lo + hi);

  ThresholdResult result;
  result.criterion = criterion;
  result.family = family;
  result.method = ThresholdMethod::Bisection;
  result.bracket = bracket;
  result.tolerance = tol;
  result.visibility = root;
  result.noise = 1.0 - root;
  result.margin_at_threshold = margin(root);
  return result;
}

// ---------------------------------------------------------------------------
// Two-parameter region scan over the GHZ-W mixture.

struct RegionGrid {
  int n = 0;
  std::vector<CriterionTag> criteria;
  std::vector<double> alphas, betas;
  std::vector<char> valid;                     // alpha_idx * betas + beta_idx
  std::vector<std::vector<double>> margins;    // [criterion][cell]
  std::vector<std::vector<Verdict>> verdicts;  // [criterion][cell]

  std::size_t cell(int alpha_idx, int beta_idx) const {
    return static_cast<std::size_t>(alpha_idx) * betas.size() +
           static_cast<std::size_t>(beta_idx);
  }
};

// Margins of the requested criteria on a steps_alpha x steps_beta grid over
// [0,1]^2, endpoints included; cells with alpha + beta > 1 are marked
// invalid and never evaluated. Cells are independent, so evaluation order
// never affects the output.
inline RegionGrid scan_region(int n, const std::vector<CriterionTag>& criteria,
                              int steps_alpha, int steps_beta,
                              double tol = kDefaultTolerance) {
  if (n < 3) throw DomainError("scan_region: need n >= 3");
  if (n > 30) {
    throw CapacityError("scan_region: closed-form backend capped at n = 30");
  }
  if (steps_alpha < 2 || steps_beta < 2) {
    throw DomainError("scan_region: need at least 2 steps per axis");
  }
  if (criteria.empty()) throw DomainError("scan_region: no criteria selected");

  RegionGrid grid;
  grid.n = n;
  grid.criteria = criteria;
  grid.alphas.resize(static_cast<std::size_t>(steps_alpha));
  grid.betas.resize(static_cast<std::size_t>(steps_beta));
  for (int i = 0; i < steps_alpha; ++i) {
    grid.alphas[static_cast<std::size_t>(i)] = double(i) / double(steps_alpha - 1);
  }
  for (int j = 0; j < steps_beta; ++j) {
    grid.betas[static_cast<std::size_t>(j)] = double(j) / double(steps_beta - 1);
  }

  const std::size_t cells =
      static_cast<std::size_t>(steps_alpha) * static_cast<std::size_t>(steps_beta);
  grid.valid.assign(cells, 0);
  grid.margins.assign(criteria.size(), std::vector<double>(cells, 0.0));
  grid.verdicts.assign(criteria.size(),
                       std::vector<Verdict>(cells, Verdict::NotDetected));

  CriterionInputs<double> inputs;
  inputs.tolerance = tol;
  for (int i = 0; i < steps_alpha; ++i) {
    for (int j = 0; j < steps_beta; ++j) {
      const double alpha = grid.alphas[static_cast<std::size_t>(i)];
      const double beta = grid.betas[static_cast<std::size_t>(j)];
      const std::size_t cell = grid.cell(i, j);
      if (alpha + beta > 1.0 + 1e-12) continue;
      grid.valid[cell] = 1;
      const GhzWAccessor<double> acc(n, alpha, beta);
      for (std::size_t c = 0; c < criteria.size(); ++c) {
        const auto report = evaluate_criterion(criteria[c], acc, inputs);
        grid.margins[c][cell] = report.margin;
        grid.verdicts[c][cell] = report.verdict;
      }
    }
  }
  return grid;
}

// First sign change of a criterion margin along the beta axis at fixed
// alpha index; returns the bracketing beta interval.
inline std::optional<Bracket> column_boundary(const RegionGrid& grid,
                                              CriterionTag criterion,
                                              int alpha_idx) {
  std::size_t c = 0;
  for (; c < grid.criteria.size(); ++c) {
    if (grid.criteria[c] == criterion) break;
  }
  if (c == grid.criteria.size()) {
    throw DomainError("column_boundary: criterion not present in grid");
  }
  for (std::size_t j = 1; j < grid.betas.size(); ++j) {
    const std::size_t prev = grid.cell(alpha_idx, static_cast<int>(j - 1));
    const std::size_t curr = grid.cell(alpha_idx, static_cast<int>(j));
    if (!grid.valid[prev] || !grid.valid[curr]) continue;
    const double a = grid.margins[c][prev];
    const double b = grid.margins[c][curr];
    if ((a <= 0 && b > 0) || (a > 0 && b <= 0)) {
      return Bracket{grid.betas[j - 1], grid.betas[j]};
    }
  }
  return std::nullopt;
}

}  // namespace entwit

#endif
