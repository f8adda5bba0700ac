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

#ifndef ENTWIT_IO_HPP
#define ENTWIT_IO_HPP

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "entwit/criteria.hpp"
#include "entwit/measurements.hpp"
#include "entwit/states.hpp"
#include "entwit/thresholds.hpp"

// JSON exchange formats and the region-scan CSV. The density-matrix format
// is {"dims": [d_1..d_n], "re": [[..]], "im": [[..]]} with full-precision
// numbers; malformed inputs are rejected with a diagnostic naming the first
// violated requirement.

namespace entwit {

using json = nlohmann::json;

inline json to_json(const DensityMatrix<double>& rho) {
  json out;
  out["dims"] = rho.dims().dims();
  const auto& entries = rho.entries();
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < entries.rows(); ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index j = 0; j < entries.cols(); ++j) {
      re_row.push_back(entries(i, j).real());
      im_row.push_back(entries(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

inline DensityMatrix<double> density_matrix_from_json(
    const json& in, std::int64_t dense_cap = kDefaultDenseCap) {
  if (!in.is_object()) throw DataError("matrix JSON: top level must be an object");
  if (!in.contains("dims") || !in["dims"].is_array()) {
    throw DataError("matrix JSON: missing \"dims\" array");
  }
  std::vector<int> dims_list;
  for (const auto& entry : in["dims"]) {
    if (!entry.is_number_integer()) {
      throw DataError("matrix JSON: \"dims\" entries must be integers");
    }
    dims_list.push_back(entry.get<int>());
  }
  const DimVec dims(std::move(dims_list));
  check_dense_capacity(dims.total_dim(), dense_cap);
  const std::int64_t total = dims.total_dim();

  const auto read_part = [&](const char* key) {
    if (!in.contains(key) || !in[key].is_array() ||
        static_cast<std::int64_t>(in[key].size()) != total) {
      throw DataError(std::string("matrix JSON: \"") + key + "\" must be a " +
                      std::to_string(total) + "x" + std::to_string(total) +
                      " nested array");
    }
    Eigen::MatrixXd part(total, total);
    for (std::int64_t i = 0; i < total; ++i) {
      const auto& row = in[key][static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<std::int64_t>(row.size()) != total) {
        throw DataError(std::string("matrix JSON: \"") + key + "\" row " +
                        std::to_string(i) + " must have " +
                        std::to_string(total) + " entries");
      }
      for (std::int64_t j = 0; j < total; ++j) {
        const auto& value = row[static_cast<std::size_t>(j)];
        if (!value.is_number()) {
          throw DataError(std::string("matrix JSON: \"") + key +
                          "\" entry (" + std::to_string(i) + "," +
                          std::to_string(j) + ") is not a number");
        }
        part(i, j) = value.get<double>();
      }
    }
    return part;
  };

  const Eigen::MatrixXd re = read_part("re");
  const Eigen::MatrixXd im = read_part("im");
  DensityMatrix<double>::Matrix entries(total, total);
  entries.real() = re;
  entries.imag() = im;
  return DensityMatrix<double>(dims, std::move(entries));
}

inline json to_json(const LocalPair& lp) {
  return json{{"x", lp.x_levels()}, {"y", lp.y_levels()}};
}

inline json to_json(const CriterionReport<double>& report) {
  json out;
  out["criterion"] = criterion_name(report.criterion);
  out["dims"] = report.dims.dims();
  out["lhs"] = report.lhs;
  out["rhs"] = report.rhs;
  out["margin"] = report.margin;
  out["verdict"] = to_string(report.verdict);
  out["tolerance"] = report.tolerance;
  if (report.locals) out["locals"] = to_json(*report.locals);
  if (report.labels) {
    out["labels"] = json{{"phi1", report.labels->first.digits()},
                         {"phi2", report.labels->second.digits()}};
  }
  out["extension"] = report.extension;
  json elements = json::array();
  for (const auto& record : report.elements_used) {
    // "entry" carries the 1-based row/column of rho, the labeling convention
    // of the source presentation; digits stay 0-based.
    elements.push_back(
        json{{"bra", record.bra.digits()},
             {"ket", record.ket.digits()},
             {"entry",
              {flat_index(record.bra, report.dims) + 1,
               flat_index(record.ket, report.dims) + 1}},
             {"re", record.value.real()},
             {"im", record.value.imag()}});
  }
  out["elements_used"] = std::move(elements);
  return out;
}

inline json to_json(const ThresholdResult& result) {
  json out;
  out["criterion"] = criterion_name(result.criterion);
  out["family"] = family_name(result.family.family);
  out["n"] = result.family.n;
  if (result.family.family == Family::QuditGhzNoise ||
      result.family.family == Family::GhzNoise) {
    out["d"] = result.family.family == Family::GhzNoise ? 2 : result.family.d;
  }
  out["parameter"] = result.parameter;
  out["method"] = to_string(result.method);
  out["visibility"] = result.visibility;
  out["noise"] = result.noise;
  if (result.visibility_exact) {
    out["visibility_exact"] = result.visibility_exact->str();
  }
  if (result.noise_exact) out["noise_exact"] = result.noise_exact->str();
  if (result.bracket) {
    out["bracket"] = json::array({result.bracket->lo, result.bracket->hi});
    out["bisection_tolerance"] = result.tolerance;
  }
  if (result.margin_at_threshold) {
    out["margin_at_threshold"] = *result.margin_at_threshold;
  }
  return out;
}

inline std::string role_kind_name(SettingRole::Kind kind) {
  using Kind = SettingRole::Kind;
  switch (kind) {
    case Kind::DiagPhi0: return "diag_phi0";
    case Kind::DiagPhiI: return "diag_phi_i";
    case Kind::DiagPhiIJ: return "diag_phi_ij";
    case Kind::DiagSubset: return "diag_subset";
    case Kind::OffdiagMM: return "offdiag_MM";
    case Kind::OffdiagMtMt: return "offdiag_MtMt";
    case Kind::OffdiagMMt: return "offdiag_MMt";
    case Kind::OffdiagMtM: return "offdiag_MtM";
    case Kind::GhzM: return "ghz_M";
    case Kind::GhzMt: return "ghz_Mt";
  }
  throw DomainError("role_kind_name: unknown kind");
}

inline json to_json(const MeasurementPlan& plan) {
  json out;
  out["criterion"] = criterion_name(plan.criterion);
  out["n"] = plan.dims.sites();
  out["dims"] = plan.dims.dims();
  out["locals"] = to_json(plan.locals);
  out["counts"] = json{{"total", plan.counts.total},
                       {"offdiagonal", plan.counts.offdiagonal},
                       {"diagonal", plan.counts.diagonal},
                       {"ghz", plan.counts.ghz}};
  json settings = json::array();
  for (const auto& setting : plan.settings) {
    json role{{"kind", role_kind_name(setting.role.kind)}};
    using Kind = SettingRole::Kind;
    switch (setting.role.kind) {
      case Kind::DiagPhiI:
        role["i"] = setting.role.i;
        break;
      case Kind::DiagPhiIJ:
      case Kind::OffdiagMM:
      case Kind::OffdiagMtMt:
      case Kind::OffdiagMMt:
      case Kind::OffdiagMtM:
        role["i"] = setting.role.i;
        role["j"] = setting.role.j;
        break;
      case Kind::DiagSubset:
        role["mask"] = setting.role.mask;
        break;
      case Kind::GhzM:
      case Kind::GhzMt:
        role["l"] = setting.role.l;
        break;
      case Kind::DiagPhi0:
        break;
    }
    json factors = json::array();
    for (const auto& factor : setting.factors) {
      json f{{"kind", to_string(factor.kind)}};
      if (factor.kind == FactorKind::R) f["angle"] = factor.angle;
      factors.push_back(std::move(f));
    }
    settings.push_back(json{{"coefficient", setting.coefficient},
                            {"role", std::move(role)},
                            {"factors", std::move(factors)}});
  }
  out["settings"] = std::move(settings);
  return out;
}

namespace detail {

inline std::string format_g17(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace detail

// One row per valid cell, all margins then all verdicts, rows lexicographic
// in (alpha index, beta index). Byte-deterministic for fixed inputs.
inline void write_region_csv(std::ostream& os, const RegionGrid& grid) {
  os << "alpha,beta";
  for (CriterionTag tag : grid.criteria) {
    os << ',' << criterion_name(tag) << "_margin";
  }
  for (CriterionTag tag : grid.criteria) {
    os << ',' << criterion_name(tag) << "_verdict";
  }
  os << '\n';
  for (std::size_t i = 0; i < grid.alphas.size(); ++i) {
    for (std::size_t j = 0; j < grid.betas.size(); ++j) {
      const std::size_t cell = grid.cell(static_cast<int>(i), static_cast<int>(j));
      if (!grid.valid[cell]) continue;
      os << detail::format_g17(grid.alphas[i]) << ','
         << detail::format_g17(grid.betas[j]);
      for (std::size_t c = 0; c < grid.criteria.size(); ++c) {
        os << ',' << detail::format_g17(grid.margins[c][cell]);
      }
      for (std::size_t c = 0; c < grid.criteria.size(); ++c) {
        os << ',' << to_string(grid.verdicts[c][cell]);
      }
      os << '\n';
    }
  }
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open \"" + path + "\" for reading");
  json parsed;
  try {
    in >> parsed;
  } catch (const json::parse_error& err) {
    throw DataError("ill-formed JSON in \"" + path + "\": " + err.what());
  }
  return parsed;
}

}  // namespace entwit

#endif
