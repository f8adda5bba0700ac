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

#include "entwit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "entwit/entwit.hpp"

namespace entwit::cli {

namespace {

// Defects accepted on dense inputs before --force is required.
constexpr double kInputValidationTol = 1e-9;

std::int64_t dense_cap_from_env() {
  const char* raw = std::getenv("ENTWIT_DENSE_CAP");
  if (raw == nullptr) return kDefaultDenseCap;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 2) {
    throw DomainError("ENTWIT_DENSE_CAP must be an integer >= 2, got \"" +
                      std::string(raw) + "\"");
  }
  return value;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

MultiIndex parse_label(const std::string& csv, const char* flag) {
  std::vector<int> digits;
  for (const auto& item : split_list(csv)) {
    try {
      digits.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw DomainError(std::string(flag) + ": expected comma-separated digits");
    }
  }
  if (digits.empty()) {
    throw DomainError(std::string(flag) + ": empty label");
  }
  return MultiIndex(std::move(digits));
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw DataError("cannot open \"" + path + "\" for writing");
  out << content;
  if (!content.empty() && content.back() != '\n') out << '\n';
}

struct EvaluateOptions {
  std::string input;
  std::string family;
  int n = 0;
  int d = 2;
  double visibility = -1;
  double alpha = -1;
  double beta = -1;
  std::string criteria = "theorem1";
  double tolerance = kDefaultTolerance;
  int x = 0;
  int y = 1;
  std::string phi1, phi2;
  bool force = false;
  std::string output;
};

int cmd_evaluate(const EvaluateOptions& opt) {
  if (opt.input.empty() == opt.family.empty()) {
    throw DomainError("evaluate: give exactly one state source, --input or --family");
  }

  std::unique_ptr<ElementAccessor<double>> accessor;
  json state_info;
  if (!opt.input.empty()) {
    const auto rho = density_matrix_from_json(load_json_file(opt.input),
                                              dense_cap_from_env());
    const auto diag = validate(rho, false);
    state_info = json{{"source", "file"},
                      {"path", opt.input},
                      {"hermiticity_defect", diag.hermiticity_defect},
                      {"trace_defect", diag.trace_defect}};
    if (!opt.force) {
      if (diag.hermiticity_defect > kInputValidationTol) {
        throw DataError("input matrix is non-Hermitian (defect " +
                        std::to_string(diag.hermiticity_defect) +
                        "); pass --force to evaluate anyway");
      }
      if (diag.trace_defect > kInputValidationTol) {
        throw DataError("input matrix has trace defect " +
                        std::to_string(diag.trace_defect) +
                        "; pass --force to evaluate anyway");
      }
    }
    accessor = std::make_unique<DenseAccessor<double>>(rho);
  } else {
    if (opt.n < 2) throw DomainError("evaluate: --family needs --n >= 2");
    const Family family = family_from_name(opt.family);
    state_info = json{{"source", "family"}, {"family", opt.family}, {"n", opt.n}};
    switch (family) {
      case Family::WNoise: {
        if (opt.visibility < 0) throw DomainError("evaluate: w-noise needs --visibility");
        accessor = std::make_unique<GhzWAccessor<double>>(opt.n, 0.0, opt.visibility);
        state_info["visibility"] = opt.visibility;
        state_info["noise"] = 1.0 - opt.visibility;
        break;
      }
      case Family::GhzNoise:
      case Family::QuditGhzNoise: {
        if (opt.visibility < 0) throw DomainError("evaluate: cat-state family needs --visibility");
        accessor = std::make_unique<QuditGhzAccessor<double>>(opt.n, opt.d, opt.visibility);
        state_info["d"] = opt.d;
        state_info["visibility"] = opt.visibility;
        state_info["noise"] = 1.0 - opt.visibility;
        break;
      }
      case Family::GhzWNoise: {
        if (opt.alpha < 0 || opt.beta < 0) {
          throw DomainError("evaluate: ghz-w-noise needs --alpha and --beta");
        }
        accessor = std::make_unique<GhzWAccessor<double>>(opt.n, opt.alpha, opt.beta);
        state_info["alpha"] = opt.alpha;
        state_info["beta"] = opt.beta;
        break;
      }
      case Family::CustomMixture:
        throw DomainError("evaluate: custom mixtures are supplied via --input");
    }
  }

  CriterionInputs<double> inputs;
  inputs.tolerance = opt.tolerance;
  inputs.locals = LocalPair::uniform(accessor->dims().sites(), opt.x, opt.y);
  if (!opt.phi1.empty() || !opt.phi2.empty()) {
    if (opt.phi1.empty() || opt.phi2.empty()) {
      throw DomainError("evaluate: give both --phi1 and --phi2 or neither");
    }
    inputs.labels = std::make_pair(parse_label(opt.phi1, "--phi1"),
                                   parse_label(opt.phi2, "--phi2"));
  }

  json reports = json::array();
  for (const auto& name : split_list(opt.criteria)) {
    const CriterionTag tag = criterion_from_name(name);
    reports.push_back(to_json(evaluate_criterion(tag, *accessor, inputs)));
  }
  if (reports.empty()) throw DomainError("evaluate: no criterion selected");

  json out{{"state", std::move(state_info)}, {"reports", std::move(reports)}};
  write_output(opt.output, out.dump(2));
  return 0;
}

struct ThresholdOptions {
  std::string family;
  int n = 0;
  int d = 2;
  std::string criterion = "theorem1";
  bool force_bisect = false;
  std::string bracket = "0,1";
  double tol = 1e-10;
  std::string output;
};

int cmd_threshold(const ThresholdOptions& opt) {
  if (opt.family.empty() || opt.n < 2) {
    throw DomainError("threshold: needs --family and --n");
  }
  FamilySpec family;
  family.family = family_from_name(opt.family);
  family.n = opt.n;
  family.d = opt.d;
  const CriterionTag tag = criterion_from_name(opt.criterion);

  const auto bracket_parts = split_list(opt.bracket);
  if (bracket_parts.size() != 2) {
    throw DomainError("threshold: --bracket expects \"lo,hi\"");
  }
  const Bracket bracket{std::stod(bracket_parts[0]), std::stod(bracket_parts[1])};

  std::optional<ThresholdResult> closed;
  try {
    closed = closed_form_threshold(family, tag);
  } catch (const DomainError&) {
    closed.reset();  // no closed form; fall through to bisection
  }

  json out;
  if (closed && !opt.force_bisect) {
    out = to_json(*closed);
  } else if (closed) {
    const auto bisected = bisect_threshold(family, tag, bracket, opt.tol);
    out = json{{"closed_form", to_json(*closed)},
               {"bisection", to_json(bisected)},
               {"difference_visibility",
                bisected.visibility - closed->visibility}};
  } else {
    out = to_json(bisect_threshold(family, tag, bracket, opt.tol));
  }
  write_output(opt.output, out.dump(2));
  return 0;
}

struct ScanOptions {
  int n = 0;
  int steps = 200;
  int steps_alpha = 0;
  int steps_beta = 0;
  std::string criteria = "theorem1,huber3";
  double tolerance = kDefaultTolerance;
  std::string output;
};

int cmd_scan(const ScanOptions& opt) {
  if (opt.n < 3) throw DomainError("scan: needs --n >= 3");
  std::vector<CriterionTag> tags;
  for (const auto& name : split_list(opt.criteria)) {
    tags.push_back(criterion_from_name(name));
  }
  const int steps_alpha = opt.steps_alpha > 0 ? opt.steps_alpha : opt.steps;
  const int steps_beta = opt.steps_beta > 0 ? opt.steps_beta : opt.steps;
  const RegionGrid grid =
      scan_region(opt.n, tags, steps_alpha, steps_beta, opt.tolerance);
  std::ostringstream csv;
  write_region_csv(csv, grid);
  write_output(opt.output, csv.str());
  return 0;
}

struct PlanOptions {
  std::string criterion;
  int n = 0;
  int d = 2;
  int x = 0;
  int y = 1;
  std::string phi1, phi2;
  std::string output;
};

int cmd_plan(const PlanOptions& opt) {
  if (opt.criterion.empty() || opt.n < 2) {
    throw DomainError("plan: needs --criterion and --n");
  }
  const CriterionTag tag = criterion_from_name(opt.criterion);
  const DimVec dims = DimVec::uniform(opt.n, opt.d);
  MeasurementPlan result = [&] {
    if (tag == CriterionTag::Theorem2) {
      const MultiIndex phi1 =
          opt.phi1.empty()
              ? MultiIndex(std::vector<int>(static_cast<std::size_t>(opt.n), 0))
              : parse_label(opt.phi1, "--phi1");
      const MultiIndex phi2 =
          opt.phi2.empty()
              ? MultiIndex(std::vector<int>(static_cast<std::size_t>(opt.n), 1))
              : parse_label(opt.phi2, "--phi2");
      return plan(tag, dims, phi1, phi2);
    }
    return plan(tag, dims, LocalPair::uniform(opt.n, opt.x, opt.y));
  }();
  write_output(opt.output, to_json(result).dump(2));
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "entwit: detects genuinely entangled and non-separable n-partite "
      "states from density-matrix elements, solves noise thresholds, scans "
      "detection regions, and plans the local measurements for each "
      "criterion."};
  app.require_subcommand(1);

  EvaluateOptions eval_opt;
  auto* eval = app.add_subcommand(
      "evaluate", "Evaluate criteria on a state (file or family)");
  eval->add_option("--input", eval_opt.input, "Density-matrix JSON file");
  eval->add_option("--family", eval_opt.family,
                   "w-noise | ghz-noise | ghz-w-noise | qudit-ghz-noise");
  eval->add_option("--n", eval_opt.n, "Number of parties");
  eval->add_option("--d", eval_opt.d, "Local dimension (cat-state families)");
  eval->add_option("--visibility", eval_opt.visibility,
                   "Weight on the entangled pure state");
  eval->add_option("--alpha", eval_opt.alpha, "GHZ weight (ghz-w-noise)");
  eval->add_option("--beta", eval_opt.beta, "W weight (ghz-w-noise)");
  eval->add_option("--criterion", eval_opt.criteria,
                   "Comma list: theorem1,huber3,theorem2,theorem3,corner");
  eval->add_option("--tolerance", eval_opt.tolerance, "Verdict boundary band");
  eval->add_option("--x", eval_opt.x, "Local level |x> (all sites)");
  eval->add_option("--y", eval_opt.y, "Local level |y> (all sites)");
  eval->add_option("--phi1", eval_opt.phi1, "theorem2 bra label, e.g. 0,0,0");
  eval->add_option("--phi2", eval_opt.phi2, "theorem2 ket label, e.g. 1,1,1");
  eval->add_flag("--force", eval_opt.force, "Evaluate despite validation defects");
  eval->add_option("--output,-o", eval_opt.output, "Report path (default stdout)");

  ThresholdOptions thr_opt;
  auto* thr = app.add_subcommand(
      "threshold", "Solve a detection threshold along a noise family");
  thr->add_option("--family", thr_opt.family,
                  "w-noise | ghz-noise | qudit-ghz-noise");
  thr->add_option("--n", thr_opt.n, "Number of parties");
  thr->add_option("--d", thr_opt.d, "Local dimension (qudit-ghz-noise)");
  thr->add_option("--criterion", thr_opt.criterion, "Criterion tag");
  thr->add_flag("--force-bisect", thr_opt.force_bisect,
                "Report bisection next to the closed form");
  thr->add_option("--bracket", thr_opt.bracket, "Bisection bracket lo,hi");
  thr->add_option("--tol", thr_opt.tol, "Bisection width tolerance");
  thr->add_option("--output,-o", thr_opt.output, "Result path (default stdout)");

  ScanOptions scan_opt;
  auto* scan = app.add_subcommand(
      "scan", "Scan criterion margins over the GHZ-W mixture simplex");
  scan->add_option("--n", scan_opt.n, "Number of qubits");
  scan->add_option("--steps", scan_opt.steps, "Grid points per axis");
  scan->add_option("--steps-alpha", scan_opt.steps_alpha, "Alpha-axis override");
  scan->add_option("--steps-beta", scan_opt.steps_beta, "Beta-axis override");
  scan->add_option("--criteria", scan_opt.criteria, "Comma list of criteria");
  scan->add_option("--tolerance", scan_opt.tolerance, "Verdict boundary band");
  scan->add_option("--output,-o", scan_opt.output, "CSV path (default stdout)");

  PlanOptions plan_opt;
  auto* pln = app.add_subcommand(
      "plan", "Emit the local-observable settings for a criterion");
  pln->add_option("--criterion", plan_opt.criterion, "theorem1 | theorem2 | theorem3");
  pln->add_option("--n", plan_opt.n, "Number of parties");
  pln->add_option("--d", plan_opt.d, "Local dimension");
  pln->add_option("--x", plan_opt.x, "Local level |x> (all sites)");
  pln->add_option("--y", plan_opt.y, "Local level |y> (all sites)");
  pln->add_option("--phi1", plan_opt.phi1, "theorem2 label, e.g. 0,0,0");
  pln->add_option("--phi2", plan_opt.phi2, "theorem2 label, e.g. 1,1,1");
  pln->add_option("--output,-o", plan_opt.output, "Plan path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_evaluate(eval_opt);
    if (thr->parsed()) return cmd_threshold(thr_opt);
    if (scan->parsed()) return cmd_scan(scan_opt);
    if (pln->parsed()) return cmd_plan(plan_opt);
    return 2;
  } catch (const CapacityError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 3;
  } catch (const BracketError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 4;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("entwit");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace entwit::cli
