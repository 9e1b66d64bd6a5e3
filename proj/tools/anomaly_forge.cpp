#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "aforge/anomaly.hpp"
#include "aforge/error.hpp"
#include "aforge/perturbation.hpp"
#include "aforge/report.hpp"
#include "aforge/scenarios.hpp"
#include "aforge/spectral_oracle.hpp"

using namespace aforge;

namespace {

enum Exit { kOk = 0, kReproductionFailed = 1, kUsage = 2, kNumerics = 3 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Unconverged:
    case ErrorKind::NotPowerLaw:
    case ErrorKind::MixedSign:
    case ErrorKind::TailDivergent: return kNumerics;
    default: return kUsage;
  }
}

struct Options {
  std::string potential;
  double lambda_min = 10.0;
  double lambda_max = 1000.0;
  int points = 17;
  std::string method;
  std::string format;
  std::string out;
  double hbar = 1.0, mass = 1.0, e2 = 1.0;
  std::string target;
  double Z = 1.0;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) raise(ErrorKind::InvalidArgument, "cannot open '" + o.out + "' for writing");
  f << text;
}

PotentialSpec require_potential(const Options& o) {
  if (o.potential.empty()) raise(ErrorKind::InvalidArgument, "--potential is required");
  return parse_potential(o.potential);
}

TraceSamples run_trace(const Options& o, const PotentialSpec& spec, const UnitSystem& units) {
  if (o.points < 4) raise(ErrorKind::InvalidArgument, "--points must be at least 4");
  if (!(o.lambda_min > 0.0) || !(o.lambda_min < o.lambda_max))
    raise(ErrorKind::InvalidArgument, "need 0 < --lambda-min < --lambda-max");
  const auto grid = geometric_grid(o.lambda_min, o.lambda_max, static_cast<std::size_t>(o.points));
  std::string method = o.method;
  if (method.empty())
    method = spec.family == PotentialFamily::InverseSquare ? "oracle" : "perturbative-2";
  if (method == "perturbative-1") return sample_w(spec, units, grid, Order::First);
  if (method == "perturbative-2") return sample_w(spec, units, grid, Order::Second);
  return sample_oracle(spec, units, grid);
}

int reproduce(const Options& o, const UnitSystem& units) {
  std::vector<Check> checks;
  if (o.target == "eq7") {
    double alpha = 50.0;
    if (!o.potential.empty()) {
      const auto spec = parse_potential(o.potential);
      if (spec.family != PotentialFamily::InverseSquare)
        raise(ErrorKind::InvalidArgument, "eq7 needs an inverse-square potential");
      alpha = spec.alpha;
    }
    checks.push_back(eq7_check(case_a_study(alpha, units), alpha, units));
  } else if (o.target == "case-b-energy") {
    checks.push_back(case_b_energy_check(o.Z, units));
  } else if (o.target == "w1-scaling") {
    checks.push_back(w1_scaling_check(o.Z, units));
  } else {
    checks.push_back(w2_closed_form_check(o.Z, 10.0, units));
    checks.push_back(w2_closed_form_check(o.Z, 40.0, units));
  }
  bool ok = true;
  for (const auto& c : checks) {
    std::cout << "target=" << o.target << ' ' << format_check(c) << '\n';
    ok = ok && c.passed;
  }
  return ok ? kOk : kReproductionFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum anomalies of regularized resolvent traces in singular potentials"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--potential", o.potential, "e.g. coulomb:Z=1, inverse-square:alpha=50");
  app.add_option("--lambda-min", o.lambda_min, "smallest regulator")->capture_default_str();
  app.add_option("--lambda-max", o.lambda_max, "largest regulator")->capture_default_str();
  app.add_option("--points", o.points, "geometric grid points")->capture_default_str();
  app.add_option("--method", o.method, "perturbative-1 | perturbative-2 | oracle")
      ->check(CLI::IsMember({"perturbative-1", "perturbative-2", "oracle"}));
  app.add_option("--format", o.format, "csv | keyvalue")->check(CLI::IsMember({"csv", "keyvalue"}));
  app.add_option("--out", o.out, "write output here instead of stdout");
  app.add_option("--hbar", o.hbar)->capture_default_str();
  app.add_option("--mass", o.mass)->capture_default_str();
  app.add_option("--e2", o.e2)->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "print the singularity class");
  auto* trace_cmd = app.add_subcommand("trace", "sample w(Lambda) as CSV");
  auto* anomaly_cmd = app.add_subcommand("anomaly", "sample, fit and extract the anomalies");
  auto* reproduce_cmd = app.add_subcommand("reproduce", "run a reference scenario");
  reproduce_cmd->add_option("--target", o.target)
      ->required()
      ->check(CLI::IsMember({"eq7", "case-b-energy", "w1-scaling", "w2-closed-form"}));
  reproduce_cmd->add_option("--Z", o.Z, "charge for the Coulomb targets")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const auto units = UnitSystem::make(o.hbar, o.mass, o.e2);
    if (classify_cmd->parsed()) {
      const auto c = classify(require_potential(o));
      emit(o, std::string("case ") + to_string(c.case_label) + ", " + to_string(c.large_x_tail) + "\n");
      return kOk;
    }
    if (trace_cmd->parsed()) {
      if (o.format == "keyvalue") raise(ErrorKind::InvalidArgument, "trace writes CSV only");
      const auto spec = require_potential(o);
      emit(o, emit_trace_csv(run_trace(o, spec, units)));
      return kOk;
    }
    if (anomaly_cmd->parsed()) {
      const auto spec = require_potential(o);
      const auto result = extract_anomalies(run_trace(o, spec, units));
      emit(o, emit_report(result, o.format == "csv" ? ReportFormat::Csv : ReportFormat::KeyValue));
      return kOk;
    }
    if (reproduce_cmd->parsed()) return reproduce(o, units);
  } catch (const Error& e) {
    std::cerr << "anomaly-forge: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "anomaly-forge: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
