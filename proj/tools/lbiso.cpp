// Command-line front end: analyze, classify, family, simulate, oracle.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lbiso/dispersion.hpp"
#include "lbiso/errors.hpp"
#include "lbiso/expansion.hpp"
#include "lbiso/families.hpp"
#include "lbiso/io.hpp"
#include "lbiso/isotropy.hpp"
#include "lbiso/sim.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  std::string config;
  std::vector<std::string> sets;
  std::string output;
  int max_order = 0;
  // family
  std::string scheme;
  int order = 1;
  std::string family_case;
  // simulate
  int steps = 12;
  int grid = 100;
  double dx = 0.02;
  double lambda = 1.0;
  std::string init = "equilibrium";
};

lbiso::Overrides overrides_of(const Options& opt) {
  lbiso::Overrides out;
  for (const auto& s : opt.sets) out.push_back(lbiso::parse_override(s));
  return out;
}

// Writes the artifact into the output directory, or to stdout without one.
void emit(const Options& opt, const std::string& name, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  fs::create_directories(opt.output);
  const fs::path path = fs::path(opt.output) / name;
  std::ofstream out(path);
  if (!out) throw lbiso::ConfigError("cannot write '" + path.string() + "'");
  out << text;
}

void summary(const Options& opt, const std::string& line) {
  if (opt.output.empty()) {
    std::cerr << line << '\n';
  } else {
    std::cout << line << '\n';
  }
}

int run_analyze(const Options& opt) {
  const auto scheme = lbiso::load_scheme(opt.config, overrides_of(opt));
  const int m = opt.max_order > 0 ? opt.max_order : 4;
  const auto tensors = lbiso::equivalent_tensors(scheme, m);
  emit(opt, "tensors.json", lbiso::tensors_to_json(scheme, tensors).dump(2) + "\n");
  std::size_t nonzero = 0;
  for (const auto& t : tensors) nonzero += lbiso::tensor_to_json(t)["entries"].size();
  summary(opt, "analyze " + lbiso::to_string(scheme.id()) + ": orders 1.." + std::to_string(m) + ", " +
                   std::to_string(nonzero) + " non-zero entries");
  return 0;
}

int run_classify(const Options& opt) {
  const auto scheme = lbiso::load_scheme(opt.config, overrides_of(opt));
  const int m = opt.max_order > 0 ? opt.max_order : 5;
  const auto report = lbiso::isotropy_order(scheme, m);
  const json out = lbiso::isotropy_to_json(scheme, report, m);
  emit(opt, "isotropy.json", out.dump(2) + "\n");
  bool agree = true;
  for (const auto& [key, value] : out["closed_form"].items()) {
    const int k = std::stoi(key.substr(6));
    agree = agree && (value.get<bool>() == (report.order_achieved >= k));
  }
  summary(opt, "classify " + lbiso::to_string(scheme.id()) + ": order_achieved = " +
                   std::to_string(report.order_achieved) + " (max " + std::to_string(m) + "), closed form " +
                   (agree ? "agrees" : "DISAGREES"));
  return 0;
}

int run_family(const Options& opt) {
  lbiso::FamilySpec spec;
  spec.scheme = lbiso::parse_scheme_id(opt.scheme);
  spec.order = opt.order;
  spec.family_case = opt.family_case.empty() ? lbiso::default_family_case(spec.scheme, spec.order)
                                             : lbiso::parse_family_case(opt.family_case);
  for (const auto& [key, value] : overrides_of(opt)) {
    try {
      spec.free[lbiso::canonical_parameter_key(key)] = lbiso::Rational::parse(value);
    } catch (const lbiso::ConfigError& e) {
      throw lbiso::ConfigError("malformed rational for '" + key + "': " + e.what());
    }
  }
  const auto scheme = lbiso::build_family(spec);
  json out = lbiso::scheme_to_json(scheme);
  out["family"] = {{"order", spec.order},
                   {"case", lbiso::to_string(spec.family_case)},
                   {"acoustic_preferred", lbiso::acoustic_preferred(spec)}};
  emit(opt, "scheme.json", out.dump(2) + "\n");
  summary(opt, "family " + lbiso::to_string(spec.scheme) + " order " + std::to_string(spec.order) + " case " +
                   lbiso::to_string(spec.family_case));
  return 0;
}

int run_simulate(const Options& opt) {
  const auto scheme = lbiso::load_scheme(opt.config, overrides_of(opt));
  lbiso::SimConfig config;
  config.grid = opt.grid;
  config.dx = opt.dx;
  config.lambda = opt.lambda;
  config.steps = opt.steps;
  config.init = lbiso::parse_init_mode(opt.init);
  const auto result = lbiso::run_gaussian_pulse(scheme, config);
  const json out = lbiso::sim_summary_to_json(scheme, config, result);
  if (!opt.output.empty()) {
    std::ostringstream csv;
    lbiso::write_profile_csv(csv, result.metrics);
    emit(opt, "profiles.csv", csv.str());
  }
  emit(opt, "summary.json", out.dump(2) + "\n");
  std::ostringstream line;
  line.precision(3);
  line << "simulate " << lbiso::to_string(scheme.id()) << ": max|rho_0-rho_pi4| = " << result.metrics.max_pi4
       << ", max|rho_0-rho_atan12| = " << result.metrics.max_atan12
       << ", max|rho_0-rho_pi2| = " << result.metrics.max_pi2;
  summary(opt, line.str());
  return 0;
}

int run_oracle(const Options& opt) {
  const auto scheme = lbiso::load_scheme(opt.config, overrides_of(opt));
  const int m = opt.max_order > 0 ? opt.max_order : 4;
  const auto tensors = lbiso::equivalent_tensors(scheme, m);
  json reports = json::array();
  std::ostringstream line;
  line.precision(3);
  line << "oracle " << lbiso::to_string(scheme.id()) << ": slopes";
  for (int k = 1; k <= m; ++k) {
    const std::vector<lbiso::SymTensor> head(tensors.begin(), tensors.begin() + k);
    const auto report = lbiso::dispersion_check(scheme, head, lbiso::default_wavevectors());
    reports.push_back(lbiso::dispersion_to_json(report));
    line << ' ' << k << ':' << report.slope;
  }
  emit(opt, "oracle.json", json{{"scheme", lbiso::to_string(scheme.id())}, {"reports", reports}}.dump(2) + "\n");
  summary(opt, line.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isotropy analysis and Gaussian-pulse runs for linear MRT lattice Boltzmann schemes"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* c = sub->add_option("--config", opt.config, "scheme config JSON")->check(CLI::ExistingFile);
    if (needs_config) c->required();
    sub->add_option("--set", opt.sets, "override a coefficient, key=value (repeatable)");
    sub->add_option("--output", opt.output, "directory for the artifacts");
  };

  auto* analyze = app.add_subcommand("analyze", "equivalent-equation tensors");
  add_common(analyze, true);
  analyze->add_option("--max-order", opt.max_order, "highest tensor order (default 4)")->check(CLI::Range(1, 5));

  auto* classify = app.add_subcommand("classify", "isotropy order and closed-form cross-check");
  add_common(classify, true);
  classify->add_option("--max-order", opt.max_order, "highest order tested (default 5)")->check(CLI::Range(1, 5));

  auto* family = app.add_subcommand("family", "build a member of an isotropic parameter family");
  family->add_option("scheme", opt.scheme, "d2q9 or d2q13")->required();
  family->add_option("--order", opt.order, "isotropy order")->required()->check(CLI::Range(1, 4));
  family->add_option("--case", opt.family_case, "generic, p6, p7, p8, even-equal, sound-fixed, annex-example-1, ...");
  family->add_option("--set", opt.sets, "free parameter, key=value (repeatable)");
  family->add_option("--output", opt.output, "directory for the artifacts");

  auto* simulate = app.add_subcommand("simulate", "Gaussian pulse run and anisotropy metrics");
  add_common(simulate, true);
  simulate->add_option("--steps", opt.steps, "time steps")->check(CLI::NonNegativeNumber);
  simulate->add_option("--grid", opt.grid, "grid size per side")->check(CLI::PositiveNumber);
  simulate->add_option("--dx", opt.dx, "lattice spacing")->check(CLI::PositiveNumber);
  simulate->add_option("--lambda", opt.lambda, "lattice velocity dx/dt")->check(CLI::PositiveNumber);
  simulate->add_option("--init", opt.init, "non-conserved moments at t=0: equilibrium or zero");

  auto* oracle = app.add_subcommand("oracle", "dispersion slopes of the truncated equivalent equations");
  add_common(oracle, true);
  oracle->add_option("--max-order", opt.max_order, "highest order checked (default 4)")->check(CLI::Range(1, 5));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) return run_analyze(opt);
    if (*classify) return run_classify(opt);
    if (*family) return run_family(opt);
    if (*simulate) return run_simulate(opt);
    if (*oracle) return run_oracle(opt);
  } catch (const lbiso::InfeasibleFamilyError& e) {
    std::cerr << "infeasible family: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
