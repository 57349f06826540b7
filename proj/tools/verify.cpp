// Copyright 2026 The afock Authors
// SPDX-License-Identifier: Apache-2.0

// verify run <config> [--suite NAME]... [--seed N] [--tol X] [--out DIR] [--n N]
//
// Exit status: 0 when every assertion passes, 1 on a failed assertion or an
// aborted suite, 2 on bad input (config, flags, caps).

#include <afock/suites.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

using afock::InputError;

// "--tol 10" scales every tolerance; "--tol key=value" sets one.
void apply_tolerance(afock::Tolerances& t, const std::string& spec) {
  std::map<std::string, double*> fields{
      {"car", &t.car},           {"moment", &t.moment},
      {"tomita", &t.tomita},     {"wick", &t.wick},
      {"rn_state", &t.rn_state}, {"rn_normalisation", &t.rn_normalisation},
      {"cocycle", &t.cocycle},   {"unitary", &t.unitary},
      {"multiplicative", &t.multiplicative}, {"commutes_j", &t.commutes_j},
      {"permutation", &t.permutation}, {"key_max", &t.key_max},
      {"key_spectral", &t.key_spectral}, {"resolution", &t.resolution},
      {"vanishing", &t.vanishing}, {"sharpness", &t.sharpness},
      {"crossed", &t.crossed},   {"membership", &t.membership},
  };
  const auto eq = spec.find('=');
  const std::string key = eq == std::string::npos ? "" : spec.substr(0, eq);
  const std::string text = eq == std::string::npos ? spec : spec.substr(eq + 1);
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw InputError("--tol: not a number: " + text);
  }
  if (!(value > 0)) throw InputError("--tol: must be positive");
  if (key.empty()) {
    for (auto& [name, ptr] : fields) {
      if (name != "sharpness") *ptr *= value;
    }
    return;
  }
  auto it = fields.find(key);
  if (it == fields.end()) throw InputError("--tol: unknown tolerance '" + key + "'");
  *it->second = value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of CAR-algebra Bernoulli actions"};
  app.require_subcommand(1);
  auto* run = app.add_subcommand("run", "Run the verification suites of a scenario");

  std::string config;
  std::vector<std::string> suites;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> tols;
  std::string out = "verify-report";
  std::optional<std::size_t> wick_n;
  bool serial = false;
  bool quiet = false;
  bool timings = false;
  run->add_option("config", config, "Scenario JSON file")->required();
  run->add_option("--suite", suites, "Run only this suite (repeatable)");
  run->add_option("--seed", seed, "Override the scenario seed");
  run->add_option("--tol", tols, "Scale all tolerances by X, or set one with NAME=X (repeatable)");
  run->add_option("--out", out, "Directory for report.json and report.txt");
  run->add_option("--n", wick_n, "Largest Wick word length");
  run->add_flag("--serial", serial, "Run suites one after another");
  run->add_flag("-q,--quiet", quiet, "Only print the summary line");
  run->add_flag("--timings", timings, "Per-suite wall time on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    afock::Scenario s = afock::load_scenario(config);
    if (seed) s.seed = *seed;
    if (wick_n) s.samples.wick_n = *wick_n;
    for (const auto& t : tols) apply_tolerance(s.tol, t);

    std::cout << "scenario " << s.name << "  seed " << s.seed << "\n";
    afock::RunOptions opts;
    opts.suites = suites;
    opts.parallel = !serial;
    opts.verbose = timings;
    const afock::Report report = afock::run_scenario(s, opts);
    report.write(out);

    if (!quiet) {
      for (const auto& r : report.suites) {
        std::cout << "  " << (r.passed() ? "PASS " : "FAIL ") << r.suite << "  " << r.assertions.size()
                  << " assertions";
        if (r.failures() > 0) std::cout << ", " << r.failures() << " failed";
        if (!r.error.empty()) std::cout << "  aborted: " << r.error;
        std::cout << "\n";
        for (const auto& a : r.assertions) {
          if (!a.recorded && !a.pass) {
            std::cout << "      " << a.reference << "  " << a.parameters << "  " << afock::format_number(a.value)
                      << " > " << afock::format_number(a.bound) << "\n";
          }
        }
      }
    }
    std::cout << (report.passed() ? "PASS" : "FAIL") << "  report in " << out << "\n";
    return report.passed() ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }
}
