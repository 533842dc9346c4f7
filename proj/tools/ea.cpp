// Copyright 2026 The erravg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ea: command-line runner for the error-averaging experiments.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "erravg/csv.hpp"
#include "erravg/encoding.hpp"
#include "erravg/experiments.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

// Applies keys from the config file that were not given on the command line.
void apply_config(const std::string& file, const CLI::App& app, erravg::ExperimentParams& p) {
  std::ifstream f(file);
  if (!f) throw erravg::UsageError("cannot read config file '" + file + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw erravg::UsageError("config file '" + file + "': " + e.what());
  }
  if (!j.is_object()) throw erravg::UsageError("config file must hold a JSON object");

  auto unset = [&app](const char* flag) { return app.get_option(flag)->count() == 0; };
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "v") {
        if (unset("--v")) p.v = value.get<double>();
      } else if (key == "N") {
        if (unset("--N")) p.n = value.get<std::size_t>();
      } else if (key == "M") {
        if (unset("--M")) p.m = value.get<std::size_t>();
      } else if (key == "trials") {
        if (unset("--trials")) p.trials = value.get<std::uint64_t>();
      } else if (key == "seed") {
        if (unset("--seed")) p.seed = value.get<std::uint64_t>();
      } else if (key == "out") {
        if (unset("--out")) p.out_dir = value.get<std::string>();
      } else if (key == "plot_script") {
        if (unset("--plot-script")) p.plot_script = value.get<bool>();
      } else if (key == "encoder") {
        if (unset("--encoder")) p.encoder = erravg::parse_encoder(value.get<std::string>());
      } else if (key == "strategy") {
        if (unset("--strategy")) p.strategy = erravg::parse_strategy(value.get<std::string>());
      } else if (key == "workers") {
        if (unset("--workers")) p.workers = value.get<unsigned>();
      } else {
        throw erravg::UsageError("config file: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw erravg::UsageError("config file '" + file + "': " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Error-averaging experiments: regenerate figure and table datasets as CSV."};
  app.set_version_flag("--version", std::string(ERRAVG_VERSION));

  std::string experiment;
  double v = 0.0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = erravg::kDefaultSeed;
  std::string out = ".";
  std::string config;
  std::string encoder = "tree";
  std::string strategy = "whole";
  unsigned workers = 0;
  bool plot = false;

  std::string names;
  for (const auto& e : erravg::experiment_names()) names += (names.empty() ? "" : ", ") + e;
  app.add_option("experiment", experiment, "One of: " + names)->required();
  app.add_option("--v", v, "Phase variance per shifter, rad^2");
  app.add_option("--N", n, "Redundancy (power of two)");
  app.add_option("--M", m, "Phase shifters in series (maximum M for sweeps)");
  app.add_option("--trials", trials, "Monte Carlo trials / runs / seeds");
  app.add_option("--seed", seed, "Master seed");
  app.add_option("--out", out, "Output directory");
  app.add_option("--config", config, "JSON file mirroring these flags; flags take precedence");
  app.add_flag("--plot-script", plot, "Also write a gnuplot script");
  app.add_option("--encoder", encoder, "tree or dft");
  app.add_option("--strategy", strategy, "whole or each");
  app.add_option("--workers", workers, "Worker threads (0 = all cores); never changes results");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  erravg::ExperimentParams p;
  try {
    if (app.get_option("--v")->count()) p.v = v;
    if (app.get_option("--N")->count()) p.n = n;
    if (app.get_option("--M")->count()) p.m = m;
    if (app.get_option("--trials")->count()) p.trials = trials;
    p.seed = seed;
    p.out_dir = out;
    p.plot_script = plot;
    p.encoder = erravg::parse_encoder(encoder);
    p.strategy = erravg::parse_strategy(strategy);
    p.workers = workers;
    if (!config.empty()) apply_config(config, app, p);
  } catch (const std::invalid_argument& e) {
    std::cerr << "ea: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const auto result = erravg::run_experiment(experiment, p);
    for (const auto& line : result.summary) std::cout << line << "\n";
    for (const auto& f : result.files) std::cout << "wrote " << f.string() << "\n";
    return result.ok ? kOk : kValidationFailure;
  } catch (const erravg::UsageError& e) {
    std::cerr << "ea: " << e.what() << "\n";
    return kUsage;
  } catch (const erravg::IoError& e) {
    std::cerr << "ea: " << e.what() << "\n";
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "ea: " << e.what() << "\n";
    return kIo;
  }
}
