// Copyright 2026 The kraus-vqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kvqa/experiments.hpp"

namespace {

struct CliOverrides {
  std::string config_path;
  std::string out_path;
  long long seed = -1;
  int threads = 0;
  // vqe-run shortcuts
  std::string hamiltonian;
  double kappa = -1.0;
  int layers = 0;
  double lr = 0.0;
  int iters = 0;
};

kvqa::ExperimentConfig assemble(const std::string& experiment,
                                const CliOverrides& cli) {
  kvqa::ExperimentConfig cfg;
  if (!cli.config_path.empty()) {
    cfg = kvqa::parse_config_file(cli.config_path, experiment);
  } else {
    cfg.experiment = experiment;
  }
  if (!cli.out_path.empty()) cfg.out_path = cli.out_path;
  if (cli.seed >= 0) cfg.master_seed = static_cast<std::uint64_t>(cli.seed);
  if (cli.threads > 0) cfg.threads = cli.threads;
  if (!cli.hamiltonian.empty()) cfg.hamiltonian_path = cli.hamiltonian;
  if (cli.kappa >= 0.0) cfg.kappa_values = {cli.kappa};
  if (cli.layers > 0) cfg.depth_values = {cli.layers};
  if (cli.lr > 0.0) cfg.learning_rate = cli.lr;
  if (cli.iters > 0) cfg.max_iters = cli.iters;
  if (experiment == "vqe-run" && cfg.hamiltonian_path.empty()) {
    throw std::invalid_argument(
        "vqe-run needs --hamiltonian or a config file providing it");
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noisy-channel ansatz experiments"};
  app.require_subcommand(1);

  CliOverrides cli;
  for (const std::string& name : kvqa::experiment_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", cli.config_path, "config file (key = value)");
    sub->add_option("--out", cli.out_path, "output CSV path (default stdout)");
    sub->add_option("--seed", cli.seed, "master seed");
    sub->add_option("--threads", cli.threads, "worker thread count");
    if (name == "vqe-run") {
      sub->add_option("--hamiltonian", cli.hamiltonian,
                      "Pauli-term Hamiltonian file");
      sub->add_option("--kappa", cli.kappa,
                      "resource-state concurrence in [0, 1]");
      sub->add_option("--layers", cli.layers, "ansatz depth");
      sub->add_option("--lr", cli.lr, "gradient-descent learning rate");
      sub->add_option("--iters", cli.iters, "maximum iterations");
    }
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string experiment = app.get_subcommands().front()->get_name();
    const kvqa::ExperimentConfig cfg = assemble(experiment, cli);
    const kvqa::ResultTable table = kvqa::run_experiment(cfg);
    kvqa::write_result(table, cfg.out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
