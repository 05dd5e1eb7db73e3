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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kvqa {

inline const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "expressibility-sweep", "gradvar-depth",    "gradvar-concurrence",
      "gradvar-qubits-restricted", "vqe-run",     "protocol-verify",
      "bound-check"};
  return names;
}

struct ExperimentConfig {
  std::string experiment;
  std::vector<int> n_values{2};
  std::vector<int> depth_values{10};
  std::vector<double> kappa_values{1.0};
  std::vector<double> r_values{1.0};
  int trials = 100;
  std::uint64_t master_seed = 0;
  std::string out_path;  // empty = stdout
  int threads = 1;
  int grad_param = 0;
  // vqe-run only
  std::string hamiltonian_path;
  double learning_rate = 0.05;
  int max_iters = 200;
};

// Parses a line-based `key = value` document with `[section]` headers.
// Recognized sections: [common] and [<experiment>]. Keys outside the selected
// experiment's section are ignored; unknown keys and out-of-range values are
// reported with field-level messages.
ExperimentConfig parse_config(const std::string& text,
                              const std::string& experiment);

ExperimentConfig parse_config_file(const std::string& path,
                                   const std::string& experiment);

}  // namespace kvqa
