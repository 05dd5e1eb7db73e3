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

#include "kvqa/config.hpp"
#include "kvqa/state.hpp"

namespace kvqa {

struct ResultTable {
  std::vector<std::string> metadata;  // emitted as '#'-prefixed header lines
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const ResultTable& table);

// Writes CSV to cfg-selected path, or stdout when the path is empty.
void write_result(const ResultTable& table, const std::string& out_path);

// Product state |psi0>^(x)n with |psi0> = exp(-i pi Y / 8)|0>.
DensityMatrix default_input_state(int n);

// Z (x) Z on the first two qubits, identity padded.
Observable default_observable(int n);

// Dispatches to the experiment named in cfg. Deterministic for a fixed
// (config, master seed) regardless of thread count.
ResultTable run_experiment(const ExperimentConfig& cfg);

}  // namespace kvqa
