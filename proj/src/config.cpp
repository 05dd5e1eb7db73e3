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

#include "kvqa/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kvqa {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "n",       "depth",        "kappa",       "r",
      "trials",  "seed",         "out",         "threads",
      "grad_param", "hamiltonian", "learning_rate", "iters"};
  return keys;
}

std::string nearest_key(const std::string& key) {
  std::string best;
  size_t best_dist = std::string::npos;
  for (const std::string& k : known_keys()) {
    const size_t d = edit_distance(key, k);
    if (d < best_dist) {
      best_dist = d;
      best = k;
    }
  }
  return best;
}

template <typename T>
T parse_scalar(const std::string& key, const std::string& value);

template <>
double parse_scalar<double>(const std::string& key, const std::string& value) {
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != value.size()) {
    throw std::invalid_argument("config key '" + key + "': '" + value +
                                "' is not a number");
  }
  return v;
}

template <>
long long parse_scalar<long long>(const std::string& key,
                                  const std::string& value) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != value.size()) {
    throw std::invalid_argument("config key '" + key + "': '" + value +
                                "' is not an integer");
  }
  return v;
}

void apply_key(ExperimentConfig& cfg, const std::string& key,
               const std::string& value) {
  if (key == "n") {
    cfg.n_values.clear();
    for (const std::string& item : split_list(value)) {
      const long long n = parse_scalar<long long>(key, item);
      if (n < 1 || n > 10) {
        throw std::invalid_argument("config key 'n': value " + item +
                                    " out of range [1, 10]");
      }
      cfg.n_values.push_back(static_cast<int>(n));
    }
  } else if (key == "depth") {
    cfg.depth_values.clear();
    for (const std::string& item : split_list(value)) {
      const long long l = parse_scalar<long long>(key, item);
      if (l < 1 || l > 1000) {
        throw std::invalid_argument("config key 'depth': value " + item +
                                    " out of range [1, 1000]");
      }
      cfg.depth_values.push_back(static_cast<int>(l));
    }
  } else if (key == "kappa") {
    cfg.kappa_values.clear();
    for (const std::string& item : split_list(value)) {
      const double k = parse_scalar<double>(key, item);
      if (k < 0.0 || k > 1.0) {
        throw std::invalid_argument("config key 'kappa': value " + item +
                                    " out of range [0, 1]");
      }
      cfg.kappa_values.push_back(k);
    }
  } else if (key == "r") {
    cfg.r_values.clear();
    for (const std::string& item : split_list(value)) {
      const double r = parse_scalar<double>(key, item);
      if (r <= 0.0 || r > 1.0) {
        throw std::invalid_argument("config key 'r': value " + item +
                                    " out of range (0, 1]");
      }
      cfg.r_values.push_back(r);
    }
  } else if (key == "trials") {
    const long long t = parse_scalar<long long>(key, value);
    if (t < 2 || t > 10000000) {
      throw std::invalid_argument("config key 'trials': out of range");
    }
    cfg.trials = static_cast<int>(t);
  } else if (key == "seed") {
    cfg.master_seed =
        static_cast<std::uint64_t>(parse_scalar<long long>(key, value));
  } else if (key == "out") {
    cfg.out_path = value;
  } else if (key == "threads") {
    const long long t = parse_scalar<long long>(key, value);
    if (t < 1 || t > 256) {
      throw std::invalid_argument("config key 'threads': out of range");
    }
    cfg.threads = static_cast<int>(t);
  } else if (key == "grad_param") {
    const long long k = parse_scalar<long long>(key, value);
    if (k < 0) {
      throw std::invalid_argument("config key 'grad_param': must be >= 0");
    }
    cfg.grad_param = static_cast<int>(k);
  } else if (key == "hamiltonian") {
    cfg.hamiltonian_path = value;
  } else if (key == "learning_rate") {
    const double lr = parse_scalar<double>(key, value);
    if (lr <= 0.0) {
      throw std::invalid_argument("config key 'learning_rate': must be > 0");
    }
    cfg.learning_rate = lr;
  } else if (key == "iters") {
    const long long it = parse_scalar<long long>(key, value);
    if (it < 1 || it > 1000000) {
      throw std::invalid_argument("config key 'iters': out of range");
    }
    cfg.max_iters = static_cast<int>(it);
  } else {
    throw std::invalid_argument("unknown config key '" + key +
                                "' (did you mean '" + nearest_key(key) +
                                "'?)");
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& text,
                              const std::string& experiment) {
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), experiment) == names.end()) {
    throw std::invalid_argument("unknown experiment '" + experiment + "'");
  }
  ExperimentConfig cfg;
  cfg.experiment = experiment;

  std::istringstream in(text);
  std::string line;
  std::string section = "common";
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw std::invalid_argument("config line " + std::to_string(line_no) +
                                    ": unterminated section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "common" &&
          std::find(names.begin(), names.end(), section) == names.end()) {
        throw std::invalid_argument("config line " + std::to_string(line_no) +
                                    ": unknown section '" + section + "'");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section != "common" && section != experiment) continue;
    try {
      apply_key(cfg, key, value);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": " + e.what());
    }
  }
  if (experiment == "vqe-run" && cfg.hamiltonian_path.empty()) {
    throw std::invalid_argument(
        "config: vqe-run requires the 'hamiltonian' key");
  }
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path,
                                   const std::string& experiment) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), experiment);
}

}  // namespace kvqa
