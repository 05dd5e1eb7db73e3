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

#include "kvqa/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kvqa/haar.hpp"
#include "kvqa/protocol.hpp"
#include "kvqa/trainability.hpp"
#include "kvqa/vqe.hpp"

namespace kvqa {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt(int v) { return std::to_string(v); }
std::string fmt(std::uint64_t v) { return std::to_string(v); }

std::uint64_t point_seed(const ExperimentConfig& cfg, std::uint64_t point) {
  return mix_seed(mix_seed(cfg.master_seed, hash_tag(cfg.experiment)), point);
}

// Runs worker(point) for every point, in parallel across cfg.threads, and
// concatenates the returned rows in point order. Each point derives its own
// random stream, so the table is independent of the thread count.
ResultTable run_points(
    const ExperimentConfig& cfg, std::vector<std::string> columns,
    int num_points,
    const std::function<std::vector<std::vector<std::string>>(int)>& worker) {
  std::vector<std::vector<std::vector<std::string>>> per_point(num_points);
  const int threads = std::max(1, std::min(cfg.threads, num_points));
  if (threads == 1) {
    for (int p = 0; p < num_points; ++p) per_point[p] = worker(p);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int p = next.fetch_add(1); p < num_points;
               p = next.fetch_add(1)) {
            per_point[p] = worker(p);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  ResultTable table;
  table.columns = std::move(columns);
  for (auto& rows : per_point) {
    for (auto& row : rows) table.rows.push_back(std::move(row));
  }
  return table;
}

void echo_config(ResultTable& table, const ExperimentConfig& cfg) {
  auto join_int = [](const std::vector<int>& xs) {
    std::string s;
    for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };
  auto join_dbl = [](const std::vector<double>& xs) {
    std::string s;
    for (double x : xs) s += (s.empty() ? "" : ",") + fmt(x);
    return s;
  };
  table.metadata.push_back("experiment = " + cfg.experiment);
  table.metadata.push_back("n = " + join_int(cfg.n_values));
  table.metadata.push_back("depth = " + join_int(cfg.depth_values));
  table.metadata.push_back("kappa = " + join_dbl(cfg.kappa_values));
  table.metadata.push_back("r = " + join_dbl(cfg.r_values));
  table.metadata.push_back("trials = " + std::to_string(cfg.trials));
  table.metadata.push_back("seed = " + std::to_string(cfg.master_seed));
  if (!cfg.hamiltonian_path.empty()) {
    table.metadata.push_back("hamiltonian = " + cfg.hamiltonian_path);
    table.metadata.push_back("learning_rate = " + fmt(cfg.learning_rate));
    table.metadata.push_back("iters = " + std::to_string(cfg.max_iters));
  }
}

ChannelSampler hea_sampler(const PQChAnsatz& ansatz, const ParamInit& init) {
  return [&ansatz, init](const Matrix& rho, Rng& rng) {
    return forward_raw(ansatz, sample_params(ansatz, init, rng), rho);
  };
}

ResultTable run_expressibility(const ExperimentConfig& cfg) {
  const int n = cfg.n_values.front();
  const int nk = static_cast<int>(cfg.kappa_values.size());
  const int points = static_cast<int>(cfg.depth_values.size()) * nk;
  const DensityMatrix rho0 = default_input_state(n);
  auto worker = [&](int p) {
    const int depth = cfg.depth_values[p / nk];
    const double kappa = cfg.kappa_values[p % nk];
    const std::uint64_t ps = point_seed(cfg, p);
    Rng rng(ps);
    const PQChAnsatz ansatz = build_hea(n, depth, kappa);
    const ExpressibilityEstimate e =
        kraus_norm_ensemble(hea_sampler(ansatz, ParamInit{}), rho0,
                            cfg.trials, rng);
    return std::vector<std::vector<std::string>>{
        {fmt(depth), fmt(kappa), fmt(e.delta_sq), fmt(e.std_err),
         fmt(e.nu_bar), fmt(e.n_noise), fmt(e.trials), fmt(ps)}};
  };
  return run_points(cfg,
                    {"depth", "kappa", "delta_sq", "std_err", "nu_bar",
                     "n_noise", "trials", "seed"},
                    points, worker);
}

ResultTable run_gradvar_depth(const ExperimentConfig& cfg, bool kappa_major) {
  const int n = cfg.n_values.front();
  const DensityMatrix rho0 = default_input_state(n);
  const Observable obs = default_observable(n);
  const int nd = static_cast<int>(cfg.depth_values.size());
  const int nk = static_cast<int>(cfg.kappa_values.size());
  const int points = nd * nk;
  auto worker = [&](int p) {
    const int di = kappa_major ? p % nd : p / nk;
    const int ki = kappa_major ? p / nd : p % nk;
    const int depth = cfg.depth_values[di];
    const double kappa = cfg.kappa_values[ki];
    const std::uint64_t ps = point_seed(cfg, p);
    Rng rng(ps);
    const PQChAnsatz ansatz = build_hea(n, depth, kappa);
    const GradientStats s =
        grad_variance(ansatz, ParamInit{}, rho0, obs, cfg.grad_param,
                      cfg.trials, rng);
    std::vector<std::string> row{fmt(depth), fmt(kappa)};
    if (kappa_major) std::swap(row[0], row[1]);
    row.insert(row.end(),
               {fmt(s.variance), fmt(s.mean), fmt(s.std_err_variance),
                fmt(s.trials), fmt(ps)});
    return std::vector<std::vector<std::string>>{row};
  };
  std::vector<std::string> cols{"depth", "kappa"};
  if (kappa_major) std::swap(cols[0], cols[1]);
  cols.insert(cols.end(),
              {"variance", "mean", "std_err_variance", "trials", "seed"});
  return run_points(cfg, cols, points, worker);
}

ResultTable run_gradvar_qubits(const ExperimentConfig& cfg) {
  const int depth = cfg.depth_values.front();
  const int nn = static_cast<int>(cfg.n_values.size());
  const int nk = static_cast<int>(cfg.kappa_values.size());
  const int nr = static_cast<int>(cfg.r_values.size());
  const int points = nn * nk * nr;
  auto worker = [&](int p) {
    const int n = cfg.n_values[p / (nk * nr)];
    const double kappa = cfg.kappa_values[(p / nr) % nk];
    const double r = cfg.r_values[p % nr];
    const std::uint64_t ps = point_seed(cfg, p);
    Rng rng(mix_seed(ps, hash_tag("offsets")));
    const PQChAnsatz ansatz = build_hea(n, depth, kappa);
    // The base corners of the restricted intervals are drawn once per sweep
    // point and shared by all trials, so small r genuinely narrows the
    // explored parameter region.
    ParamInit init;
    init.mode = ParamInit::Mode::restricted;
    init.r = r;
    init.seed = ps;
    const GradientStats s =
        grad_variance(ansatz, init, default_input_state(n),
                      default_observable(n), cfg.grad_param, cfg.trials, rng);
    return std::vector<std::vector<std::string>>{
        {fmt(n), fmt(kappa), fmt(r), fmt(depth), fmt(s.variance), fmt(s.mean),
         fmt(s.std_err_variance), fmt(s.trials), fmt(ps)}};
  };
  return run_points(cfg,
                    {"n", "kappa", "r", "depth", "variance", "mean",
                     "std_err_variance", "trials", "seed"},
                    points, worker);
}

ResultTable run_vqe_experiment(const ExperimentConfig& cfg) {
  const PauliTermHamiltonian h = load_hamiltonian_file(cfg.hamiltonian_path);
  const int n = h.n();
  if (n < 2) {
    throw std::invalid_argument("vqe-run: Hamiltonian must have n >= 2");
  }
  const DensityMatrix rho0 =
      DensityMatrix::pure(basis_ket(Eigen::Index(1) << n, 0));
  const double ground = exact_ground_energy(h);
  const int nk = static_cast<int>(cfg.kappa_values.size());
  const int points = nk * cfg.trials;  // trials = number of optimizer seeds
  auto worker = [&](int p) {
    const double kappa = cfg.kappa_values[p / cfg.trials];
    const int seed_index = p % cfg.trials;
    const std::uint64_t ps = point_seed(cfg, p);
    const PQChAnsatz ansatz = build_hea(n, cfg.depth_values.front(), kappa);
    OptimizerConfig opt;
    opt.learning_rate = cfg.learning_rate;
    opt.max_iters = cfg.max_iters;
    opt.seed = ps;
    const TrajectoryRecord rec = run_vqe(h, ansatz, opt, rho0);
    std::vector<std::vector<std::string>> rows;
    for (const auto& st : rec.steps) {
      rows.push_back({fmt(kappa), fmt(seed_index), fmt(st.iteration),
                      fmt(st.energy), fmt(st.grad_norm),
                      fmt(rec.final_energy), fmt(ground),
                      fmt(rec.final_energy - ground)});
    }
    return rows;
  };
  return run_points(cfg,
                    {"kappa", "seed", "iteration", "energy", "grad_norm",
                     "final_energy", "ground_energy", "bias"},
                    points, worker);
}

Matrix random_density(Eigen::Index d, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return rho;
}

ResultTable run_protocol_verify(const ExperimentConfig& cfg) {
  const int family_points = 20;
  const int random_points = 50;
  const int inputs_per_point = 20;
  auto worker = [&](int p) {
    Rng rng(point_seed(cfg, p));
    PerturbationParams params;
    double kappa = -1.0;
    if (p < family_points) {
      kappa = static_cast<double>(p) / (family_points - 1);
      params = family_from_concurrence(kappa);
    } else {
      std::normal_distribution<double> gauss(0.0, 1.0);
      Vector v(4);
      for (int i = 0; i < 4; ++i) v(i) = Complex(gauss(rng), gauss(rng));
      v /= v.norm();
      params = {v(0), v(1), v(2), v(3)};
    }
    const KrausChannel ch = noisy_cnot_channel(params);
    double max_dev = 0.0;
    for (int i = 0; i < inputs_per_point; ++i) {
      const DensityMatrix rho(random_density(4, rng));
      const ProtocolTranscript t = run_cat_protocol(rho, params);
      const Matrix direct = apply_channel_raw(ch, rho.matrix());
      max_dev = std::max(max_dev, frobenius_norm(t.output - direct));
    }
    return std::vector<std::vector<std::string>>{
        {fmt(p < family_points ? 0 : 1), fmt(p), fmt(kappa), fmt(max_dev)}};
  };
  ResultTable table = run_points(cfg, {"family", "index", "kappa", "max_dev"},
                                 family_points + random_points, worker);
  double overall = 0.0;
  for (const auto& row : table.rows) {
    overall = std::max(overall, std::stod(row.back()));
  }
  table.metadata.push_back("max_deviation = " + fmt(overall));
  return table;
}

ResultTable run_bound_check(const ExperimentConfig& cfg) {
  const int n = cfg.n_values.front();
  const DensityMatrix rho0 = default_input_state(n);
  const Observable obs = default_observable(n);
  const int nk = static_cast<int>(cfg.kappa_values.size());
  const int points = static_cast<int>(cfg.depth_values.size()) * nk * 2;
  auto worker = [&](int p) {
    const int depth = cfg.depth_values[p / (nk * 2)];
    const double kappa = cfg.kappa_values[(p / 2) % nk];
    const bool last = p % 2;
    const std::uint64_t ps = point_seed(cfg, p);
    Rng rng(ps);
    const PQChAnsatz ansatz = build_hea(n, depth, kappa);
    const int k = last ? ansatz.param_count() - 1 : 0;
    const BoundReport b =
        theorem2_bound(ansatz, ParamInit{}, rho0, obs, k, cfg.trials, rng);
    return std::vector<std::vector<std::string>>{
        {fmt(depth), fmt(kappa), fmt(k), fmt(b.lhs), fmt(b.rhs),
         fmt(b.lhs_std_err), fmt(b.rhs_std_err), fmt(b.satisfied ? 1 : 0),
         fmt(cfg.trials), fmt(ps)}};
  };
  return run_points(cfg,
                    {"depth", "kappa", "k", "lhs", "rhs", "lhs_std_err",
                     "rhs_std_err", "satisfied", "trials", "seed"},
                    points, worker);
}

}  // namespace

std::string to_csv(const ResultTable& table) {
  std::ostringstream out;
  for (const std::string& line : table.metadata) {
    out << "# " << line << "\n";
  }
  for (size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw std::logic_error("to_csv: ragged row");
    }
    for (size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << row[i];
    }
    out << "\n";
  }
  return out.str();
}

void write_result(const ResultTable& table, const std::string& out_path) {
  const std::string csv = to_csv(table);
  if (out_path.empty()) {
    std::cout << csv;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file " + out_path);
  }
  out << csv;
}

DensityMatrix default_input_state(int n) {
  const double t = std::numbers::pi / 8.0;
  Vector one(2);
  one << std::cos(t), std::sin(t);
  Matrix psi = one;
  for (int i = 1; i < n; ++i) {
    psi = tensor(psi, one);
  }
  return DensityMatrix::pure(psi.col(0));
}

Observable default_observable(int n) {
  if (n < 2) {
    throw std::invalid_argument("default_observable: need n >= 2");
  }
  const Matrix zz = tensor(pauli_z(), pauli_z());
  return Observable(embed_two_qubit(zz, n, 0, 1));
}

ResultTable run_experiment(const ExperimentConfig& cfg) {
  ResultTable table;
  if (cfg.experiment == "expressibility-sweep") {
    table = run_expressibility(cfg);
  } else if (cfg.experiment == "gradvar-depth") {
    table = run_gradvar_depth(cfg, /*kappa_major=*/false);
  } else if (cfg.experiment == "gradvar-concurrence") {
    table = run_gradvar_depth(cfg, /*kappa_major=*/true);
  } else if (cfg.experiment == "gradvar-qubits-restricted") {
    table = run_gradvar_qubits(cfg);
  } else if (cfg.experiment == "vqe-run") {
    table = run_vqe_experiment(cfg);
  } else if (cfg.experiment == "protocol-verify") {
    table = run_protocol_verify(cfg);
  } else if (cfg.experiment == "bound-check") {
    table = run_bound_check(cfg);
  } else {
    throw std::invalid_argument("unknown experiment '" + cfg.experiment + "'");
  }
  ResultTable with_meta;
  echo_config(with_meta, cfg);
  with_meta.metadata.insert(with_meta.metadata.end(), table.metadata.begin(),
                            table.metadata.end());
  with_meta.columns = std::move(table.columns);
  with_meta.rows = std::move(table.rows);
  return with_meta;
}

}  // namespace kvqa
