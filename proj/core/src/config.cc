// Copyright 2026 The ccmhe Authors
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
#include "ccmhe/config.h"

#include <fstream>
#include <set>
#include <sstream>

#include "ccmhe/errors.h"
#include "json_io.h"

namespace ccmhe {
namespace {

using Json = nlohmann::ordered_json;

template <typename Vec>
Json vector_json(const Vec& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

template <int N>
Eigen::Matrix<double, N, 1> read_vector(const Json& j, const std::string& key) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(N)) {
    throw ValidationError("config: '" + key + "' must be an array of " +
                          std::to_string(N) + " numbers");
  }
  Eigen::Matrix<double, N, 1> v;
  for (int i = 0; i < N; ++i) v(i) = j.at(i).get<double>();
  return v;
}

void reject_unknown(const Json& j, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  if (!j.is_object()) {
    throw ValidationError("config: '" + where + "' must be an object");
  }
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!keys.count(key)) {
      throw ValidationError("config: unknown key '" + where +
                            (where.empty() ? "" : ".") + key + "'");
    }
  }
}

Json sinusoid_json(const experiments::SinusoidProfile& p) {
  return Json{{"center", p.center},
              {"amplitude", p.amplitude},
              {"period", p.period},
              {"phase", p.phase}};
}

void read_sinusoid(const Json& j, const std::string& where, double unit,
                   experiments::SinusoidProfile& p) {
  reject_unknown(j, where, {"center", "amplitude", "period", "phase"});
  if (j.contains("center")) p.center = unit * j["center"].get<double>();
  if (j.contains("amplitude")) p.amplitude = unit * j["amplitude"].get<double>();
  if (j.contains("period")) p.period = j["period"].get<double>();
  if (j.contains("phase")) p.phase = unit * j["phase"].get<double>();
}

Json scenario_json(const ScenarioSpec& s) {
  Json j{{"sigma_beta", s.sigma_beta}, {"sigma_gamma", s.sigma_gamma}};
  if (s.seed) j["seed"] = *s.seed;
  return j;
}

ScenarioSpec read_scenario(const Json& j, const std::string& where,
                           double unit) {
  reject_unknown(j, where, {"sigma_beta", "sigma_gamma", "seed"});
  ScenarioSpec s;
  if (j.contains("sigma_beta")) s.sigma_beta = unit * j["sigma_beta"].get<double>();
  if (j.contains("sigma_gamma")) s.sigma_gamma = unit * j["sigma_gamma"].get<double>();
  if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
  return s;
}

void overlay(const Json& doc, EstimatorConfig& cfg, bool degrees) {
  const double unit = degrees ? kDegToRad : 1.0;
  const double var_unit = unit * unit;
  reject_unknown(doc, "",
                 {"robot_length", "dt", "horizon", "seed", "threads", "mhe",
                  "solver", "ekf", "trajectory", "noise", "montecarlo",
                  "horizon_sweep", "metrics"});
  if (doc.contains("robot_length")) cfg.length = doc["robot_length"].get<double>();
  if (doc.contains("dt")) cfg.dt = doc["dt"].get<double>();
  if (doc.contains("horizon")) cfg.horizon = doc["horizon"].get<int>();
  if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("threads")) cfg.threads = doc["threads"].get<int>();

  if (doc.contains("mhe")) {
    const Json& m = doc["mhe"];
    reject_unknown(m, "mhe",
                   {"measurement_weights", "measurement_weights_in_degrees",
                    "process_weights", "kinematic_weight", "lower_bounds",
                    "upper_bounds", "input_prefilter_window", "warm_start"});
    if (m.contains("measurement_weights")) {
      cfg.weights.measurement =
          read_vector<2>(m["measurement_weights"], "mhe.measurement_weights");
    }
    if (m.contains("measurement_weights_in_degrees")) {
      cfg.weights.measurement_weights_in_degrees =
          m["measurement_weights_in_degrees"].get<bool>();
    }
    if (m.contains("process_weights")) {
      cfg.weights.process = read_vector<5>(m["process_weights"], "mhe.process_weights");
    }
    if (m.contains("kinematic_weight")) {
      cfg.weights.kinematic = m["kinematic_weight"].get<double>();
    }
    if (m.contains("lower_bounds") || m.contains("upper_bounds")) {
      mhe::StateBounds b =
          cfg.bounds ? *cfg.bounds : mhe::StateBounds::workspace(cfg.length);
      Vector5d scale = Vector5d::Ones();
      scale(kTheta) = scale(kPhi) = unit;
      if (m.contains("lower_bounds")) {
        b.lower = read_vector<5>(m["lower_bounds"], "mhe.lower_bounds").cwiseProduct(scale);
      }
      if (m.contains("upper_bounds")) {
        b.upper = read_vector<5>(m["upper_bounds"], "mhe.upper_bounds").cwiseProduct(scale);
      }
      cfg.bounds = b;
    }
    if (m.contains("input_prefilter_window")) {
      cfg.input_prefilter_window = m["input_prefilter_window"].get<std::size_t>();
    }
    if (m.contains("warm_start")) cfg.warm_start = m["warm_start"].get<bool>();
  }

  if (doc.contains("solver")) {
    const Json& s = doc["solver"];
    reject_unknown(s, "solver",
                   {"max_iterations", "grad_tol", "step_tol", "damping_init",
                    "damping_increase", "damping_decrease", "damping_max"});
    if (s.contains("max_iterations")) cfg.solver.max_iterations = s["max_iterations"].get<int>();
    if (s.contains("grad_tol")) cfg.solver.grad_tol = s["grad_tol"].get<double>();
    if (s.contains("step_tol")) cfg.solver.step_tol = s["step_tol"].get<double>();
    if (s.contains("damping_init")) cfg.solver.damping_init = s["damping_init"].get<double>();
    if (s.contains("damping_increase")) cfg.solver.damping_increase = s["damping_increase"].get<double>();
    if (s.contains("damping_decrease")) cfg.solver.damping_decrease = s["damping_decrease"].get<double>();
    if (s.contains("damping_max")) cfg.solver.damping_max = s["damping_max"].get<double>();
  }

  if (doc.contains("ekf")) {
    const Json& e = doc["ekf"];
    reject_unknown(e, "ekf", {"initial_covariance", "process_noise", "measurement_noise"});
    if (e.contains("initial_covariance")) {
      cfg.ekf_initial_covariance = e["initial_covariance"].get<double>();
    }
    if (e.contains("process_noise")) {
      Vector5d q = read_vector<5>(e["process_noise"], "ekf.process_noise");
      q(kTheta) *= var_unit;
      q(kPhi) *= var_unit;
      cfg.ekf_process_noise = q;
    }
    if (e.contains("measurement_noise")) {
      cfg.ekf_measurement_noise =
          var_unit * read_vector<2>(e["measurement_noise"], "ekf.measurement_noise");
    }
  }

  if (doc.contains("trajectory")) {
    const Json& t = doc["trajectory"];
    reject_unknown(t, "trajectory",
                   {"mode", "samples", "gamma", "beta", "violating_start",
                    "crossing_time"});
    if (t.contains("mode")) {
      const std::string mode = t["mode"].get<std::string>();
      if (mode == "feasible") {
        cfg.trajectory.mode = experiments::TrajectoryMode::kFeasible;
      } else if (mode == "violating") {
        cfg.trajectory.mode = experiments::TrajectoryMode::kViolating;
      } else {
        throw ValidationError("config: trajectory.mode must be 'feasible' or 'violating'");
      }
    }
    if (t.contains("samples")) cfg.trajectory.samples = t["samples"].get<int>();
    if (t.contains("gamma")) read_sinusoid(t["gamma"], "trajectory.gamma", unit, cfg.trajectory.gamma);
    if (t.contains("beta")) read_sinusoid(t["beta"], "trajectory.beta", unit, cfg.trajectory.beta);
    if (t.contains("violating_start")) {
      cfg.trajectory.violating_start = unit * t["violating_start"].get<double>();
    }
    if (t.contains("crossing_time")) {
      cfg.trajectory.crossing_time = t["crossing_time"].get<double>();
    }
  }

  if (doc.contains("noise")) cfg.noise = read_scenario(doc["noise"], "noise", unit);

  if (doc.contains("montecarlo")) {
    const Json& mc = doc["montecarlo"];
    reject_unknown(mc, "montecarlo", {"scenarios"});
    if (mc.contains("scenarios")) {
      if (!mc["scenarios"].is_array()) {
        throw ValidationError("config: montecarlo.scenarios must be an array");
      }
      cfg.montecarlo.clear();
      for (const Json& s : mc["scenarios"]) {
        cfg.montecarlo.push_back(read_scenario(s, "montecarlo.scenarios[]", unit));
      }
    }
  }

  if (doc.contains("horizon_sweep")) {
    const Json& hs = doc["horizon_sweep"];
    reject_unknown(hs, "horizon_sweep", {"horizons"});
    if (hs.contains("horizons")) {
      cfg.sweep_horizons = hs["horizons"].get<std::vector<int>>();
    }
  }

  if (doc.contains("metrics")) {
    const Json& m = doc["metrics"];
    reject_unknown(m, "metrics", {"srmse_components"});
    if (m.contains("srmse_components")) {
      const std::string c = m["srmse_components"].get<std::string>();
      if (c == "full") {
        cfg.srmse_components = experiments::SrmseComponents::kFullState;
      } else if (c == "position") {
        cfg.srmse_components = experiments::SrmseComponents::kPositionOnly;
      } else {
        throw ValidationError("config: metrics.srmse_components must be 'full' or 'position'");
      }
    }
  }
}

}  // namespace

std::vector<ScenarioSpec> default_scenarios() {
  constexpr double kSigmaBeta[] = {0.022, 0.028, -0.026, 0.029, 0.010,
                                   -0.028, -0.015, 0.003, 0.032, 0.033};
  constexpr double kSigmaGamma[] = {-0.024, 0.033, 0.032, -0.001, 0.021,
                                    -0.025, -0.005, 0.029, 0.020, 0.032};
  std::vector<ScenarioSpec> out;
  for (int i = 0; i < 10; ++i) out.push_back({kSigmaBeta[i], kSigmaGamma[i], {}});
  return out;
}

mhe::MheConfig EstimatorConfig::mhe_config() const { return mhe_config(horizon); }

mhe::MheConfig EstimatorConfig::mhe_config(int n) const {
  mhe::MheConfig m;
  m.length = length;
  m.dt = dt;
  m.horizon = n;
  m.weights = weights;
  m.bounds = bounds;
  m.solver = solver;
  m.input_prefilter_window = input_prefilter_window;
  m.warm_start = warm_start;
  return m;
}

ekf::EkfConfig EstimatorConfig::ekf_config() const {
  ekf::EkfConfig e;
  e.length = length;
  e.dt = dt;
  e.initial_covariance = ekf_initial_covariance;
  e.noise.process = ekf_process_noise.asDiagonal();
  e.noise.measurement = ekf_measurement_noise.asDiagonal();
  e.input_prefilter_window = input_prefilter_window;
  return e;
}

void EstimatorConfig::validate() const {
  try {
    mhe_config().validate();
    ekf_config().validate();
  } catch (const InvalidArgument& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  if (trajectory.samples < 1) {
    throw ValidationError("config: trajectory.samples must be at least 1");
  }
  if (threads < 0) throw ValidationError("config: threads must be >= 0");
  for (int n : sweep_horizons) {
    if (n < 1) throw ValidationError("config: sweep horizons must be >= 1");
  }
  if (!(ekf_process_noise.array() > 0.0).all() ||
      !(ekf_measurement_noise.array() > 0.0).all()) {
    throw ValidationError("config: EKF noise diagonals must be positive");
  }
}

namespace internal {

nlohmann::ordered_json config_json(const EstimatorConfig& cfg) {
  const mhe::StateBounds b = cfg.mhe_config().resolved_bounds();
  Json montecarlo = Json::array();
  for (const ScenarioSpec& s : cfg.montecarlo) montecarlo.push_back(scenario_json(s));
  Json j;
  j["robot_length"] = cfg.length;
  j["dt"] = cfg.dt;
  j["horizon"] = cfg.horizon;
  j["seed"] = cfg.seed;
  j["threads"] = cfg.threads;
  j["mhe"] = Json{
      {"measurement_weights", vector_json(cfg.weights.measurement)},
      {"measurement_weights_in_degrees", cfg.weights.measurement_weights_in_degrees},
      {"process_weights", vector_json(cfg.weights.process)},
      {"kinematic_weight", cfg.weights.kinematic},
      {"lower_bounds", vector_json(b.lower)},
      {"upper_bounds", vector_json(b.upper)},
      {"input_prefilter_window", cfg.input_prefilter_window},
      {"warm_start", cfg.warm_start}};
  j["solver"] = Json{{"max_iterations", cfg.solver.max_iterations},
                     {"grad_tol", cfg.solver.grad_tol},
                     {"step_tol", cfg.solver.step_tol},
                     {"damping_init", cfg.solver.damping_init},
                     {"damping_increase", cfg.solver.damping_increase},
                     {"damping_decrease", cfg.solver.damping_decrease},
                     {"damping_max", cfg.solver.damping_max}};
  j["ekf"] = Json{{"initial_covariance", cfg.ekf_initial_covariance},
                  {"process_noise", vector_json(cfg.ekf_process_noise)},
                  {"measurement_noise", vector_json(cfg.ekf_measurement_noise)}};
  j["trajectory"] = Json{
      {"mode", cfg.trajectory.mode == experiments::TrajectoryMode::kFeasible
                   ? "feasible"
                   : "violating"},
      {"samples", cfg.trajectory.samples},
      {"gamma", sinusoid_json(cfg.trajectory.gamma)},
      {"beta", sinusoid_json(cfg.trajectory.beta)},
      {"violating_start", cfg.trajectory.violating_start},
      {"crossing_time", cfg.trajectory.crossing_time}};
  j["noise"] = scenario_json(cfg.noise);
  j["montecarlo"] = Json{{"scenarios", montecarlo}};
  j["horizon_sweep"] = Json{{"horizons", cfg.sweep_horizons}};
  j["metrics"] = Json{
      {"srmse_components",
       cfg.srmse_components == experiments::SrmseComponents::kFullState
           ? "full"
           : "position"}};
  return j;
}

}  // namespace internal

std::string config_to_json(const EstimatorConfig& config) {
  return internal::config_json(config).dump(2) + "\n";
}

EstimatorConfig config_from_json(std::string_view text,
                                 const EstimatorConfig& base, bool degrees) {
  EstimatorConfig cfg = base;
  try {
    const Json doc = Json::parse(text.begin(), text.end());
    overlay(doc, cfg, degrees);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

EstimatorConfig load_config(const std::filesystem::path& path, bool degrees) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return config_from_json(buffer.str(), EstimatorConfig{}, degrees);
}

}  // namespace ccmhe
