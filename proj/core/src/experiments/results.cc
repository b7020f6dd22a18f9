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
#include "ccmhe/experiments/results.h"

#include <numeric>

#include "ccmhe/errors.h"
#include "ccmhe/experiments/measurement_log.h"
#include "ccmhe/experiments/metrics.h"
#include "../json_io.h"

namespace ccmhe::experiments {
namespace {

using Json = nlohmann::ordered_json;

Json state_json(const RobotState& x) {
  return Json::array({x.position.x(), x.position.y(), x.position.z(),
                      x.shape.theta, x.shape.phi});
}

std::string state_fields(const RobotState& x) {
  const Vector5d v = x.to_vector();
  std::string out;
  for (int i = 0; i < kStateDim; ++i) out += ',' + format_double(v(i));
  return out;
}

double sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

}  // namespace

std::string montecarlo_csv(std::span<const MonteCarloRow> rows) {
  std::string out =
      "scenario,sigma_beta,sigma_gamma,seed,status,srmse_mhe,srmse_ekf,"
      "solve_count,mean_solve_seconds,error\n";
  for (const MonteCarloRow& r : rows) {
    out += std::to_string(r.scenario) + ',' + format_double(r.sigma_beta) + ',' +
           format_double(r.sigma_gamma) + ',' + std::to_string(r.seed) + ',' +
           (r.ok ? "ok" : "failed") + ',' +
           (r.ok ? format_double(r.srmse_mhe) : "") + ',' +
           (r.ok ? format_double(r.srmse_ekf) : "") + ',' +
           std::to_string(r.solve_count) + ',' +
           format_double(r.mean_solve_seconds) + ",\"" + r.error + "\"\n";
  }
  return out;
}

std::string montecarlo_json(std::span<const MonteCarloRow> rows,
                            const EstimatorConfig& config) {
  Json scenarios = Json::array();
  for (const MonteCarloRow& r : rows) {
    Json s{{"scenario", r.scenario},
           {"sigma_beta", r.sigma_beta},
           {"sigma_gamma", r.sigma_gamma},
           {"seed", r.seed},
           {"status", r.ok ? "ok" : "failed"}};
    if (r.ok) {
      s["srmse_mhe"] = r.srmse_mhe;
      s["srmse_ekf"] = r.srmse_ekf;
      s["solve_count"] = r.solve_count;
    } else {
      s["error"] = r.error;
    }
    s["timing"] = Json{{"mean_solve_seconds", r.mean_solve_seconds}};
    scenarios.push_back(std::move(s));
  }
  Json doc{{"kind", "montecarlo"},
           {"noise_interpretation", kNoiseInterpretation},
           {"config", internal::config_json(config)},
           {"scenarios", scenarios}};
  return doc.dump(2) + "\n";
}

std::string horizon_sweep_csv(std::span<const HorizonRow> rows) {
  std::string out =
      "horizon,status,srmse,solve_count,mean_solve_seconds,total_seconds,error\n";
  for (const HorizonRow& r : rows) {
    out += std::to_string(r.horizon) + ',' + (r.ok ? "ok" : "failed") + ',' +
           (r.ok ? format_double(r.srmse) : "") + ',' +
           std::to_string(r.solve_count) + ',' +
           format_double(r.mean_solve_seconds) + ',' +
           format_double(r.total_seconds) + ",\"" + r.error + "\"\n";
  }
  return out;
}

std::string horizon_sweep_json(std::span<const HorizonRow> rows,
                               const EstimatorConfig& config) {
  Json out = Json::array();
  for (const HorizonRow& r : rows) {
    Json h{{"horizon", r.horizon}, {"status", r.ok ? "ok" : "failed"}};
    if (r.ok) {
      h["srmse"] = r.srmse;
      h["solve_count"] = r.solve_count;
    } else {
      h["error"] = r.error;
    }
    h["timing"] = Json{{"mean_solve_seconds", r.mean_solve_seconds},
                       {"total_seconds", r.total_seconds}};
    out.push_back(std::move(h));
  }
  Json doc{{"kind", "horizon-sweep"},
           {"noise_interpretation", kNoiseInterpretation},
           {"config", internal::config_json(config)},
           {"horizons", out}};
  return doc.dump(2) + "\n";
}

void EstimateRun::score(SrmseComponents components) {
  if (!truth) return;
  if (truth->size() != times.size()) {
    throw ValidationError("reference trajectory length does not match the log");
  }
  const std::span<const RobotState> ref(*truth);
  if (mhe) {
    eval_begin = mhe->first_sample;
    eval_end = mhe->first_sample + mhe->solve_count();
  } else {
    eval_begin = 0;
    eval_end = static_cast<int>(times.size());
  }
  const auto count = static_cast<std::size_t>(eval_end - eval_begin);
  if (count == 0) return;
  if (mhe) srmse_mhe = srmse(ref.subspan(eval_begin, count), mhe->estimates, components);
  if (ekf) {
    srmse_ekf = srmse(ref.subspan(eval_begin, count),
                      std::span<const RobotState>(ekf->states).subspan(eval_begin, count),
                      components);
  }
}

std::string estimate_csv(const EstimateRun& run) {
  std::string out = "t,gamma,beta";
  if (run.mhe) out += ",mhe_valid,mhe_x,mhe_y,mhe_z,mhe_theta,mhe_phi";
  if (run.ekf) out += ",ekf_x,ekf_y,ekf_z,ekf_theta,ekf_phi";
  out += '\n';
  for (std::size_t k = 0; k < run.times.size(); ++k) {
    out += format_double(run.times[k]) + ',' +
           format_double(run.measurements[k].gamma) + ',' +
           format_double(run.measurements[k].beta);
    if (run.mhe) {
      const int i = static_cast<int>(k) - run.mhe->first_sample;
      if (i >= 0 && i < run.mhe->solve_count()) {
        out += ",1" + state_fields(run.mhe->estimates[i]);
      } else {
        out += ",0,,,,,";
      }
    }
    if (run.ekf) out += state_fields(run.ekf->states[k]);
    out += '\n';
  }
  return out;
}

std::string estimate_json(const EstimateRun& run, const EstimatorConfig& config,
                          const std::string& source) {
  Json doc{{"kind", "estimate"},
           {"source", source},
           {"seed", config.seed},
           {"config", internal::config_json(config)}};
  Json metrics = Json::object();
  metrics["samples"] = run.times.size();
  Json timing = Json::object();
  if (run.mhe) {
    Json series = Json::array();
    for (const RobotState& x : run.mhe->estimates) series.push_back(state_json(x));
    doc["mhe"] = Json{{"first_sample", run.mhe->first_sample},
                      {"solve_count", run.mhe->solve_count()},
                      {"iterations", run.mhe->iterations},
                      {"costs", run.mhe->costs},
                      {"states", series}};
    metrics["mhe_solve_count"] = run.mhe->solve_count();
    if (run.srmse_mhe) metrics["srmse_mhe"] = *run.srmse_mhe;
    timing["mhe_total_solve_seconds"] = sum(run.mhe->solve_seconds);
    timing["mhe_solve_seconds"] = run.mhe->solve_seconds;
  }
  if (run.ekf) {
    Json series = Json::array();
    for (const RobotState& x : run.ekf->states) series.push_back(state_json(x));
    doc["ekf"] = Json{{"states", series},
                      {"covariance_trace", run.ekf->covariance_trace}};
    if (run.srmse_ekf) metrics["srmse_ekf"] = *run.srmse_ekf;
  }
  if (run.srmse_mhe || run.srmse_ekf) {
    metrics["eval_begin"] = run.eval_begin;
    metrics["eval_end"] = run.eval_end;
  }
  doc["metrics"] = metrics;
  doc["timing"] = timing;
  return doc.dump(2) + "\n";
}

std::string generate_json(const EstimatorConfig& config, std::uint64_t seed,
                          int samples, std::span<const std::string> files) {
  Json doc{{"kind", "generate"},
           {"seed", seed},
           {"samples", samples},
           {"noise_interpretation", kNoiseInterpretation},
           {"files", Json(std::vector<std::string>(files.begin(), files.end()))},
           {"config", internal::config_json(config)}};
  return doc.dump(2) + "\n";
}

}  // namespace ccmhe::experiments
