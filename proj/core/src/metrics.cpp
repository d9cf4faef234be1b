#include "mogbench/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "mogbench/error.hpp"
#include "mogbench/planners.hpp"
#include "mogbench/rng.hpp"

namespace mogbench {

int TrialSet::n_success() const {
  return static_cast<int>(std::count(outcomes.begin(), outcomes.end(), target));
}

double picking_accuracy(const TrialSet& set) {
  if (set.outcomes.empty()) fail(ErrorCode::empty_input, "picking accuracy needs at least one trial");
  double sum_sq = 0;
  for (int outcome : set.outcomes) {
    const double err = outcome - set.target;
    sum_sq += err * err;
  }
  return std::sqrt(sum_sq / static_cast<double>(set.n_total()));
}

double overall_success_rate(const TrialSet& set) {
  if (set.outcomes.empty()) fail(ErrorCode::empty_input, "success rate needs at least one trial");
  return static_cast<double>(set.n_success()) / static_cast<double>(set.n_total());
}

double cgpu_simplified(int n_opo, int k) {
  if (k < 1) fail(ErrorCode::validation_error, "k must be at least 1");
  if (n_opo < 0) fail(ErrorCode::validation_error, "round count cannot be negative");
  return static_cast<double>(n_opo) / static_cast<double>(k);
}

double cgpu(double t_total_s, int k, double t_sopt_s) {
  if (k < 1) fail(ErrorCode::validation_error, "k must be at least 1");
  if (t_sopt_s <= 0)
    fail(ErrorCode::calibration_error, "t_sopt must be positive; run the SOP calibration first");
  return t_total_s / (static_cast<double>(k) * t_sopt_s);
}

double cgpu_with_overhead(double cgpu_s, double lambda_o) {
  return cgpu_s + lambda_o * cgpu_s;
}

double cgpu_adjusted(double cgpu_s, double t_opo_avg_s, double t_sog_s) {
  if (t_sog_s <= 0)
    fail(ErrorCode::calibration_error, "t_SOG must be positive; run the SOP calibration first");
  const double lambda_ao = (t_opo_avg_s - t_sog_s) / t_sog_s;
  return (1 + lambda_ao) * cgpu_s;
}

double availability_rate(const std::vector<Scene>& scenes, const HandModel& hand, int k) {
  if (scenes.empty()) fail(ErrorCode::empty_input, "availability rate needs at least one scene");
  if (k < 1) fail(ErrorCode::validation_error, "k must be at least 1");

  int feasible_scenes = 0;
  for (const Scene& scene : scenes) {
    if (static_cast<int>(scene.objects.size()) < k) continue;
    const std::vector<Cluster> clusters =
        constrained_kmeans(scene, k, derive_seed(scene.seed, 0xa7));
    for (const Cluster& cluster : clusters) {
      if (static_cast<int>(cluster.member_ids.size()) != k) continue;
      if (feasibility_check(cluster, hand, scene)) {
        ++feasible_scenes;
        break;
      }
    }
  }
  return static_cast<double>(feasible_scenes) / static_cast<double>(scenes.size());
}

namespace {

double mean_seconds(const std::vector<SimTime>& times) {
  std::int64_t sum = 0;
  for (SimTime t : times) sum += t.micros();
  return static_cast<double>(sum) / static_cast<double>(times.size()) / 1e6;
}

}  // namespace

MetricInputs to_metric_inputs(const TrialLog& log) {
  MetricInputs inputs;

  std::optional<int> target;
  bool uniform_target = true;
  const auto add_trial = [&](const TrialRecord& trial) {
    inputs.any_trials = true;
    inputs.outcomes.push_back(trial.q);
    inputs.opo_times.push_back(trial.phase.opo_total());
    if (!target) {
      target = trial.target_p;
    } else if (*target != trial.target_p) {
      uniform_target = false;
    }
  };

  for (const TrialRecord& trial : log.opo_trials) add_trial(trial);

  if (!log.runs.empty()) {
    inputs.total_time = SimTime{};
    int delivered = 0;
    int excess = 0;
    for (const ProtocolRunResult& run : log.runs) {
      inputs.total_rounds += run.m_opo();
      inputs.total_k += run.protocol == ProtocolKind::apt ? run.n_target : run.initial_count;
      *inputs.total_time += run.t_total;
      delivered += run.delivered;
      excess += run.excess_returns;
      for (const RoundEntry& round : run.rounds) {
        add_trial(round.trial);
        inputs.round_times.push_back(round.trial.phase.opo_total() + round.t_transfer);
      }
    }
    inputs.delivered = delivered;
    inputs.excess_returns = excess;
  }

  if (target && uniform_target) inputs.common_target = *target;

  if (log.calibration) {
    inputs.t_sopt = log.calibration->t_sopt.seconds();
    inputs.t_sog = log.calibration->t_sog.seconds();
  }
  return inputs;
}

MetricInputs to_metric_inputs(const ExternalLog& log) {
  MetricInputs inputs;

  std::optional<int> target;
  bool uniform_target = true;
  for (const ExternalTrial& trial : log.trials) {
    inputs.any_trials = true;
    inputs.outcomes.push_back(trial.outcome);
    if (trial.t_opo) inputs.opo_times.push_back(*trial.t_opo);
    if (trial.t_opo && trial.t_transfer)
      inputs.round_times.push_back(*trial.t_opo + *trial.t_transfer);
    if (!target) {
      target = trial.target;
    } else if (*target != trial.target) {
      uniform_target = false;
    }
  }
  if (target && uniform_target) inputs.common_target = *target;

  if (!log.runs.empty()) {
    SimTime total;
    bool all_timed = true;
    for (const ExternalRunSummary& run : log.runs) {
      inputs.total_rounds += run.rounds;
      inputs.total_k += run.k;
      if (run.t_total) {
        total += *run.t_total;
      } else {
        all_timed = false;
      }
    }
    if (all_timed) inputs.total_time = total;
  }

  inputs.t_sopt = log.t_sopt;
  inputs.t_sog = log.t_sog;
  return inputs;
}

MetricsReport summarize(const MetricInputs& inputs) {
  if (!inputs.any_trials && inputs.total_k == 0)
    fail(ErrorCode::empty_input, "log holds no trials and no runs");

  MetricsReport report;

  if (inputs.any_trials && inputs.common_target) {
    TrialSet set{inputs.outcomes, *inputs.common_target};
    report.pa = picking_accuracy(set);
    report.osr = overall_success_rate(set);
    report.n_total = set.n_total();
    report.n_success = set.n_success();
    if (*inputs.common_target > 0) report.rmse_over_target = *report.pa / *inputs.common_target;
  }

  if (!inputs.opo_times.empty()) {
    report.t_opo_avg = mean_seconds(inputs.opo_times);
    report.settle_wait = kSettleWaitSeconds;
  }
  if (!inputs.round_times.empty()) report.t_round_avg = mean_seconds(inputs.round_times);

  report.t_sopt = inputs.t_sopt;
  report.t_sog = inputs.t_sog;
  report.delivered = inputs.delivered;
  report.excess_returns = inputs.excess_returns;

  if (inputs.total_k >= 1) {
    report.k = inputs.total_k;
    report.n_opo = inputs.total_rounds;
    report.cgpu_s = cgpu_simplified(inputs.total_rounds, inputs.total_k);
    if (inputs.total_time) report.t_total = inputs.total_time->seconds();

    if (inputs.t_sopt && *inputs.t_sopt > 0) {
      if (report.t_total) report.cgpu_value = cgpu(*report.t_total, inputs.total_k, *inputs.t_sopt);
      if (report.t_round_avg) {
        report.lambda_o = (*report.t_round_avg - *inputs.t_sopt) / *inputs.t_sopt;
        report.cgpu_o = cgpu_with_overhead(*report.cgpu_s, *report.lambda_o);
      }
    }
    if (inputs.t_sog && *inputs.t_sog > 0 && report.t_opo_avg) {
      report.lambda_ao = (*report.t_opo_avg - *inputs.t_sog) / *inputs.t_sog;
      report.cgpu_a = cgpu_adjusted(*report.cgpu_s, *report.t_opo_avg, *inputs.t_sog);
    }
  }
  return report;
}

MetricsReport summarize(const TrialLog& log, std::optional<SopCalibration> calibration_override) {
  MetricInputs inputs = to_metric_inputs(log);
  if (calibration_override) {
    inputs.t_sopt = calibration_override->t_sopt.seconds();
    inputs.t_sog = calibration_override->t_sog.seconds();
  }
  return summarize(inputs);
}

MetricsReport summarize(const ExternalLog& log) { return summarize(to_metric_inputs(log)); }

}  // namespace mogbench
