#pragma once

#include <optional>
#include <vector>

#include "mogbench/hand.hpp"
#include "mogbench/scene.hpp"
#include "mogbench/trial_log.hpp"

namespace mogbench {

/// Outcomes of repeated grasp trials against one fixed target count.
struct TrialSet {
  std::vector<int> outcomes;
  int target = 1;

  int n_total() const { return static_cast<int>(outcomes.size()); }
  int n_success() const;
};

/// Root-mean-square error of grasped counts against the target. Zero iff
/// every trial hit the target exactly.
double picking_accuracy(const TrialSet& set);

/// Fraction of trials whose count equals the target exactly.
double overall_success_rate(const TrialSet& set);

/// Rounds per delivered object: n_opo / k.
double cgpu_simplified(int n_opo, int k);

/// Time-normalized cost: t_total / (k * t_sopt), the multi-object process
/// against a perfect single-object baseline.
double cgpu(double t_total_s, int k, double t_sopt_s);

/// cgpu_s inflated by the per-round overhead ratio lambda_o.
double cgpu_with_overhead(double cgpu_s, double lambda_o);

/// Setup-independent cost: (1 + (t_OPO_avg - t_SOG)/t_SOG) * cgpu_s. The
/// overhead ratio uses pick times only, removing the transfer leg.
double cgpu_adjusted(double cgpu_s, double t_opo_avg_s, double t_sog_s);

/// Fraction of scenes holding at least one feasible k-cluster (no grouping
/// moves allowed). The per-scene clustering seed derives from the scene's
/// own generation seed.
double availability_rate(const std::vector<Scene>& scenes, const HandModel& hand, int k);

/// Everything summarize can compute from. Both native logs and external
/// ingested logs reduce to this, so equal counts and times give equal
/// reports regardless of provenance.
struct MetricInputs {
  std::vector<int> outcomes;
  std::optional<int> common_target;
  int total_rounds = 0;
  int total_k = 0;
  std::optional<SimTime> total_time;
  std::vector<SimTime> opo_times;    // per round, t_OPO
  std::vector<SimTime> round_times;  // per round, t_OPO + t_transfer
  std::optional<double> t_sopt;
  std::optional<double> t_sog;
  std::optional<int> delivered;
  std::optional<int> excess_returns;
  bool any_trials = false;
};

MetricInputs to_metric_inputs(const TrialLog& log);
MetricInputs to_metric_inputs(const ExternalLog& log);

/// Metric suite of one log. Fields a protocol does not determine stay
/// absent; nothing is zero-filled.
struct MetricsReport {
  std::optional<double> pa;
  std::optional<double> rmse_over_target;  // pa / target, for users wanting a normalized figure
  std::optional<double> osr;
  std::optional<double> ar;
  std::optional<int> n_total;
  std::optional<int> n_success;
  std::optional<int> k;
  std::optional<int> n_opo;
  std::optional<double> cgpu_s;
  std::optional<double> cgpu_value;  // time-normalized (t_total based)
  std::optional<double> cgpu_o;      // cgpu_s scaled by (1 + lambda_o)
  std::optional<double> cgpu_a;
  std::optional<double> lambda_o;
  std::optional<double> lambda_ao;
  std::optional<double> t_sopt;
  std::optional<double> t_sog;
  std::optional<double> t_opo_avg;
  std::optional<double> t_round_avg;
  std::optional<double> t_total;
  std::optional<int> delivered;
  std::optional<int> excess_returns;
  std::optional<double> settle_wait;  // constant pause per round, excluded from t_OPO
};

MetricsReport summarize(const MetricInputs& inputs);
MetricsReport summarize(const TrialLog& log,
                        std::optional<SopCalibration> calibration_override = std::nullopt);
MetricsReport summarize(const ExternalLog& log);

}  // namespace mogbench
