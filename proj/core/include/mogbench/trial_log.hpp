#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mogbench/protocols.hpp"

namespace mogbench {

inline constexpr const char* kLogSchema = "mogbench/1";

struct LogHeader {
  std::string protocol;  // "opo", "apt", "pta", "sop-calibrate", "external"
  std::uint64_t master_seed = 0;
  std::string config_digest;
};

/// Everything one log file can carry: a header, standalone OPO trials,
/// whole APT/PTA runs, and an optional SOP calibration.
struct TrialLog {
  LogHeader header;
  std::vector<TrialRecord> opo_trials;
  std::vector<ProtocolRunResult> runs;
  std::optional<SopCalibration> calibration;
};

/// External (robot or human) trial row. Only target and outcome are
/// mandatory; time fields unlock the time-based metrics.
struct ExternalTrial {
  int target = 0;
  int outcome = 0;
  std::optional<SimTime> t_opo;
  std::optional<SimTime> t_transfer;
};

/// External per-run aggregate: how many rounds it took to move k objects.
struct ExternalRunSummary {
  int k = 0;
  int rounds = 0;
  std::optional<SimTime> t_total;
};

struct ExternalLog {
  std::vector<ExternalTrial> trials;
  std::vector<ExternalRunSummary> runs;
  std::optional<double> t_sopt;  // seconds, when the source reports them
  std::optional<double> t_sog;
};

}  // namespace mogbench
