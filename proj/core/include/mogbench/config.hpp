#pragma once

#include <string>
#include <string_view>

#include "mogbench/protocols.hpp"

namespace mogbench {

enum class ProtocolChoice { opo, apt, pta, sop_calibrate, ar };

const char* to_string(ProtocolChoice protocol);
ProtocolChoice protocol_from_string(const std::string& text);

/// One benchmark run, fully specified. The seed is mandatory: there are no
/// wall-clock defaults anywhere, so a config names one reproducible run.
struct RunConfig {
  ProtocolChoice protocol = ProtocolChoice::opo;
  std::string object_label = "cube_m_s";
  Scenario scenario = Scenario::surface;
  int p = 2;          // OPO per-round target
  int n_target = 10;  // APT delivery target
  int scene_count = 20;
  BinRect bin{400, 400};
  HandModel hand = builtin_hand(HandKind::soft_hand);
  TimeModel time;
  CountPolicy policy;
  double grid_spacing = 10;
  int pile_yaw_samples = 8;
  int trials = 100;  // OPO trials, APT/PTA repetitions, or calibration trials
  int max_rounds = 50;
  int ar_scenes = 100;  // `ar` protocol: scenes sampled and cluster size
  int ar_k = 3;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string output;
};

/// Parses and validates a JSON config document. Unknown keys, a missing
/// seed, unresolvable object labels, and non-positive times are all named
/// validation failures.
RunConfig parse_config(const std::string& text);

/// Fixed-order rendering of every semantic field; input to the digest.
std::string canonical_config(const RunConfig& config);

/// Content hash stamped on every log line so logs from different configs
/// cannot be mixed silently.
std::string config_digest(const RunConfig& config);

BenchmarkEnv make_env(const RunConfig& config);

std::uint64_t fnv1a64(std::string_view data);

}  // namespace mogbench
