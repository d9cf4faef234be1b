#include "mogbench/config.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mogbench/error.hpp"

namespace mogbench {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& message) {
  fail(ErrorCode::validation_error, message);
}

void check_known_keys(const json& doc, const std::set<std::string>& known,
                      const std::string& where) {
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!known.contains(key)) invalid("unknown key '" + key + "' in " + where);
  }
}

double positive_seconds(const json& doc, const char* key, double fallback) {
  if (!doc.contains(key)) return fallback;
  const double value = doc.at(key).get<double>();
  if (value <= 0) invalid(std::string(key) + " must be positive");
  return value;
}

HandModel parse_hand(const json& value) {
  if (value.is_string()) return builtin_hand(hand_kind_from_string(value.get<std::string>()));
  if (!value.is_object()) invalid("hand must be a builtin name or an object");

  check_known_keys(value, {"kind", "footprint", "max_layers", "slip_prob", "capacity_override"},
                   "hand");
  HandModel hand;
  if (value.contains("kind")) hand.kind = hand_kind_from_string(value.at("kind").get<std::string>());

  if (!value.contains("footprint")) invalid("inline hand needs a footprint");
  const json& fp = value.at("footprint");
  check_known_keys(fp, {"type", "width", "depth", "radius"}, "hand.footprint");
  const std::string type = fp.at("type").get<std::string>();
  if (type == "rectangle") {
    hand.footprint = Footprint::rectangle(fp.at("width").get<double>(), fp.at("depth").get<double>());
    if (hand.footprint.width <= 0 || hand.footprint.depth <= 0)
      invalid("hand footprint dimensions must be positive");
  } else if (type == "disc") {
    hand.footprint = Footprint::disc(fp.at("radius").get<double>());
    if (hand.footprint.radius <= 0) invalid("hand footprint radius must be positive");
  } else {
    invalid("unknown footprint type '" + type + "'");
  }

  if (value.contains("max_layers")) {
    hand.max_layers = value.at("max_layers").get<int>();
    if (hand.max_layers < 1) invalid("max_layers must be at least 1");
  }
  if (value.contains("slip_prob")) {
    hand.slip_prob = value.at("slip_prob").get<double>();
    if (hand.slip_prob < 0 || hand.slip_prob > 1) invalid("slip_prob must lie in [0, 1]");
  }
  if (value.contains("capacity_override")) {
    hand.capacity_override = value.at("capacity_override").get<int>();
    if (*hand.capacity_override < 0) invalid("capacity_override cannot be negative");
  }
  return hand;
}

TimeModel parse_time_model(const json& value) {
  check_known_keys(value,
                   {"t_approach_mean", "t_grasp_mean", "t_lift_mean", "t_transfer_mean",
                    "t_sop_mean", "jitter_frac", "grouping_move_cost"},
                   "time_model");
  TimeModel model;
  model.t_approach_mean = positive_seconds(value, "t_approach_mean", model.t_approach_mean);
  model.t_grasp_mean = positive_seconds(value, "t_grasp_mean", model.t_grasp_mean);
  model.t_lift_mean = positive_seconds(value, "t_lift_mean", model.t_lift_mean);
  model.t_transfer_mean = positive_seconds(value, "t_transfer_mean", model.t_transfer_mean);
  model.t_sop_mean = positive_seconds(value, "t_sop_mean", model.t_sop_mean);
  if (value.contains("jitter_frac")) {
    model.jitter_frac = value.at("jitter_frac").get<double>();
    if (model.jitter_frac < 0 || model.jitter_frac >= 1) invalid("jitter_frac must lie in [0, 1)");
  }
  if (value.contains("grouping_move_cost")) {
    model.grouping_move_cost = value.at("grouping_move_cost").get<double>();
    if (model.grouping_move_cost < 0) invalid("grouping_move_cost cannot be negative");
  }
  return model;
}

CountPolicy parse_policy(const json& value, int fixed_p) {
  const std::string name = value.get<std::string>();
  if (name == "greedy") return CountPolicy::greedy();
  if (name == "conservative") return CountPolicy::conservative();
  if (name == "fixed") {
    if (fixed_p < 1) invalid("fixed policy needs fixed_p >= 1");
    return CountPolicy::fixed(fixed_p);
  }
  invalid("unknown count policy '" + name + "'");
}

}  // namespace

const char* to_string(ProtocolChoice protocol) {
  switch (protocol) {
    case ProtocolChoice::opo: return "opo";
    case ProtocolChoice::apt: return "apt";
    case ProtocolChoice::pta: return "pta";
    case ProtocolChoice::sop_calibrate: return "sop-calibrate";
    case ProtocolChoice::ar: return "ar";
  }
  return "?";
}

ProtocolChoice protocol_from_string(const std::string& text) {
  if (text == "opo") return ProtocolChoice::opo;
  if (text == "apt") return ProtocolChoice::apt;
  if (text == "pta") return ProtocolChoice::pta;
  if (text == "sop-calibrate") return ProtocolChoice::sop_calibrate;
  if (text == "ar") return ProtocolChoice::ar;
  fail(ErrorCode::validation_error, "unknown protocol '" + text + "'");
}

RunConfig parse_config(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    invalid("config must be a JSON object");

  check_known_keys(doc,
                   {"protocol", "object", "scenario", "p", "n_target", "scene_count", "bin",
                    "hand", "time_model", "planner", "trials", "max_rounds", "ar_scenes", "ar_k",
                    "seed", "output"},
                   "config");

  RunConfig config;
  if (doc.contains("protocol"))
    config.protocol = protocol_from_string(doc.at("protocol").get<std::string>());
  if (doc.contains("object")) config.object_label = doc.at("object").get<std::string>();
  catalog_lookup(config.object_label);  // resolvable or throws
  if (doc.contains("scenario"))
    config.scenario = scenario_from_string(doc.at("scenario").get<std::string>());

  if (!doc.contains("seed")) invalid("seed required");
  config.seed = doc.at("seed").get<std::uint64_t>();
  config.seed_set = true;

  if (doc.contains("p")) config.p = doc.at("p").get<int>();
  if (config.p < 1) invalid("p must be at least 1");
  if (doc.contains("n_target")) config.n_target = doc.at("n_target").get<int>();
  if (config.n_target < 1) invalid("n_target must be at least 1");
  if (doc.contains("scene_count")) config.scene_count = doc.at("scene_count").get<int>();
  if (config.scene_count < 0) invalid("scene_count cannot be negative");

  if (doc.contains("bin")) {
    const json& bin = doc.at("bin");
    check_known_keys(bin, {"width", "height"}, "bin");
    config.bin.width = bin.at("width").get<double>();
    config.bin.height = bin.at("height").get<double>();
    if (config.bin.width <= 0 || config.bin.height <= 0) invalid("bin dimensions must be positive");
  }

  if (doc.contains("hand")) config.hand = parse_hand(doc.at("hand"));
  if (doc.contains("time_model")) config.time = parse_time_model(doc.at("time_model"));

  if (doc.contains("planner")) {
    const json& planner = doc.at("planner");
    check_known_keys(planner, {"policy", "fixed_p", "grid_spacing", "yaw_samples"}, "planner");
    int fixed_p = 1;
    if (planner.contains("fixed_p")) fixed_p = planner.at("fixed_p").get<int>();
    if (planner.contains("policy")) config.policy = parse_policy(planner.at("policy"), fixed_p);
    if (planner.contains("grid_spacing")) {
      config.grid_spacing = planner.at("grid_spacing").get<double>();
      if (config.grid_spacing <= 0) invalid("grid_spacing must be positive");
    }
    if (planner.contains("yaw_samples")) {
      config.pile_yaw_samples = planner.at("yaw_samples").get<int>();
      if (config.pile_yaw_samples < 1) invalid("yaw_samples must be at least 1");
    }
  }

  if (doc.contains("trials")) config.trials = doc.at("trials").get<int>();
  if (config.trials < 1) invalid("trials must be at least 1");
  if (doc.contains("max_rounds")) config.max_rounds = doc.at("max_rounds").get<int>();
  if (config.max_rounds < 1) invalid("max_rounds must be at least 1");
  if (doc.contains("ar_scenes")) config.ar_scenes = doc.at("ar_scenes").get<int>();
  if (config.ar_scenes < 1) invalid("ar_scenes must be at least 1");
  if (doc.contains("ar_k")) config.ar_k = doc.at("ar_k").get<int>();
  if (config.ar_k < 1) invalid("ar_k must be at least 1");
  if (doc.contains("output")) config.output = doc.at("output").get<std::string>();

  return config;
}

namespace {

std::string f6(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace

std::string canonical_config(const RunConfig& c) {
  std::ostringstream out;
  out << "protocol=" << to_string(c.protocol) << ";object=" << c.object_label
      << ";scenario=" << to_string(c.scenario) << ";p=" << c.p << ";n_target=" << c.n_target
      << ";scene_count=" << c.scene_count << ";bin=" << f6(c.bin.width) << "x" << f6(c.bin.height)
      << ";hand=" << to_string(c.hand.kind);
  if (c.hand.footprint.kind == Footprint::Kind::rectangle)
    out << ",rect," << f6(c.hand.footprint.width) << "," << f6(c.hand.footprint.depth);
  else
    out << ",disc," << f6(c.hand.footprint.radius);
  out << ",layers=" << c.hand.max_layers << ",slip=" << f6(c.hand.slip_prob) << ",cap=";
  if (c.hand.capacity_override)
    out << *c.hand.capacity_override;
  else
    out << "auto";
  out << ";time=" << f6(c.time.t_approach_mean) << "," << f6(c.time.t_grasp_mean) << ","
      << f6(c.time.t_lift_mean) << "," << f6(c.time.t_transfer_mean) << ","
      << f6(c.time.t_sop_mean) << ",j=" << f6(c.time.jitter_frac)
      << ",g=" << f6(c.time.grouping_move_cost);
  out << ";policy=";
  switch (c.policy.kind) {
    case CountPolicy::Kind::greedy: out << "greedy"; break;
    case CountPolicy::Kind::conservative: out << "conservative"; break;
    case CountPolicy::Kind::fixed: out << "fixed(" << c.policy.fixed_p << ")"; break;
  }
  out << ";grid=" << f6(c.grid_spacing) << ";yaws=" << c.pile_yaw_samples
      << ";trials=" << c.trials << ";max_rounds=" << c.max_rounds << ";ar=" << c.ar_scenes << ","
      << c.ar_k << ";seed=" << c.seed;
  return out.str();
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (char c : data) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string config_digest(const RunConfig& config) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical_config(config))));
  return buf;
}

BenchmarkEnv make_env(const RunConfig& config) {
  if (!config.seed_set) fail(ErrorCode::validation_error, "seed required");
  BenchmarkEnv env;
  env.scene.spec = catalog_lookup(config.object_label);
  env.scene.count = config.scene_count;
  env.scene.scenario = config.scenario;
  env.scene.bin = config.bin;
  env.hand = config.hand;
  env.time = config.time;
  env.planner.policy = config.policy;
  env.planner.grid_spacing = config.grid_spacing;
  env.planner.pile_yaw_samples = config.pile_yaw_samples;
  env.trial_count = config.trials;
  env.max_rounds = config.max_rounds;
  env.master_seed = config.seed;
  return env;
}

}  // namespace mogbench
