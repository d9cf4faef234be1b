// mogbench CLI: scene generation, protocol runs, SOP calibration,
// availability rate, metric summaries, and external-log ingestion.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mogbench/config.hpp"
#include "mogbench/error.hpp"
#include "mogbench/log_io.hpp"
#include "mogbench/metrics.hpp"
#include "mogbench/protocols.hpp"
#include "mogbench/rng.hpp"

namespace {

using namespace mogbench;

/// Flag values layered over a RunConfig (which may come from --config).
struct RunFlags {
  std::string config_path;
  std::optional<std::string> object;
  std::optional<std::string> scenario;
  std::optional<int> p;
  std::optional<int> n_target;
  std::optional<int> scene_count;
  std::optional<double> bin_width;
  std::optional<double> bin_height;
  std::optional<std::string> hand;
  std::optional<double> slip;
  std::optional<int> capacity_override;
  std::optional<int> max_layers;
  std::optional<std::string> policy;
  std::optional<int> fixed_p;
  std::optional<double> grid_spacing;
  std::optional<int> yaw_samples;
  std::optional<int> trials;
  std::optional<int> max_rounds;
  std::optional<int> ar_scenes;
  std::optional<int> ar_k;
  std::optional<double> t_approach;
  std::optional<double> t_grasp;
  std::optional<double> t_lift;
  std::optional<double> t_transfer;
  std::optional<double> t_sop;
  std::optional<double> jitter;
  std::optional<double> grouping_cost;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
};

void add_run_options(CLI::App* cmd, RunFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON run configuration; flags override it");
  cmd->add_option("--object", flags.object, "catalog object label");
  cmd->add_option("--scenario", flags.scenario, "surface or pile");
  cmd->add_option("--count", flags.scene_count, "objects per scene");
  cmd->add_option("--bin-width", flags.bin_width, "bin width, mm");
  cmd->add_option("--bin-height", flags.bin_height, "bin height, mm");
  cmd->add_option("--hand", flags.hand,
                  "builtin hand: parallel_gripper, trifinger, soft_hand, human_hand");
  cmd->add_option("--slip", flags.slip, "per-object slip probability");
  cmd->add_option("--capacity-override", flags.capacity_override, "pin the hand capacity");
  cmd->add_option("--max-layers", flags.max_layers, "pile digging depth, layers");
  cmd->add_option("--policy", flags.policy, "greedy, conservative, or fixed");
  cmd->add_option("--fixed-p", flags.fixed_p, "target for the fixed policy");
  cmd->add_option("--grid-spacing", flags.grid_spacing, "pile planner grid spacing, mm");
  cmd->add_option("--yaw-samples", flags.yaw_samples, "pile planner yaw samples");
  cmd->add_option("--trials", flags.trials, "trial or repetition count");
  cmd->add_option("--max-rounds", flags.max_rounds, "round cap per APT/PTA run");
  cmd->add_option("--t-approach", flags.t_approach, "mean approach time, s");
  cmd->add_option("--t-grasp", flags.t_grasp, "mean grasp time, s");
  cmd->add_option("--t-lift", flags.t_lift, "mean lift time, s");
  cmd->add_option("--t-transfer", flags.t_transfer, "mean transfer time, s");
  cmd->add_option("--t-sop", flags.t_sop, "mean single-object pick time, s");
  cmd->add_option("--jitter", flags.jitter, "duration jitter fraction in [0,1)");
  cmd->add_option("--grouping-cost", flags.grouping_cost, "seconds per grouping move");
  cmd->add_option("--seed", flags.seed, "master seed (required for stochastic commands)");
  cmd->add_option("--out", flags.out, "output path (stdout when omitted)");
}

RunConfig resolve_config(const RunFlags& flags, ProtocolChoice protocol) {
  RunConfig config;
  if (!flags.config_path.empty()) config = parse_config(read_text_file(flags.config_path));
  config.protocol = protocol;

  if (flags.object) {
    catalog_lookup(*flags.object);
    config.object_label = *flags.object;
  }
  if (flags.scenario) config.scenario = scenario_from_string(*flags.scenario);
  if (flags.p) config.p = *flags.p;
  if (flags.n_target) config.n_target = *flags.n_target;
  if (flags.scene_count) config.scene_count = *flags.scene_count;
  if (flags.bin_width) config.bin.width = *flags.bin_width;
  if (flags.bin_height) config.bin.height = *flags.bin_height;
  if (flags.hand) config.hand = builtin_hand(hand_kind_from_string(*flags.hand));
  if (flags.slip) config.hand.slip_prob = *flags.slip;
  if (flags.capacity_override) config.hand.capacity_override = *flags.capacity_override;
  if (flags.max_layers) config.hand.max_layers = *flags.max_layers;
  if (flags.policy) {
    if (*flags.policy == "greedy") config.policy = CountPolicy::greedy();
    else if (*flags.policy == "conservative") config.policy = CountPolicy::conservative();
    else if (*flags.policy == "fixed") config.policy = CountPolicy::fixed(flags.fixed_p.value_or(1));
    else fail(ErrorCode::validation_error, "unknown count policy '" + *flags.policy + "'");
  }
  if (flags.grid_spacing) config.grid_spacing = *flags.grid_spacing;
  if (flags.yaw_samples) config.pile_yaw_samples = *flags.yaw_samples;
  if (flags.trials) config.trials = *flags.trials;
  if (flags.max_rounds) config.max_rounds = *flags.max_rounds;
  if (flags.ar_scenes) config.ar_scenes = *flags.ar_scenes;
  if (flags.ar_k) config.ar_k = *flags.ar_k;
  if (flags.t_approach) config.time.t_approach_mean = *flags.t_approach;
  if (flags.t_grasp) config.time.t_grasp_mean = *flags.t_grasp;
  if (flags.t_lift) config.time.t_lift_mean = *flags.t_lift;
  if (flags.t_transfer) config.time.t_transfer_mean = *flags.t_transfer;
  if (flags.t_sop) config.time.t_sop_mean = *flags.t_sop;
  if (flags.jitter) config.time.jitter_frac = *flags.jitter;
  if (flags.grouping_cost) config.time.grouping_move_cost = *flags.grouping_cost;
  if (flags.seed) {
    config.seed = *flags.seed;
    config.seed_set = true;
  }
  if (flags.out) config.output = *flags.out;

  if (!config.seed_set) fail(ErrorCode::validation_error, "seed required");
  if (config.time.t_approach_mean <= 0 || config.time.t_grasp_mean <= 0 ||
      config.time.t_lift_mean <= 0 || config.time.t_transfer_mean <= 0 ||
      config.time.t_sop_mean <= 0)
    fail(ErrorCode::validation_error, "time model means must be positive");
  if (config.time.jitter_frac < 0 || config.time.jitter_frac >= 1)
    fail(ErrorCode::validation_error, "jitter_frac must lie in [0, 1)");
  if (config.hand.slip_prob < 0 || config.hand.slip_prob > 1)
    fail(ErrorCode::validation_error, "slip_prob must lie in [0, 1]");
  return config;
}

void write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
  } else {
    write_text_file(path, content);
    std::cerr << "wrote " << path << "\n";
  }
}

LogHeader make_header(const RunConfig& config) {
  return LogHeader{to_string(config.protocol), config.seed, config_digest(config)};
}

int cmd_generate_scene(const RunFlags& flags) {
  RunConfig config = resolve_config(flags, ProtocolChoice::opo);
  const Scene scene = make_scene(make_env(config).scene, config.seed);
  write_output(serialize_scene(scene), config.output);
  return 0;
}

int cmd_run(const RunFlags& flags, ProtocolChoice protocol) {
  RunConfig config = resolve_config(flags, protocol);
  const BenchmarkEnv env = make_env(config);

  TrialLog log;
  log.header = make_header(config);
  switch (protocol) {
    case ProtocolChoice::opo:
      log.opo_trials = run_opo(env, config.p);
      break;
    case ProtocolChoice::apt:
      log.runs = run_apt_series(env, config.n_target, config.trials);
      break;
    case ProtocolChoice::pta:
      log.runs = run_pta_series(env, config.trials);
      break;
    default:
      fail(ErrorCode::validation_error, "run expects opo, apt, or pta");
  }
  write_output(emit_log(log), config.output);
  return 0;
}

int cmd_calibrate_sop(const RunFlags& flags) {
  RunConfig config = resolve_config(flags, ProtocolChoice::sop_calibrate);
  const BenchmarkEnv env = make_env(config);

  TrialLog log;
  log.header = make_header(config);
  log.calibration = run_sop_calibration(env, config.trials);
  write_output(emit_log(log), config.output);
  std::cerr << "t_sog " << format_seconds(log.calibration->t_sog) << " t_sopt "
            << format_seconds(log.calibration->t_sopt) << "\n";
  return 0;
}

int cmd_ar(const RunFlags& flags) {
  RunConfig config = resolve_config(flags, ProtocolChoice::ar);
  const BenchmarkEnv env = make_env(config);

  std::vector<Scene> scenes;
  scenes.reserve(config.ar_scenes);
  for (int i = 0; i < config.ar_scenes; ++i)
    scenes.push_back(make_scene(env.scene, derive_seed(config.seed, i, 0x5c)));

  MetricsReport report;
  report.ar = availability_rate(scenes, env.hand, config.ar_k);
  report.k = config.ar_k;
  write_output(emit_metrics_json(report), config.output);
  return 0;
}

CLI::App* add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "text, csv, or json")->default_val("text");
  return cmd;
}

std::string render_by_format(const MetricsReport& report, const std::string& format) {
  if (format == "text") return render_report(report, ReportFormat::text);
  if (format == "csv") return render_report(report, ReportFormat::csv);
  if (format == "json") return emit_metrics_json(report);
  fail(ErrorCode::validation_error, "unknown report format '" + format + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desk-scale multi-object grasping benchmark harness"};
  app.require_subcommand(1);

  RunFlags flags;

  CLI::App* generate = app.add_subcommand("generate-scene", "Generate one seeded scene");
  add_run_options(generate, flags);

  CLI::App* run = app.add_subcommand("run", "Execute a benchmark protocol");
  run->require_subcommand(1);
  CLI::App* run_opo_cmd = run->add_subcommand("opo", "Only-pick-once trials");
  run_opo_cmd->add_option("--p", flags.p, "per-round target count");
  add_run_options(run_opo_cmd, flags);
  CLI::App* run_apt_cmd = run->add_subcommand("apt", "Accurate pick-transferring runs");
  run_apt_cmd->add_option("--n-target", flags.n_target, "objects to deliver");
  add_run_options(run_apt_cmd, flags);
  CLI::App* run_pta_cmd = run->add_subcommand("pta", "Pick-transferring-all runs");
  add_run_options(run_pta_cmd, flags);

  CLI::App* calibrate = app.add_subcommand("calibrate-sop", "Measure t_SOG and t_sopt");
  add_run_options(calibrate, flags);

  CLI::App* ar_cmd = app.add_subcommand("ar", "Availability rate over random scenes");
  ar_cmd->add_option("--scenes", flags.ar_scenes, "number of scenes to sample");
  ar_cmd->add_option("--k", flags.ar_k, "simultaneous-grasp cluster size");
  add_run_options(ar_cmd, flags);

  std::string log_path;
  std::string calibration_path;
  std::optional<double> t_sopt_flag;
  std::optional<double> t_sog_flag;
  std::string metrics_format;
  std::string metrics_out;
  CLI::App* metrics_cmd = app.add_subcommand("metrics", "Summarize a native run log");
  metrics_cmd->add_option("--log", log_path, "mogbench JSON-lines log")->required();
  metrics_cmd->add_option("--calibration", calibration_path, "calibration log for t_sopt/t_SOG");
  metrics_cmd->add_option("--t-sopt", t_sopt_flag, "override t_sopt, seconds");
  metrics_cmd->add_option("--t-sog", t_sog_flag, "override t_SOG, seconds");
  add_format_option(metrics_cmd, metrics_format);
  metrics_cmd->add_option("--out", metrics_out, "output path (stdout when omitted)");

  std::string ingest_path;
  std::vector<std::string> ingest_maps;
  std::string ingest_format;
  std::string ingest_out;
  CLI::App* ingest_cmd = app.add_subcommand("ingest", "Score an external robot or human log");
  ingest_cmd->add_option("--log", ingest_path, "external JSON-lines log")->required();
  ingest_cmd->add_option("--map", ingest_maps, "field rename ours=theirs, repeatable");
  add_format_option(ingest_cmd, ingest_format);
  ingest_cmd->add_option("--out", ingest_out, "output path (stdout when omitted)");

  std::string report_metrics_path;
  std::string report_format;
  std::string report_out;
  CLI::App* report_cmd = app.add_subcommand("report", "Render a saved metrics JSON");
  report_cmd->add_option("--metrics", report_metrics_path, "metrics JSON file")->required();
  add_format_option(report_cmd, report_format);
  report_cmd->add_option("--out", report_out, "output path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return cmd_generate_scene(flags);
    if (run->parsed()) {
      if (run_opo_cmd->parsed()) return cmd_run(flags, ProtocolChoice::opo);
      if (run_apt_cmd->parsed()) return cmd_run(flags, ProtocolChoice::apt);
      if (run_pta_cmd->parsed()) return cmd_run(flags, ProtocolChoice::pta);
    }
    if (calibrate->parsed()) return cmd_calibrate_sop(flags);
    if (ar_cmd->parsed()) return cmd_ar(flags);

    if (metrics_cmd->parsed()) {
      const TrialLog log = read_log_file(log_path);
      std::optional<SopCalibration> calibration;
      if (!calibration_path.empty()) {
        const TrialLog calibration_log = read_log_file(calibration_path);
        if (!calibration_log.calibration)
          fail(ErrorCode::calibration_error,
               "'" + calibration_path + "' holds no sop_calibration record");
        calibration = calibration_log.calibration;
      }
      if (t_sopt_flag || t_sog_flag) {
        SopCalibration manual;
        manual.trials = 0;
        manual.t_sopt = SimTime::from_seconds(t_sopt_flag.value_or(0));
        manual.t_sog = SimTime::from_seconds(t_sog_flag.value_or(0));
        calibration = manual;
      }
      MetricsReport report = summarize(log, calibration);
      write_output(render_by_format(report, metrics_format), metrics_out);
      return 0;
    }

    if (ingest_cmd->parsed()) {
      FieldMap mapping;
      for (const std::string& entry : ingest_maps) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size())
          fail(ErrorCode::validation_error, "--map expects ours=theirs, got '" + entry + "'");
        mapping[entry.substr(0, eq)] = entry.substr(eq + 1);
      }
      const ExternalLog log = read_external_log_file(ingest_path, mapping);
      MetricsReport report = summarize(log);
      write_output(render_by_format(report, ingest_format), ingest_out);
      return 0;
    }

    if (report_cmd->parsed()) {
      const MetricsReport report = parse_metrics_json(read_text_file(report_metrics_path));
      write_output(render_by_format(report, report_format), report_out);
      return 0;
    }
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "error: internal: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
