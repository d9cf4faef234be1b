#include "mogbench/log_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "mogbench/error.hpp"

namespace mogbench {

namespace {

using nlohmann::json;

std::string escape_json(const std::string& raw) {
  std::string out;
  out.reserve(raw.size() + 2);
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

/// Emits one JSON object with fields in call order. nlohmann reorders keys,
/// so the byte-stable writer is built by hand; nlohmann only parses.
class JsonLineWriter {
 public:
  JsonLineWriter& field(const char* key, const std::string& value) {
    add(key, "\"" + escape_json(value) + "\"");
    return *this;
  }
  JsonLineWriter& field(const char* key, const char* value) {
    return field(key, std::string(value));
  }
  JsonLineWriter& field(const char* key, std::uint64_t value) {
    add(key, std::to_string(value));
    return *this;
  }
  JsonLineWriter& field(const char* key, std::int64_t value) {
    add(key, std::to_string(value));
    return *this;
  }
  JsonLineWriter& field(const char* key, int value) {
    add(key, std::to_string(value));
    return *this;
  }
  JsonLineWriter& field(const char* key, bool value) {
    add(key, value ? "true" : "false");
    return *this;
  }
  JsonLineWriter& time_field(const char* key, SimTime value) {
    add(key, format_seconds(value));
    return *this;
  }

  std::string finish() { return line_ + "}"; }

 private:
  void add(const char* key, const std::string& rendered) {
    line_ += first_ ? "\"" : ",\"";
    first_ = false;
    line_ += key;
    line_ += "\":";
    line_ += rendered;
  }

  std::string line_ = "{";
  bool first_ = true;
};

void append_phase_fields(JsonLineWriter& w, const PhaseTimes& phase) {
  w.time_field("t0", phase.t0)
      .time_field("t1", phase.t1)
      .time_field("t2", phase.t2)
      .time_field("t3", phase.t3)
      .time_field("t_a", phase.approach())
      .time_field("t_g", phase.grasp())
      .time_field("t_l", phase.lift())
      .time_field("t_opo", phase.opo_total());
}

void append_trial_fields(JsonLineWriter& w, const TrialRecord& trial, const LogHeader& header) {
  w.field("target_p", trial.target_p).field("q", trial.q);
  append_phase_fields(w, trial.phase);
  w.time_field("settle_wait", SimTime::from_seconds(trial.settle_wait))
      .field("grouping_moves", trial.grouping_moves_used)
      .field("planner_failed", trial.planner_failed)
      .field("scene_seed", trial.scene_seed)
      .field("trial_seed", trial.trial_seed)
      .field("master_seed", header.master_seed)
      .field("config_digest", header.config_digest);
}

}  // namespace

std::string emit_log(const TrialLog& log) {
  std::string out;

  {
    JsonLineWriter w;
    w.field("schema", kLogSchema)
        .field("kind", "header")
        .field("protocol", log.header.protocol)
        .field("master_seed", log.header.master_seed)
        .field("config_digest", log.header.config_digest);
    out += w.finish() + "\n";
  }

  for (std::size_t i = 0; i < log.opo_trials.size(); ++i) {
    const TrialRecord& trial = log.opo_trials[i];
    JsonLineWriter w;
    w.field("kind", "trial")
        .field("protocol", to_string(trial.protocol))
        .field("index", static_cast<std::int64_t>(i));
    append_trial_fields(w, trial, log.header);
    out += w.finish() + "\n";
  }

  for (std::size_t r = 0; r < log.runs.size(); ++r) {
    const ProtocolRunResult& run = log.runs[r];
    for (std::size_t i = 0; i < run.rounds.size(); ++i) {
      const RoundEntry& round = run.rounds[i];
      JsonLineWriter w;
      w.field("kind", "round")
          .field("protocol", to_string(round.trial.protocol))
          .field("run", static_cast<std::int64_t>(r))
          .field("round", static_cast<std::int64_t>(i));
      append_trial_fields(w, round.trial, log.header);
      w.time_field("t_transfer", round.t_transfer);
      out += w.finish() + "\n";
    }
    JsonLineWriter w;
    w.field("kind", "run_result")
        .field("protocol", to_string(run.protocol))
        .field("run", static_cast<std::int64_t>(r));
    if (run.protocol == ProtocolKind::apt) w.field("n_target", run.n_target);
    w.field("initial_count", run.initial_count)
        .field("m_opo", run.m_opo())
        .field("excess_returns", run.excess_returns)
        .time_field("excess_time", run.excess_time)
        .time_field("t_total", run.t_total)
        .field("delivered", run.delivered)
        .field("completed", run.completed)
        .field("stalled", run.stalled)
        .field("master_seed", log.header.master_seed)
        .field("config_digest", log.header.config_digest);
    out += w.finish() + "\n";
  }

  if (log.calibration) {
    JsonLineWriter w;
    w.field("kind", "sop_calibration")
        .field("trials", log.calibration->trials)
        .time_field("t_sog", log.calibration->t_sog)
        .time_field("t_sopt", log.calibration->t_sopt)
        .field("master_seed", log.header.master_seed)
        .field("config_digest", log.header.config_digest);
    out += w.finish() + "\n";
  }

  return out;
}

namespace {

[[noreturn]] void ingest_fail(std::size_t line_number, const std::string& message) {
  fail(ErrorCode::ingest_error, "line " + std::to_string(line_number) + ": " + message);
}

json parse_line(const std::string& line, std::size_t line_number) {
  json doc = json::parse(line, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) ingest_fail(line_number, "not a JSON object");
  return doc;
}

template <typename T>
T require(const json& doc, const char* key, std::size_t line_number) {
  if (!doc.contains(key)) ingest_fail(line_number, std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    ingest_fail(line_number, std::string("field '") + key + "' has the wrong type");
  }
}

SimTime require_time(const json& doc, const char* key, std::size_t line_number) {
  if (!doc.contains(key)) ingest_fail(line_number, std::string("missing field '") + key + "'");
  const json& value = doc.at(key);
  if (!value.is_number()) ingest_fail(line_number, std::string("field '") + key + "' is not a number");
  return SimTime::from_seconds(value.get<double>());
}

TrialRecord parse_trial_fields(const json& doc, std::size_t line_number) {
  TrialRecord trial;
  trial.protocol = round_kind_from_string(require<std::string>(doc, "protocol", line_number));
  trial.target_p = require<int>(doc, "target_p", line_number);
  trial.q = require<int>(doc, "q", line_number);
  trial.phase.t0 = require_time(doc, "t0", line_number);
  trial.phase.t1 = require_time(doc, "t1", line_number);
  trial.phase.t2 = require_time(doc, "t2", line_number);
  trial.phase.t3 = require_time(doc, "t3", line_number);
  trial.settle_wait = require_time(doc, "settle_wait", line_number).seconds();
  trial.grouping_moves_used = require<int>(doc, "grouping_moves", line_number);
  trial.planner_failed = require<bool>(doc, "planner_failed", line_number);
  trial.scene_seed = require<std::uint64_t>(doc, "scene_seed", line_number);
  trial.trial_seed = require<std::uint64_t>(doc, "trial_seed", line_number);
  if (trial.q < 0) ingest_fail(line_number, "negative grasp count");
  return trial;
}

}  // namespace

TrialLog parse_log(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_number = 0;

  TrialLog log;
  bool saw_header = false;
  std::map<int, ProtocolRunResult> runs;

  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const json doc = parse_line(line, line_number);
    const std::string kind = require<std::string>(doc, "kind", line_number);

    if (!saw_header) {
      if (kind != "header") ingest_fail(line_number, "log must start with a header line");
      const std::string schema = require<std::string>(doc, "schema", line_number);
      if (schema != kLogSchema)
        ingest_fail(line_number, "unsupported schema '" + schema + "'");
      log.header.protocol = require<std::string>(doc, "protocol", line_number);
      log.header.master_seed = require<std::uint64_t>(doc, "master_seed", line_number);
      log.header.config_digest = require<std::string>(doc, "config_digest", line_number);
      saw_header = true;
      continue;
    }

    if (require<std::string>(doc, "config_digest", line_number) != log.header.config_digest)
      ingest_fail(line_number, "config digest differs from the header; mixed runs?");

    if (kind == "trial") {
      log.opo_trials.push_back(parse_trial_fields(doc, line_number));
    } else if (kind == "round") {
      const int run_index = require<int>(doc, "run", line_number);
      RoundEntry entry;
      entry.trial = parse_trial_fields(doc, line_number);
      entry.t_transfer = require_time(doc, "t_transfer", line_number);
      runs[run_index].rounds.push_back(entry);
    } else if (kind == "run_result") {
      const int run_index = require<int>(doc, "run", line_number);
      ProtocolRunResult& run = runs[run_index];
      const std::string protocol = require<std::string>(doc, "protocol", line_number);
      if (protocol == "APT") {
        run.protocol = ProtocolKind::apt;
        run.n_target = require<int>(doc, "n_target", line_number);
      } else if (protocol == "PTA") {
        run.protocol = ProtocolKind::pta;
      } else {
        ingest_fail(line_number, "unknown protocol '" + protocol + "'");
      }
      run.initial_count = require<int>(doc, "initial_count", line_number);
      run.excess_returns = require<int>(doc, "excess_returns", line_number);
      run.excess_time = require_time(doc, "excess_time", line_number);
      run.t_total = require_time(doc, "t_total", line_number);
      run.delivered = require<int>(doc, "delivered", line_number);
      run.completed = require<bool>(doc, "completed", line_number);
      run.stalled = require<bool>(doc, "stalled", line_number);
      if (require<int>(doc, "m_opo", line_number) != run.m_opo())
        ingest_fail(line_number, "m_opo does not match the number of round lines");
    } else if (kind == "sop_calibration") {
      SopCalibration calibration;
      calibration.trials = require<int>(doc, "trials", line_number);
      calibration.t_sog = require_time(doc, "t_sog", line_number);
      calibration.t_sopt = require_time(doc, "t_sopt", line_number);
      log.calibration = calibration;
    } else {
      ingest_fail(line_number, "unknown record kind '" + kind + "'");
    }
  }

  if (!saw_header) fail(ErrorCode::ingest_error, "empty log: missing header line");
  for (auto& [index, run] : runs) {
    (void)index;
    log.runs.push_back(std::move(run));
  }
  return log;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io_error, "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::io_error, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) fail(ErrorCode::io_error, "write to '" + path + "' failed");
}

void write_log_file(const TrialLog& log, const std::string& path) {
  write_text_file(path, emit_log(log));
}

TrialLog read_log_file(const std::string& path) { return parse_log(read_text_file(path)); }

namespace {

const json* mapped_find(const json& doc, const std::string& ours, const FieldMap& mapping) {
  const auto renamed = mapping.find(ours);
  const std::string& key = renamed == mapping.end() ? ours : renamed->second;
  const auto it = doc.find(key);
  return it == doc.end() ? nullptr : &*it;
}

std::optional<SimTime> optional_time(const json& doc, const std::string& ours,
                                     const FieldMap& mapping, std::size_t row) {
  const json* value = mapped_find(doc, ours, mapping);
  if (value == nullptr || value->is_null()) return std::nullopt;
  if (!value->is_number()) ingest_fail(row, "field '" + ours + "' is not a number");
  return SimTime::from_seconds(value->get<double>());
}

int required_count(const json& doc, const std::string& ours, const FieldMap& mapping,
                   std::size_t row) {
  const json* value = mapped_find(doc, ours, mapping);
  if (value == nullptr) ingest_fail(row, "missing field '" + ours + "'");
  if (!value->is_number_integer()) ingest_fail(row, "field '" + ours + "' is not an integer");
  return value->get<int>();
}

}  // namespace

ExternalLog parse_external_log(const std::string& text, const FieldMap& mapping) {
  std::istringstream in(text);
  std::string line;
  std::size_t row = 0;
  ExternalLog log;

  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const json doc = parse_line(line, row);

    std::string kind = "trial";
    if (const json* k = mapped_find(doc, "kind", mapping); k != nullptr && k->is_string())
      kind = k->get<std::string>();

    if (kind == "trial") {
      ExternalTrial trial;
      trial.target = required_count(doc, "target", mapping, row);
      trial.outcome = required_count(doc, "outcome", mapping, row);
      if (trial.target < 1) ingest_fail(row, "target must be at least 1");
      if (trial.outcome < 0) ingest_fail(row, "negative outcome count");
      trial.t_opo = optional_time(doc, "t_opo", mapping, row);
      trial.t_transfer = optional_time(doc, "t_transfer", mapping, row);
      log.trials.push_back(trial);
    } else if (kind == "run") {
      ExternalRunSummary run;
      run.k = required_count(doc, "k", mapping, row);
      run.rounds = required_count(doc, "rounds", mapping, row);
      if (run.k < 1) ingest_fail(row, "k must be at least 1");
      if (run.rounds < 0) ingest_fail(row, "negative round count");
      run.t_total = optional_time(doc, "t_total", mapping, row);
      log.runs.push_back(run);
    } else if (kind == "calibration") {
      if (const auto t = optional_time(doc, "t_sopt", mapping, row)) log.t_sopt = t->seconds();
      if (const auto t = optional_time(doc, "t_sog", mapping, row)) log.t_sog = t->seconds();
    } else {
      ingest_fail(row, "unknown record kind '" + kind + "'");
    }
  }

  if (log.trials.empty() && log.runs.empty())
    fail(ErrorCode::empty_input, "external log holds no trial or run rows");
  return log;
}

ExternalLog read_external_log_file(const std::string& path, const FieldMap& mapping) {
  return parse_external_log(read_text_file(path), mapping);
}

namespace {

std::string format_metric(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", value);
  return buf;
}

std::string format_exact(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

struct ReportField {
  const char* name;
  enum class Type { real, integer } type;
  std::optional<double> real;
  std::optional<int> integer;
};

std::vector<ReportField> report_fields(const MetricsReport& r) {
  using T = ReportField::Type;
  return {
      {"pa", T::real, r.pa, {}},
      {"rmse_over_target", T::real, r.rmse_over_target, {}},
      {"osr", T::real, r.osr, {}},
      {"ar", T::real, r.ar, {}},
      {"n_total", T::integer, {}, r.n_total},
      {"n_success", T::integer, {}, r.n_success},
      {"k", T::integer, {}, r.k},
      {"n_opo", T::integer, {}, r.n_opo},
      {"cgpu_s", T::real, r.cgpu_s, {}},
      {"cgpu", T::real, r.cgpu_value, {}},
      {"cgpu_o", T::real, r.cgpu_o, {}},
      {"cgpu_a", T::real, r.cgpu_a, {}},
      {"lambda_o", T::real, r.lambda_o, {}},
      {"lambda_ao", T::real, r.lambda_ao, {}},
      {"t_sopt", T::real, r.t_sopt, {}},
      {"t_sog", T::real, r.t_sog, {}},
      {"t_opo_avg", T::real, r.t_opo_avg, {}},
      {"t_round_avg", T::real, r.t_round_avg, {}},
      {"t_total", T::real, r.t_total, {}},
      {"delivered", T::integer, {}, r.delivered},
      {"excess_returns", T::integer, {}, r.excess_returns},
      {"settle_wait", T::real, r.settle_wait, {}},
  };
}

bool field_present(const ReportField& field) {
  return field.type == ReportField::Type::real ? field.real.has_value()
                                               : field.integer.has_value();
}

std::string field_value(const ReportField& field, bool exact) {
  if (field.type == ReportField::Type::integer) return std::to_string(*field.integer);
  return exact ? format_exact(*field.real) : format_metric(*field.real);
}

}  // namespace

std::string render_report(const MetricsReport& report, ReportFormat format) {
  const std::vector<ReportField> fields = report_fields(report);

  if (format == ReportFormat::csv) {
    std::string header;
    std::string values;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) {
        header += ",";
        values += ",";
      }
      header += fields[i].name;
      if (field_present(fields[i])) values += field_value(fields[i], false);
    }
    return header + "\n" + values + "\n";
  }

  std::string out;
  for (const ReportField& field : fields) {
    std::string line = field.name;
    line.append(line.size() < 18 ? 18 - line.size() : 1, ' ');
    line += field_present(field) ? field_value(field, false) : "-";
    out += line + "\n";
  }
  if (report.settle_wait)
    out += "note              settle_wait is logged per round and excluded from t_opo\n";
  return out;
}

std::string emit_metrics_json(const MetricsReport& report) {
  std::string out = "{";
  bool first = true;
  for (const ReportField& field : report_fields(report)) {
    if (!field_present(field)) continue;
    out += first ? "\"" : ",\"";
    first = false;
    out += field.name;
    out += "\":";
    out += field_value(field, true);
  }
  return out + "}\n";
}

MetricsReport parse_metrics_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    fail(ErrorCode::ingest_error, "metrics file is not a JSON object");

  MetricsReport report;
  const auto real = [&](const char* key) -> std::optional<double> {
    if (!doc.contains(key)) return std::nullopt;
    return doc.at(key).get<double>();
  };
  const auto integer = [&](const char* key) -> std::optional<int> {
    if (!doc.contains(key)) return std::nullopt;
    return doc.at(key).get<int>();
  };

  report.pa = real("pa");
  report.rmse_over_target = real("rmse_over_target");
  report.osr = real("osr");
  report.ar = real("ar");
  report.n_total = integer("n_total");
  report.n_success = integer("n_success");
  report.k = integer("k");
  report.n_opo = integer("n_opo");
  report.cgpu_s = real("cgpu_s");
  report.cgpu_value = real("cgpu");
  report.cgpu_o = real("cgpu_o");
  report.cgpu_a = real("cgpu_a");
  report.lambda_o = real("lambda_o");
  report.lambda_ao = real("lambda_ao");
  report.t_sopt = real("t_sopt");
  report.t_sog = real("t_sog");
  report.t_opo_avg = real("t_opo_avg");
  report.t_round_avg = real("t_round_avg");
  report.t_total = real("t_total");
  report.delivered = integer("delivered");
  report.excess_returns = integer("excess_returns");
  report.settle_wait = real("settle_wait");
  return report;
}

}  // namespace mogbench
