#pragma once

#include <map>
#include <string>

#include "mogbench/metrics.hpp"
#include "mogbench/trial_log.hpp"

namespace mogbench {

/// Renders the JSON-lines log: a header line, one line per trial/round/run,
/// fields in fixed order, times as 6-decimal seconds. Byte-identical for
/// identical runs.
std::string emit_log(const TrialLog& log);

/// Exact inverse of emit_log: emit_log(parse_log(text)) == text.
TrialLog parse_log(const std::string& text);

void write_log_file(const TrialLog& log, const std::string& path);
TrialLog read_log_file(const std::string& path);

/// Renames applied while ingesting an external log: ours -> theirs.
using FieldMap = std::map<std::string, std::string>;

/// Parses an external (robot or human) JSON-lines log. Rows are either
/// per-trial records {"target", "outcome", optional "t_opo"/"t_transfer"},
/// per-run summaries {"kind":"run", "k", "rounds", optional "t_total"}, or a
/// calibration row {"kind":"calibration", "t_sopt", optional "t_sog"}.
/// Malformed rows fail with their 1-based row number.
ExternalLog parse_external_log(const std::string& text, const FieldMap& mapping = {});
ExternalLog read_external_log_file(const std::string& path, const FieldMap& mapping = {});

enum class ReportFormat { text, csv };

/// Deterministic report rendering. CSV is one fixed-order header row plus
/// one value row; absent metrics are empty cells.
std::string render_report(const MetricsReport& report, ReportFormat format);

/// Lossless machine-readable report form (consumed by the `report`
/// subcommand).
std::string emit_metrics_json(const MetricsReport& report);
MetricsReport parse_metrics_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace mogbench
