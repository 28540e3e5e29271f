#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "attrdq/ingestion.hpp"
#include "attrdq/label_analysis.hpp"
#include "attrdq/validation.hpp"

namespace attrdq {

inline constexpr int kReportSchemaVersion = 1;

struct DatasetInfo {
  std::string source_name;
  std::size_t row_count = 0;
  std::size_t column_count = 0;
  Delimiter delimiter = Delimiter::comma;
  bool had_header = false;
  friend bool operator==(const DatasetInfo&, const DatasetInfo&) = default;
};

struct ColumnReport {
  std::string name;
  std::optional<SemanticType> format;  // empty = unclassified ("NaN")
  Provenance provenance = Provenance::unclassified;
  std::vector<QualityIssue> issues;
  std::optional<FrequencyDistribution> distribution;
  friend bool operator==(const ColumnReport&, const ColumnReport&) = default;
};

struct ReportSummary {
  std::map<std::string, std::size_t> issue_counts_by_kind;
  /// Keyed by dimension_bucket(): an issue with two dimensions lands in one
  /// combined bucket such as "consistency+uniqueness".
  std::map<std::string, std::size_t> dimension_counts;
  std::size_t columns_with_issues = 0;
  double classified_fraction = 0.0;
  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct QualityReport {
  int schema_version = kReportSchemaVersion;
  DatasetInfo dataset;
  std::vector<ColumnReport> columns;
  std::vector<QualityIssue> dataset_issues;  // issues not tied to one column
  ReportSummary summary;
  friend bool operator==(const QualityReport&, const QualityReport&) = default;
};

/// Recomputes the summary from the column and dataset issue lists.
ReportSummary summarize(const QualityReport& report);

/// `per_column` is parallel to dataset.columns. Issues carrying a column
/// name from `extra_issues` are appended to that column; the rest become
/// dataset-level issues.
QualityReport compile_report(const Dataset& dataset, std::vector<ColumnValidation> per_column,
                             std::vector<QualityIssue> extra_issues = {});

enum class ReportFormat { json, text, csv };

std::optional<ReportFormat> report_format_from_name(std::string_view name) noexcept;

class ReportParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string serialize(const QualityReport& report, ReportFormat format);
std::string to_json(const QualityReport& report);
std::string to_text(const QualityReport& report);
std::string to_csv(const QualityReport& report);
/// Inverse of to_json.
QualityReport report_from_json(std::string_view json);

}  // namespace attrdq
