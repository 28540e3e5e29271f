#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "attrdq/ingestion.hpp"
#include "attrdq/semantic_model.hpp"

namespace attrdq {

inline constexpr std::size_t kMaxOffendingValues = 20;
inline constexpr std::size_t kMaxExampleRows = 10;

struct OffendingValue {
  std::string value;
  std::size_t count = 0;
  friend bool operator==(const OffendingValue&, const OffendingValue&) = default;
};

struct Evidence {
  std::vector<OffendingValue> offending_values;  // distinct, first-seen order, capped
  std::size_t count = 0;                         // offending cells (or categories, see note)
  std::vector<std::size_t> example_rows;         // 0-based data-row indices, capped
  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct QualityIssue {
  std::string column;  // empty for dataset-level issues
  IssueKind issue = IssueKind::missing_data;
  DimensionSet dimensions;
  Evidence evidence;
  std::string note;
  friend bool operator==(const QualityIssue&, const QualityIssue&) = default;
};

/// Fills in `dimensions` from dimensions_of(kind).
QualityIssue make_issue(std::string column, IssueKind kind, Evidence evidence, std::string note = {});

struct FrequencyEntry {
  std::string value;
  std::size_t count = 0;
  double fraction = 0.0;
  friend bool operator==(const FrequencyEntry&, const FrequencyEntry&) = default;
};

/// Value counts over the non-missing cells, sorted by count descending then value.
struct FrequencyDistribution {
  std::string column;
  std::vector<FrequencyEntry> entries;
  std::size_t distinct_count = 0;
  friend bool operator==(const FrequencyDistribution&, const FrequencyDistribution&) = default;
};

/// Cell values that stand for "no data". Compared after trimming,
/// case-insensitively. The empty string is always a member.
class MissingMarkerSet {
 public:
  /// {"?", "", "NA", "N/A", "null", "NaN"}
  MissingMarkerSet();
  explicit MissingMarkerSet(std::span<const std::string> markers);
  /// Comma-separated list, e.g. "?,NA". Items are trimmed.
  static MissingMarkerSet parse(std::string_view comma_separated);

  bool is_missing(std::string_view cell) const noexcept;
  /// Lowercased markers, sorted.
  const std::vector<std::string>& markers() const noexcept { return markers_; }

 private:
  std::vector<std::string> markers_;
};

/// System clock date plus one year.
std::chrono::year_month_day one_year_from_today();

struct ValidationConfig {
  std::size_t max_categories = 1000;
  /// Dates before this are outdated_temporal_data.
  std::chrono::year_month_day earliest_date{std::chrono::year{1900}, std::chrono::January, std::chrono::day{1}};
  /// Dates after this are domain_violation.
  std::chrono::year_month_day latest_date = one_year_from_today();
  /// Cells inspected to settle DD/MM/YYYY versus MM/DD/YYYY per column.
  std::size_t date_pattern_sample = 50;
  /// Fraction above which each of two type populations counts as a structural conflict.
  double mixed_population_fraction = 0.2;

  /// Defaults with latest_date = `today` + 1 year.
  static ValidationConfig for_reference_date(std::chrono::year_month_day today);
};

// Per-family checks. Missing cells are skipped by every check except
// check_missing.

std::optional<QualityIssue> check_missing(const ColumnProfile& column, const MissingMarkerSet& markers);

std::vector<QualityIssue> check_numerical(const ColumnProfile& column, const MissingMarkerSet& markers,
                                          bool non_negative, std::optional<Bounds> bounds,
                                          bool allow_percent_sign = false);

std::vector<QualityIssue> check_id(const ColumnProfile& column, const MissingMarkerSet& markers);

/// `format` is one of string, name, model_name, city, state, country, street.
std::vector<QualityIssue> check_string_content(const ColumnProfile& column, const MissingMarkerSet& markers,
                                               TypeKind format);

/// `format` is categorical or binary.
std::pair<FrequencyDistribution, std::vector<QualityIssue>> check_categorical(const ColumnProfile& column,
                                                                               const MissingMarkerSet& markers,
                                                                               TypeKind format,
                                                                               std::size_t max_categories);

FrequencyDistribution frequency_distribution(const ColumnProfile& column, const MissingMarkerSet& markers);

/// `format` is date, datetime, time, year, month, day, hour or weekday.
std::vector<QualityIssue> check_temporal(const ColumnProfile& column, const MissingMarkerSet& markers,
                                         TypeKind format, const ValidationConfig& config);

/// `type` is email, url, ip, phone, postal_code, money or a bounded
/// numeric (latitude, longitude, ph, percentage, normalized).
std::vector<QualityIssue> check_special(const ColumnProfile& column, const MissingMarkerSet& markers,
                                        const SemanticType& type);

/// Ragged rows recorded at ingestion (column-less issue) and numerical
/// columns whose cells split into numeric and text populations.
std::vector<QualityIssue> detect_structural_conflicts(const Dataset& dataset, const MissingMarkerSet& markers,
                                                      const ValidationConfig& config = {});

struct ColumnValidation {
  std::vector<QualityIssue> issues;
  std::optional<FrequencyDistribution> distribution;
  friend bool operator==(const ColumnValidation&, const ColumnValidation&) = default;
};

/// check_missing, then the single family check selected by the column's
/// final format. Unclassified columns only get check_missing.
ColumnValidation validate_column(const ColumnProfile& column, const MissingMarkerSet& markers,
                                 const ValidationConfig& config);

// Syntax predicates shared by the checks (exposed for tests and tools).
namespace syntax {
bool is_email(std::string_view s) noexcept;
bool is_url(std::string_view s) noexcept;
bool is_ipv4(std::string_view s) noexcept;
bool is_phone(std::string_view s) noexcept;
bool is_postal_code(std::string_view s) noexcept;
std::optional<double> parse_money(std::string_view s) noexcept;
bool is_time_of_day(std::string_view s) noexcept;
bool is_weekday_name(std::string_view s) noexcept;

enum class DateOrder { day_first, month_first };
struct DateParts {
  int year = 0;
  int first = 0;   // day (ISO: month) as written
  int second = 0;  // month (ISO: day) as written
  bool iso = false;
};
/// YYYY-M-D or D/M/YYYY shape, without calendar validation.
std::optional<DateParts> split_date(std::string_view s) noexcept;
std::chrono::year_month_day to_ymd(const DateParts& p, DateOrder order) noexcept;
}  // namespace syntax

}  // namespace attrdq
