#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "attrdq/dictionaries.hpp"
#include "attrdq/ingestion.hpp"
#include "attrdq/reporting.hpp"
#include "attrdq/validation.hpp"

namespace attrdq {

struct AnalysisOptions {
  MissingMarkerSet markers;
  ValidationConfig config;
  /// Column name -> free-text description.
  std::map<std::string, std::string> descriptions;
  /// 0 = hardware_concurrency().
  std::size_t threads = 0;
};

/// Fills in ColumnProfile::analysis (and description) for every column.
void annotate_columns(Dataset& dataset, const FormatsDictionary& fmts, const AbbreviationsDictionary& abbr,
                      const std::map<std::string, std::string>& descriptions = {});

/// Runs validate_column on each annotated column plus the dataset-wide
/// structural checks. Columns are processed concurrently; output order
/// follows the dataset.
QualityReport assess(const Dataset& dataset, const AnalysisOptions& options = {});

/// annotate_columns followed by assess.
QualityReport analyze_dataset(Dataset& dataset, const FormatsDictionary& fmts, const AbbreviationsDictionary& abbr,
                              const AnalysisOptions& options = {});

}  // namespace attrdq
