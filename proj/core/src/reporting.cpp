#include "attrdq/reporting.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "attrdq/text.hpp"

namespace attrdq {

using json = nlohmann::ordered_json;

ReportSummary summarize(const QualityReport& report) {
  ReportSummary s;
  auto tally = [&](const QualityIssue& issue) {
    ++s.issue_counts_by_kind[std::string(to_string(issue.issue))];
    ++s.dimension_counts[dimension_bucket(issue.dimensions)];
  };
  std::size_t classified = 0;
  for (const auto& c : report.columns) {
    if (!c.issues.empty()) ++s.columns_with_issues;
    if (c.format) ++classified;
    for (const auto& issue : c.issues) tally(issue);
  }
  for (const auto& issue : report.dataset_issues) tally(issue);
  s.classified_fraction =
      report.columns.empty() ? 0.0 : static_cast<double>(classified) / static_cast<double>(report.columns.size());
  return s;
}

QualityReport compile_report(const Dataset& dataset, std::vector<ColumnValidation> per_column,
                             std::vector<QualityIssue> extra_issues) {
  QualityReport r;
  r.dataset = DatasetInfo{dataset.source_name, dataset.row_count, dataset.columns.size(), dataset.delimiter,
                          dataset.had_header};
  r.columns.reserve(dataset.columns.size());
  for (std::size_t j = 0; j < dataset.columns.size(); ++j) {
    const auto& col = dataset.columns[j];
    ColumnReport c;
    c.name = col.name;
    if (col.analysis) {
      c.format = col.analysis->final_format;
      c.provenance = col.analysis->provenance;
    }
    if (j < per_column.size()) {
      c.issues = std::move(per_column[j].issues);
      c.distribution = std::move(per_column[j].distribution);
    }
    r.columns.push_back(std::move(c));
  }
  for (auto& issue : extra_issues) {
    auto it = std::find_if(r.columns.begin(), r.columns.end(),
                           [&](const ColumnReport& c) { return !issue.column.empty() && c.name == issue.column; });
    if (it != r.columns.end()) {
      it->issues.push_back(std::move(issue));
    } else {
      r.dataset_issues.push_back(std::move(issue));
    }
  }
  r.summary = summarize(r);
  return r;
}

std::optional<ReportFormat> report_format_from_name(std::string_view name) noexcept {
  if (name == "json") return ReportFormat::json;
  if (name == "text") return ReportFormat::text;
  if (name == "csv") return ReportFormat::csv;
  return std::nullopt;
}

std::string serialize(const QualityReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return to_json(report);
    case ReportFormat::text:
      return to_text(report);
    case ReportFormat::csv:
      return to_csv(report);
  }
  return {};
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json issue_json(const QualityIssue& i) {
  json dims = json::array();
  for (auto d : i.dimensions) dims.push_back(std::string(to_string(d)));
  json values = json::array();
  for (const auto& v : i.evidence.offending_values) values.push_back(json{{"value", v.value}, {"count", v.count}});
  return json{{"column", i.column},
              {"issue", std::string(to_string(i.issue))},
              {"dimensions", std::move(dims)},
              {"count", i.evidence.count},
              {"offending_values", std::move(values)},
              {"example_rows", i.evidence.example_rows},
              {"note", i.note}};
}

json distribution_json(const FrequencyDistribution& d) {
  json entries = json::array();
  for (const auto& e : d.entries) entries.push_back(json{{"value", e.value}, {"count", e.count}, {"fraction", e.fraction}});
  return json{{"column", d.column}, {"distinct_count", d.distinct_count}, {"entries", std::move(entries)}};
}

json counts_json(const std::map<std::string, std::size_t>& m) {
  json o = json::object();
  for (const auto& [k, v] : m) o[k] = v;
  return o;
}

template <typename T>
T required(const json& j, const char* key) {
  if (!j.contains(key)) throw ReportParseError(std::string("missing field '") + key + "'");
  return j.at(key).get<T>();
}

QualityIssue issue_from_json(const json& j) {
  QualityIssue i;
  i.column = required<std::string>(j, "column");
  const auto kind = issue_kind_from_name(required<std::string>(j, "issue"));
  if (!kind) throw ReportParseError("unknown issue kind '" + j.at("issue").get<std::string>() + "'");
  i.issue = *kind;
  for (const auto& d : j.at("dimensions")) {
    const auto dim = dimension_from_name(d.get<std::string>());
    if (!dim) throw ReportParseError("unknown dimension '" + d.get<std::string>() + "'");
    i.dimensions.push_back(*dim);
  }
  i.evidence.count = required<std::size_t>(j, "count");
  for (const auto& v : j.at("offending_values")) {
    i.evidence.offending_values.push_back(
        OffendingValue{v.at("value").get<std::string>(), v.at("count").get<std::size_t>()});
  }
  i.evidence.example_rows = required<std::vector<std::size_t>>(j, "example_rows");
  i.note = required<std::string>(j, "note");
  return i;
}

std::optional<SemanticType> format_from_json(const json& col) {
  const auto name = required<std::string>(col, "format");
  if (name == "NaN") return std::nullopt;
  const auto kind = type_kind_from_name(name);
  if (!kind) throw ReportParseError("unknown format '" + name + "'");
  if (*kind == TypeKind::numerical_between) {
    const auto& b = col.at("bounds");
    return SemanticType::between(b.at(0).get<double>(), b.at(1).get<double>());
  }
  return SemanticType::of(*kind);
}

}  // namespace

std::string to_json(const QualityReport& r) {
  json columns = json::array();
  for (const auto& c : r.columns) {
    json col;
    col["name"] = c.name;
    col["format"] = c.format ? std::string(c.format->name()) : std::string("NaN");
    col["label"] = c.format ? c.format->label() : std::string("NaN");
    if (c.format && c.format->bounds()) {
      col["bounds"] = json::array({c.format->bounds()->lo, c.format->bounds()->hi});
    }
    col["provenance"] = std::string(to_string(c.provenance));
    json issues = json::array();
    for (const auto& i : c.issues) issues.push_back(issue_json(i));
    col["issues"] = std::move(issues);
    col["distribution"] = c.distribution ? distribution_json(*c.distribution) : json(nullptr);
    columns.push_back(std::move(col));
  }
  json dataset_issues = json::array();
  for (const auto& i : r.dataset_issues) dataset_issues.push_back(issue_json(i));

  json doc;
  doc["schema_version"] = r.schema_version;
  doc["dataset"] = json{{"source_name", r.dataset.source_name},
                        {"row_count", r.dataset.row_count},
                        {"column_count", r.dataset.column_count},
                        {"delimiter", std::string(to_string(r.dataset.delimiter))},
                        {"had_header", r.dataset.had_header}};
  doc["columns"] = std::move(columns);
  doc["dataset_issues"] = std::move(dataset_issues);
  doc["summary"] = json{{"issue_counts_by_kind", counts_json(r.summary.issue_counts_by_kind)},
                        {"dimension_counts", counts_json(r.summary.dimension_counts)},
                        {"columns_with_issues", r.summary.columns_with_issues},
                        {"classified_fraction", r.summary.classified_fraction}};
  return doc.dump(2) + "\n";
}

QualityReport report_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ReportParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    QualityReport r;
    r.schema_version = required<int>(doc, "schema_version");
    if (r.schema_version != kReportSchemaVersion) {
      throw ReportParseError("unsupported schema_version " + std::to_string(r.schema_version));
    }
    const auto& ds = doc.at("dataset");
    r.dataset.source_name = required<std::string>(ds, "source_name");
    r.dataset.row_count = required<std::size_t>(ds, "row_count");
    r.dataset.column_count = required<std::size_t>(ds, "column_count");
    const auto delim = delimiter_from_name(required<std::string>(ds, "delimiter"));
    if (!delim) throw ReportParseError("unknown delimiter");
    r.dataset.delimiter = *delim;
    r.dataset.had_header = required<bool>(ds, "had_header");

    for (const auto& col : doc.at("columns")) {
      ColumnReport c;
      c.name = required<std::string>(col, "name");
      c.format = format_from_json(col);
      const auto prov = provenance_from_name(required<std::string>(col, "provenance"));
      if (!prov) throw ReportParseError("unknown provenance");
      c.provenance = *prov;
      for (const auto& i : col.at("issues")) c.issues.push_back(issue_from_json(i));
      if (const auto& d = col.at("distribution"); !d.is_null()) {
        FrequencyDistribution dist;
        dist.column = required<std::string>(d, "column");
        dist.distinct_count = required<std::size_t>(d, "distinct_count");
        for (const auto& e : d.at("entries")) {
          dist.entries.push_back(FrequencyEntry{e.at("value").get<std::string>(), e.at("count").get<std::size_t>(),
                                                e.at("fraction").get<double>()});
        }
        c.distribution = std::move(dist);
      }
      r.columns.push_back(std::move(c));
    }
    for (const auto& i : doc.at("dataset_issues")) r.dataset_issues.push_back(issue_from_json(i));

    const auto& s = doc.at("summary");
    for (const auto& [k, v] : s.at("issue_counts_by_kind").items()) r.summary.issue_counts_by_kind[k] = v.get<std::size_t>();
    for (const auto& [k, v] : s.at("dimension_counts").items()) r.summary.dimension_counts[k] = v.get<std::size_t>();
    r.summary.columns_with_issues = required<std::size_t>(s, "columns_with_issues");
    r.summary.classified_fraction = required<double>(s, "classified_fraction");
    return r;
  } catch (const json::exception& e) {
    throw ReportParseError(std::string("malformed report: ") + e.what());
  } catch (const TypeError& e) {
    throw ReportParseError(std::string("malformed report: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Text

namespace {

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", fraction * 100.0);
  return buf;
}

void write_issue_text(std::ostringstream& out, const QualityIssue& i) {
  out << "  - " << to_string(i.issue) << " [" << dimension_bucket(i.dimensions) << "] count=" << i.evidence.count;
  if (!i.note.empty()) out << ": " << i.note;
  out << '\n';
  if (!i.evidence.offending_values.empty()) {
    out << "      values:";
    for (const auto& v : i.evidence.offending_values) out << " \"" << v.value << "\" x" << v.count;
    out << '\n';
  }
  if (!i.evidence.example_rows.empty()) {
    out << "      rows:";
    for (auto row : i.evidence.example_rows) out << ' ' << row;
    out << '\n';
  }
}

}  // namespace

std::string to_text(const QualityReport& r) {
  std::ostringstream out;
  out << "Dataset: " << r.dataset.source_name << '\n'
      << "  rows: " << r.dataset.row_count << ", columns: " << r.dataset.column_count
      << ", delimiter: " << to_string(r.dataset.delimiter) << ", header: " << (r.dataset.had_header ? "yes" : "no")
      << "\n\n";

  for (std::size_t j = 0; j < r.columns.size(); ++j) {
    const auto& c = r.columns[j];
    out << "Column " << (j + 1) << ": " << c.name << " (format: " << (c.format ? c.format->label() : "NaN")
        << ", " << to_string(c.provenance) << ")\n";
    if (c.issues.empty()) out << "  no issues\n";
    for (const auto& i : c.issues) write_issue_text(out, i);
    if (c.distribution) {
      const auto& d = *c.distribution;
      out << "  distribution: " << d.distinct_count << " distinct\n";
      const std::size_t shown = std::min<std::size_t>(d.entries.size(), 10);
      for (std::size_t k = 0; k < shown; ++k) {
        out << "      \"" << d.entries[k].value << "\" " << d.entries[k].count << " (" << percent(d.entries[k].fraction)
            << ")\n";
      }
      if (d.entries.size() > shown) out << "      ... " << (d.entries.size() - shown) << " more\n";
    }
    out << '\n';
  }

  if (!r.dataset_issues.empty()) {
    out << "Dataset-level issues:\n";
    for (const auto& i : r.dataset_issues) write_issue_text(out, i);
    out << '\n';
  }

  out << "Summary\n";
  out << "  issues by kind:";
  if (r.summary.issue_counts_by_kind.empty()) out << " none";
  for (const auto& [k, v] : r.summary.issue_counts_by_kind) out << ' ' << k << '=' << v;
  out << "\n  issues by dimension:";
  if (r.summary.dimension_counts.empty()) out << " none";
  for (const auto& [k, v] : r.summary.dimension_counts) out << ' ' << k << '=' << v;
  out << "\n  columns with issues: " << r.summary.columns_with_issues << " of " << r.columns.size()
      << "\n  classified: " << percent(r.summary.classified_fraction) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_issue_csv(std::string& out, const QualityReport& r, std::string_view format, const QualityIssue& i) {
  std::string examples;
  for (const auto& v : i.evidence.offending_values) {
    if (!examples.empty()) examples += "; ";
    examples += v.value;
  }
  out += csv_field(r.dataset.source_name) + ',' + csv_field(i.column) + ',' + csv_field(format) + ',' +
         std::string(to_string(i.issue)) + ',' + dimension_bucket(i.dimensions) + ',' +
         std::to_string(i.evidence.count) + ',' + csv_field(examples) + '\n';
}

}  // namespace

std::string to_csv(const QualityReport& r) {
  std::string out = "dataset,column,format,issue,dimensions,count,examples\n";
  for (const auto& c : r.columns) {
    const std::string format = c.format ? c.format->label() : "NaN";
    for (const auto& i : c.issues) write_issue_csv(out, r, format, i);
  }
  for (const auto& i : r.dataset_issues) write_issue_csv(out, r, "", i);
  return out;
}

}  // namespace attrdq
