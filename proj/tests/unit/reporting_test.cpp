#include "attrdq/reporting.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "attrdq/pipeline.hpp"
#include "test_support.hpp"

namespace attrdq {
namespace {

namespace chr = std::chrono;

QualityReport table1_report() {
  auto ds = load_dataset(testing::fixture_path("table1.csv"));
  AnalysisOptions opts;
  opts.config = ValidationConfig::for_reference_date(chr::year_month_day{chr::year{2024}, chr::June, chr::day{1}});
  return analyze_dataset(ds, testing::seed_formats(), testing::seed_abbreviations(), opts);
}

QualityReport clean_report() {
  auto ds = parse_dataset("Age,Humidity\n30,40\n31,41\n", "clean.csv");
  return analyze_dataset(ds, testing::seed_formats(), testing::seed_abbreviations());
}

TEST(CompileReport, Table1Summary) {
  const auto r = table1_report();
  const auto& k = r.summary.issue_counts_by_kind;
  EXPECT_GE(k.at("missing_data"), 2u);
  EXPECT_EQ(k.at("duplicates"), 1u);
  EXPECT_GE(k.at("domain_violation"), 2u);
  EXPECT_GE(k.at("wrong_data_type"), 2u);
  EXPECT_EQ(k.at("non_string_data_type"), 1u);
  EXPECT_EQ(r.summary.columns_with_issues, 7u);
  EXPECT_DOUBLE_EQ(r.summary.classified_fraction, 1.0);
  EXPECT_EQ(r.dataset.column_count, 7u);
  EXPECT_EQ(r.dataset.row_count, 3u);
}

TEST(CompileReport, ZeroIssues) {
  const auto r = clean_report();
  EXPECT_TRUE(r.summary.issue_counts_by_kind.empty());
  EXPECT_TRUE(r.summary.dimension_counts.empty());
  EXPECT_EQ(r.summary.columns_with_issues, 0u);
}

TEST(CompileReport, CombinedDimensionBucket) {
  Dataset ds;
  ds.source_name = "d";
  ds.columns.resize(1);
  ds.columns[0].name = "c";
  ds.row_count = 0;
  Evidence ev;
  ev.count = 1;
  const auto r = compile_report(ds, {ColumnValidation{}},
                                {make_issue("", IssueKind::structural_conflicts, ev, "ragged")});
  EXPECT_EQ(r.dataset_issues.size(), 1u);
  EXPECT_EQ(r.summary.dimension_counts, (std::map<std::string, std::size_t>{{"consistency+uniqueness", 1}}));
}

TEST(CompileReport, ColumnIssuesFromExtrasJoinTheirColumn) {
  Dataset ds;
  ds.columns.resize(2);
  ds.columns[0].name = "a";
  ds.columns[1].name = "b";
  Evidence ev;
  ev.count = 2;
  const auto r = compile_report(ds, {ColumnValidation{}, ColumnValidation{}},
                                {make_issue("b", IssueKind::structural_conflicts, ev)});
  EXPECT_TRUE(r.dataset_issues.empty());
  EXPECT_EQ(r.columns[1].issues.size(), 1u);
  EXPECT_EQ(r.summary.columns_with_issues, 1u);
}

TEST(CompileReport, SummaryMatchesRecomputation) {
  const auto r = table1_report();
  EXPECT_EQ(r.summary, summarize(r));
  std::size_t issues = 0;
  for (const auto& c : r.columns) issues += c.issues.size();
  issues += r.dataset_issues.size();
  std::size_t bucketed = 0;
  for (const auto& [name, n] : r.summary.dimension_counts) bucketed += n;
  EXPECT_EQ(bucketed, issues);
}

TEST(Serialize, JsonRoundTrip) {
  for (const auto& r : {table1_report(), clean_report()}) {
    const auto json = to_json(r);
    EXPECT_EQ(report_from_json(json), r);
    EXPECT_EQ(to_json(report_from_json(json)), json);
  }
}

TEST(Serialize, JsonShape) {
  const auto doc = nlohmann::ordered_json::parse(to_json(table1_report()));
  EXPECT_EQ(doc["schema_version"], 1);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "dataset", "columns", "dataset_issues", "summary"}));
  EXPECT_EQ(doc["columns"][5]["format"], "numerical_non_negative");
  EXPECT_EQ(doc["columns"][5]["label"], "numerical>=0");
  EXPECT_EQ(doc["columns"][3]["bounds"], nlohmann::ordered_json::array({0, 150}));
  EXPECT_EQ(doc["columns"][0]["provenance"], "id_rule");
  EXPECT_EQ(doc["dataset"]["delimiter"], "comma");
}

TEST(Serialize, JsonRejectsBadInput) {
  EXPECT_THROW(report_from_json("{"), ReportParseError);
  EXPECT_THROW(report_from_json("{}"), ReportParseError);
  auto doc = nlohmann::json::parse(to_json(clean_report()));
  doc["columns"][0]["format"] = "week";
  EXPECT_THROW(report_from_json(doc.dump()), ReportParseError);
  doc = nlohmann::json::parse(to_json(clean_report()));
  doc["schema_version"] = 2;
  EXPECT_THROW(report_from_json(doc.dump()), ReportParseError);
}

TEST(Serialize, Deterministic) {
  const auto r = table1_report();
  for (auto f : {ReportFormat::json, ReportFormat::text, ReportFormat::csv}) {
    EXPECT_EQ(serialize(r, f), serialize(table1_report(), f));
  }
}

TEST(Serialize, CsvRows) {
  const auto csv = to_csv(table1_report());
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "dataset,column,format,issue,dimensions,count,examples");
  EXPECT_NE(csv.find("table1.csv,Student ID,id,duplicates,uniqueness,2,J892932\n"), std::string::npos) << csv;
  EXPECT_NE(csv.find("table1.csv,Humidity,numerical>=0,domain_violation,accuracy,1,-200\n"), std::string::npos);
}

TEST(Serialize, CsvHeaderOnlyWithoutIssues) {
  EXPECT_EQ(to_csv(clean_report()), "dataset,column,format,issue,dimensions,count,examples\n");
}

TEST(Serialize, CsvQuoting) {
  QualityReport r;
  r.dataset.source_name = "a,b.csv";
  ColumnReport c;
  c.name = "say \"x\"";
  Evidence ev;
  ev.count = 2;
  ev.offending_values = {{"1,5", 1}, {"q", 1}};
  c.issues.push_back(make_issue(c.name, IssueKind::wrong_data_type, ev));
  r.columns.push_back(c);
  EXPECT_EQ(to_csv(r), "dataset,column,format,issue,dimensions,count,examples\n"
                       "\"a,b.csv\",\"say \"\"x\"\"\",NaN,wrong_data_type,consistency,2,\"1,5; q\"\n");
}

TEST(Serialize, TextSectionsInColumnOrder) {
  const auto text = to_text(table1_report());
  std::size_t last = 0;
  for (const char* h : {"Column 1: Student ID", "Column 2: Last Name", "Column 7: BirthDate", "Summary"}) {
    const auto pos = text.find(h);
    ASSERT_NE(pos, std::string::npos) << h;
    EXPECT_GT(pos, last);
    last = pos;
  }
  EXPECT_NE(text.find("improper capitalization"), std::string::npos);
}

TEST(ReportFormatNames, Parse) {
  EXPECT_EQ(report_format_from_name("csv"), ReportFormat::csv);
  EXPECT_FALSE(report_format_from_name("html"));
}

}  // namespace
}  // namespace attrdq
