#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>

#include "test_support.hpp"

namespace attrdq {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "attrdq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t issue_count(const std::string& json) {
  const auto doc = nlohmann::json::parse(json);
  std::size_t n = doc["dataset_issues"].size();
  for (const auto& c : doc["columns"]) n += c["issues"].size();
  return n;
}

TEST(Cli, AnalyzeDirtyTable) {
  const auto r = run({"analyze", testing::fixture_path("table1.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GE(issue_count(r.out), 7u);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, AnalyzeCleanNumeric) {
  const auto r = run({"analyze", testing::fixture_path("clean_numeric.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(issue_count(r.out), 0u);
}

TEST(Cli, MissingMarkerOverride) {
  testing::TempDir dir;
  const auto p = dir.write("m.csv", "Country,City\n,Lisbon\nnull,Porto\n?,Faro\nNA,Braga\n");
  auto missing_of = [](const std::string& json) {
    const auto doc = nlohmann::json::parse(json);
    for (const auto& i : doc["columns"][0]["issues"]) {
      if (i["issue"] == "missing_data") return i["count"].get<std::size_t>();
    }
    return std::size_t{0};
  };
  const auto defaults = run({"analyze", p});
  EXPECT_EQ(missing_of(defaults.out), 4u);
  const auto narrowed = run({"analyze", p, "--missing-markers", "?,NA"});
  ASSERT_EQ(narrowed.code, 0) << narrowed.err;
  EXPECT_EQ(missing_of(narrowed.out), 3u);
}

TEST(Cli, OutputFormatsAndFile) {
  testing::TempDir dir;
  const auto path = (dir.path() / "r.csv").string();
  const auto r = run({"analyze", testing::fixture_path("table1.csv"), "--format", "csv", "-o", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const auto csv = testing::read_file(path);
  EXPECT_NE(csv.find("Student ID,id,duplicates"), std::string::npos);
  const auto text = run({"analyze", testing::fixture_path("table1.csv"), "--format", "text"});
  EXPECT_NE(text.out.find("Column 1: Student ID"), std::string::npos);
}

TEST(Cli, DetectDirtyTable) {
  const auto r = run({"detect", testing::fixture_path("table1.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "Student ID\tid\nLast Name\tname\nFirst Name\tname\nAge\tage\nCountry\tcountry\n"
            "Humidity\tnumerical>=0\nBirthDate\tdate\n");
}

TEST(Cli, DetectHeaderless) {
  testing::TempDir dir;
  const auto p = dir.write("iris.data", "5.1,3.5,1.4\n4.9,3.0,1.4\n");
  const auto r = run({"detect", p});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "col_1\tNaN\ncol_2\tNaN\ncol_3\tNaN\n");
}

TEST(Cli, DetectWithDescriptions) {
  testing::TempDir dir;
  const auto p = dir.write("d.data", "1,2,33\n4,5,61\n");
  const auto desc = dir.write("desc.txt", "# sidecar\ncol_3: patient age in years\n");
  const auto r = run({"detect", p, "--descriptions", desc});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("col_3\tage\n"), std::string::npos) << r.out;
}

TEST(Cli, DictStats) {
  const auto r = run({"dict-stats"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "format\tfrequency\tpercentage");
  double total = 0;
  while (std::getline(lines, line)) total += std::stod(line.substr(line.rfind('\t') + 1));
  EXPECT_NEAR(total, 100.0, 0.05);
}

TEST(Cli, DictStatsSingleEntry) {
  testing::TempDir dir;
  const auto p = dir.write("f.txt", "age\tage\n");
  EXPECT_EQ(run({"dict-stats", "--formats", p}).out, "format\tfrequency\tpercentage\nage\t1\t100.00\n");
}

TEST(Cli, ErrorsExitTwo) {
  testing::TempDir dir;
  EXPECT_EQ(run({"analyze", (dir.path() / "none.csv").string()}).code, 2);
  EXPECT_EQ(run({"analyze", testing::fixture_path("table1.csv"), "--delimiter", "tab"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  const auto bad = dir.write("bad.txt", "age\tage\nage\tname\n");
  const auto r = run({"dict-stats", "--formats", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(":2:"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, DictDirFromEnvironment) {
  testing::TempDir dir;
  dir.write("formats_dictionary.txt", "zz\tage\n");
  ::setenv("ATTRDQ_DICT_DIR", dir.path().c_str(), 1);
  const auto r = run({"dict-stats"});
  ::unsetenv("ATTRDQ_DICT_DIR");
  EXPECT_EQ(r.out, "format\tfrequency\tpercentage\nage\t1\t100.00\n");
}

TEST(Cli, OverridesBypassDetection) {
  testing::TempDir dir;
  const auto p = dir.write("s.csv", "Age;Country\n30;PT\n");
  const auto r = run({"detect", p, "--delimiter", "comma", "--header", "no"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "col_1\tNaN\n");
}

}  // namespace
}  // namespace attrdq
