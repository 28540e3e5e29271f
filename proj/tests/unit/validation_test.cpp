#include "attrdq/validation.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

namespace attrdq {
namespace {

namespace chr = std::chrono;

ColumnProfile column(std::string name, std::initializer_list<std::string_view> cells,
                     std::optional<SemanticType> type = std::nullopt) {
  ColumnProfile c;
  c.name = std::move(name);
  c.cells = CellColumn(cells);
  if (type) {
    LabelAnalysis a;
    a.original_header = c.name;
    a.final_format = type;
    a.provenance = Provenance::from_name;
    c.analysis = a;
  }
  return c;
}

SemanticType T(TypeKind k) { return SemanticType::of(k); }

std::vector<std::string> values(const QualityIssue& i) {
  std::vector<std::string> out;
  for (const auto& v : i.evidence.offending_values) out.push_back(v.value);
  return out;
}

std::vector<IssueKind> kinds(const std::vector<QualityIssue>& issues) {
  std::vector<IssueKind> out;
  for (const auto& i : issues) out.push_back(i.issue);
  return out;
}

const ValidationConfig kConfig = ValidationConfig::for_reference_date(
    chr::year_month_day{chr::year{2024}, chr::June, chr::day{1}});
const MissingMarkerSet kMarkers;

TEST(MissingMarkerSet, DefaultsAndCase) {
  for (const char* s : {"?", "", "  ", "NA", "na", "N/A", "null", "NULL", "NaN", "nan", " ? "}) {
    EXPECT_TRUE(kMarkers.is_missing(s)) << s;
  }
  for (const char* s : {"0", "-", "none", "USA", "n"}) EXPECT_FALSE(kMarkers.is_missing(s)) << s;
}

TEST(MissingMarkerSet, EmptyStringCannotBeRemoved) {
  const auto m = MissingMarkerSet::parse("?,NA");
  EXPECT_TRUE(m.is_missing(""));
  EXPECT_TRUE(m.is_missing("?"));
  EXPECT_FALSE(m.is_missing("null"));
  EXPECT_EQ(m.markers(), (std::vector<std::string>{"", "?", "na"}));
}

TEST(CheckMissing, CountryColumn) {
  const auto issue = check_missing(column("Country", {"USA", "?", "Australia"}), kMarkers);
  ASSERT_TRUE(issue);
  EXPECT_EQ(issue->issue, IssueKind::missing_data);
  EXPECT_EQ(issue->evidence.count, 1u);
  EXPECT_EQ(values(*issue), std::vector<std::string>{"?"});
  EXPECT_EQ(issue->evidence.example_rows, std::vector<std::size_t>{1});
  EXPECT_EQ(issue->dimensions, DimensionSet{Dimension::completeness});
}

TEST(CheckMissing, CleanAndMixed) {
  EXPECT_FALSE(check_missing(column("c", {"a", "b", "c"}), kMarkers));
  const auto issue = check_missing(column("c", {"", "NA", "?"}), kMarkers);
  ASSERT_TRUE(issue);
  EXPECT_EQ(issue->evidence.count, 3u);
  EXPECT_EQ(issue->evidence.offending_values.size(), 3u);
}

TEST(CheckNumerical, NegativeHumidity) {
  const auto out = check_numerical(column("Humidity", {"45", "70", "-200"}), kMarkers, true, std::nullopt);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].issue, IssueKind::domain_violation);
  EXPECT_EQ(values(out[0]), std::vector<std::string>{"-200"});
}

TEST(CheckNumerical, AgeOutOfBounds) {
  const auto out = check_numerical(column("Age", {"200"}), kMarkers, false, Bounds{0, 150});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].issue, IssueKind::domain_violation);
  EXPECT_TRUE(check_numerical(column("x", {"1", "2", "3"}), kMarkers, false, Bounds{0, 10}).empty());
}

TEST(CheckNumerical, WrongTypeAndDomainTogether) {
  const auto out = check_numerical(column("x", {"abc", "-1", "?", "1,5", "3"}), kMarkers, true, Bounds{0, 2});
  EXPECT_EQ(kinds(out), (std::vector<IssueKind>{IssueKind::wrong_data_type, IssueKind::domain_violation}));
  EXPECT_EQ(values(out[0]), (std::vector<std::string>{"abc", "1,5"}));
  EXPECT_EQ(values(out[1]), (std::vector<std::string>{"-1", "3"}));
}

TEST(CheckNumerical, BoundsAreInclusive) {
  EXPECT_TRUE(check_numerical(column("x", {"0", "14", "7.5"}), kMarkers, false, Bounds{0, 14}).empty());
}

TEST(CheckId, DuplicatedStudentIds) {
  const auto out = check_id(column("Student ID", {"I345343", "J892932", "J892932"}), kMarkers);
  EXPECT_EQ(kinds(out), (std::vector<IssueKind>{IssueKind::duplicates, IssueKind::uniqueness_violation}));
  EXPECT_EQ(values(out[0]), std::vector<std::string>{"J892932"});
  EXPECT_EQ(out[0].evidence.offending_values[0].count, 2u);
  EXPECT_EQ(out[0].evidence.example_rows, (std::vector<std::size_t>{1, 2}));
}

TEST(CheckId, CleanAndAllSame) {
  EXPECT_TRUE(check_id(column("id", {"a", "b", "c"}), kMarkers).empty());
  const auto out = check_id(column("id", {"x", "x", "x"}), kMarkers);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].evidence.count, 3u);
  EXPECT_EQ(out[1].issue, IssueKind::uniqueness_violation);
}

TEST(CheckId, MissingBlocksPrimaryKey) {
  const auto out = check_id(column("id", {"a", "?", "c"}), kMarkers);
  EXPECT_EQ(kinds(out), std::vector<IssueKind>{IssueKind::uniqueness_violation});
}

TEST(CheckStringContent, ImproperCapitalization) {
  const auto out = check_string_content(column("Last Name", {"white", "Stewart", "Johnson"}), kMarkers,
                                        TypeKind::name);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].issue, IssueKind::wrong_data_type);
  EXPECT_EQ(out[0].note, "improper capitalization");
  EXPECT_EQ(values(out[0]), std::vector<std::string>{"white"});
}

TEST(CheckStringContent, NumberInNameColumn) {
  const auto out = check_string_content(column("First Name", {"3", "Ronald", "Peter"}), kMarkers, TypeKind::name);
  EXPECT_EQ(kinds(out), std::vector<IssueKind>{IssueKind::non_string_data_type});
  EXPECT_EQ(values(out[0]), std::vector<std::string>{"3"});
  EXPECT_TRUE(check_string_content(column("City", {"Lisbon", "Perth"}), kMarkers, TypeKind::city).empty());
}

TEST(CheckStringContent, GenericStringsSkipCapitalization) {
  EXPECT_TRUE(check_string_content(column("s", {"lower case", "x"}), kMarkers, TypeKind::string).empty());
}

TEST(CheckCategorical, BinaryWithThirdValue) {
  const auto [dist, issues] = check_categorical(column("b", {"y", "n", "y", "maybe"}), kMarkers, TypeKind::binary, 1000);
  EXPECT_EQ(dist.distinct_count, 3u);
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].issue, IssueKind::domain_violation);
  EXPECT_EQ(values(issues[0]), std::vector<std::string>{"maybe"});
}

TEST(CheckCategorical, TooManyCategories) {
  ColumnProfile c;
  c.name = "Description";
  for (int i = 0; i < 4100; ++i) c.cells.push_back("item " + std::to_string(i));
  const auto [dist, issues] = check_categorical(c, kMarkers, TypeKind::categorical, 1000);
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].issue, IssueKind::extraneous_data);
  EXPECT_EQ(issues[0].evidence.count, 4100u);
}

TEST(CheckCategorical, Distribution) {
  const auto [dist, issues] = check_categorical(column("c", {"a", "a", "b", "?"}), kMarkers, TypeKind::categorical, 1000);
  EXPECT_TRUE(issues.empty());
  ASSERT_EQ(dist.entries.size(), 2u);
  EXPECT_EQ(dist.entries[0].value, "a");
  EXPECT_EQ(dist.entries[0].count, 2u);
  EXPECT_DOUBLE_EQ(dist.entries[0].fraction, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(dist.entries[1].fraction, 1.0 / 3.0);
}

TEST(CheckTemporal, BirthDates) {
  const auto col = column("BirthDate", {"3/04/2121", "0/1/2010", "null"});
  const auto out = check_temporal(col, kMarkers, TypeKind::date, kConfig);
  EXPECT_EQ(kinds(out), (std::vector<IssueKind>{IssueKind::wrong_data_type, IssueKind::domain_violation}));
  EXPECT_EQ(values(out[0]), std::vector<std::string>{"0/1/2010"});
  EXPECT_EQ(values(out[1]), std::vector<std::string>{"3/04/2121"});
  const auto missing = check_missing(col, kMarkers);
  ASSERT_TRUE(missing);
  EXPECT_EQ(values(*missing), std::vector<std::string>{"null"});
}

TEST(CheckTemporal, CalendarValidation) {
  EXPECT_TRUE(check_temporal(column("d", {"2020-01-15"}), kMarkers, TypeKind::date, kConfig).empty());
  for (const char* bad : {"2021-02-30", "2021-13-01", "2021-00-10", "31/31/2001", "2020/01/15", "yesterday"}) {
    const auto out = check_temporal(column("d", {bad}), kMarkers, TypeKind::date, kConfig);
    EXPECT_EQ(kinds(out), std::vector<IssueKind>{IssueKind::wrong_data_type}) << bad;
  }
  EXPECT_TRUE(check_temporal(column("d", {"2024-02-29"}), kMarkers, TypeKind::date, kConfig).empty());
}

TEST(CheckTemporal, DateOrderLocksPerColumn) {
  const auto day_first = column("d", {"25/12/2001", "03/04/2005", "13/01/1999"});
  EXPECT_TRUE(check_temporal(day_first, kMarkers, TypeKind::date, kConfig).empty());
  const auto month_first = column("d", {"12/25/2001", "03/04/2005", "01/13/1999"});
  EXPECT_TRUE(check_temporal(month_first, kMarkers, TypeKind::date, kConfig).empty());
  const auto mixed = column("d", {"12/25/2001", "01/13/1999", "25/12/2001"});
  const auto out = check_temporal(mixed, kMarkers, TypeKind::date, kConfig);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(values(out[0]), std::vector<std::string>{"25/12/2001"});
}

TEST(CheckTemporal, PlausibilityWindow) {
  const auto out = check_temporal(column("d", {"1850-06-01", "2025-05-31", "2025-06-02", "1900-01-01"}), kMarkers,
                                  TypeKind::date, kConfig);
  EXPECT_EQ(kinds(out), (std::vector<IssueKind>{IssueKind::domain_violation, IssueKind::outdated_temporal_data}));
  EXPECT_EQ(values(out[0]), std::vector<std::string>{"2025-06-02"});
  EXPECT_EQ(values(out[1]), std::vector<std::string>{"1850-06-01"});
  EXPECT_EQ(out[1].dimensions, DimensionSet{Dimension::timeliness});
}

TEST(CheckTemporal, Datetime) {
  EXPECT_TRUE(check_temporal(column("t", {"2020-01-15 10:30", "15/01/2020 23:59:59", "2020-01-15T00:00:00"}),
                             kMarkers, TypeKind::datetime, kConfig)
                  .empty());
  const auto out = check_temporal(column("t", {"2020-01-15", "2020-01-15 24:00"}), kMarkers, TypeKind::datetime,
                                  kConfig);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].evidence.count, 2u);
}

TEST(CheckTemporal, TimeOfDay) {
  const auto out = check_temporal(column("t", {"25:00:00", "23:59", "9:05:07", "12:60", "7"}), kMarkers,
                                  TypeKind::time, kConfig);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(values(out[0]), (std::vector<std::string>{"25:00:00", "12:60", "7"}));
}

TEST(CheckTemporal, WeekdayNamesAndNumbers) {
  const auto out = check_temporal(column("w", {"Monday", "sun", "3", "8", "0", "someday"}), kMarkers,
                                  TypeKind::weekday, kConfig);
  EXPECT_EQ(kinds(out), (std::vector<IssueKind>{IssueKind::wrong_data_type, IssueKind::domain_violation}));
  EXPECT_EQ(values(out[0]), std::vector<std::string>{"someday"});
  EXPECT_EQ(values(out[1]), (std::vector<std::string>{"8", "0"}));
}

TEST(CheckTemporal, NumericMembersUseBounds) {
  const auto out = check_temporal(column("m", {"1", "12", "13", "0"}), kMarkers, TypeKind::month, kConfig);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(values(out[0]), (std::vector<std::string>{"13", "0"}));
  EXPECT_TRUE(check_temporal(column("h", {"0", "24"}), kMarkers, TypeKind::hour, kConfig).empty());
}

TEST(CheckSpecial, Examples) {
  const auto ip = check_special(column("ip", {"256.1.1.1", "10.0.0.1"}), kMarkers, T(TypeKind::ip));
  ASSERT_EQ(ip.size(), 1u);
  EXPECT_EQ(values(ip[0]), std::vector<std::string>{"256.1.1.1"});
  EXPECT_TRUE(check_special(column("u", {"https://uci.edu"}), kMarkers, T(TypeKind::url)).empty());
  const auto ph = check_special(column("ph", {"15.2", "7"}), kMarkers, T(TypeKind::ph));
  ASSERT_EQ(ph.size(), 1u);
  EXPECT_EQ(ph[0].issue, IssueKind::domain_violation);
}

TEST(CheckSpecial, PercentSign) {
  EXPECT_TRUE(check_special(column("p", {"45%", "100 %", "0"}), kMarkers, T(TypeKind::percentage)).empty());
  EXPECT_EQ(check_special(column("p", {"101%"}), kMarkers, T(TypeKind::percentage))[0].issue,
            IssueKind::domain_violation);
}

TEST(Syntax, Email) {
  EXPECT_TRUE(syntax::is_email("a.b@uci.edu"));
  for (const char* s : {"@uci.edu", "a@b", "a@@b.c", "a b@c.d", "plain"}) EXPECT_FALSE(syntax::is_email(s)) << s;
}

TEST(Syntax, Url) {
  EXPECT_TRUE(syntax::is_url("ftp://files.example.org/x"));
  EXPECT_TRUE(syntax::is_url("HTTP://a"));
  for (const char* s : {"https://", "mailto://x", "www.uci.edu", "http:/x"}) EXPECT_FALSE(syntax::is_url(s)) << s;
}

TEST(Syntax, Ipv4ByEnumeration) {
  for (int v = 0; v <= 300; ++v) {
    const auto s = "1.2.3." + std::to_string(v);
    EXPECT_EQ(syntax::is_ipv4(s), v <= 255) << s;
  }
  for (const char* s : {"1.2.3", "1.2.3.4.5", "1..2.3", "a.b.c.d", "1.2.3.4 "}) EXPECT_FALSE(syntax::is_ipv4(s)) << s;
}

TEST(Syntax, PhonePostalMoney) {
  EXPECT_TRUE(syntax::is_phone("+351 (21) 123-4567"));
  EXPECT_FALSE(syntax::is_phone("12345"));
  EXPECT_FALSE(syntax::is_phone("1234567890123456"));
  EXPECT_FALSE(syntax::is_phone("555-CALL-NOW"));
  EXPECT_TRUE(syntax::is_postal_code("1000-001"));
  EXPECT_TRUE(syntax::is_postal_code("SW1A 1AA"));
  EXPECT_FALSE(syntax::is_postal_code("12"));
  EXPECT_FALSE(syntax::is_postal_code("12#45"));
  EXPECT_EQ(syntax::parse_money("$12.50"), 12.5);
  EXPECT_EQ(syntax::parse_money("\xE2\x82\xAC" "3"), 3.0);
  EXPECT_EQ(syntax::parse_money("-7"), -7.0);
  EXPECT_FALSE(syntax::parse_money("$$3"));
  EXPECT_FALSE(syntax::parse_money("12 USD"));
}

TEST(StructuralConflicts, RaggedRows) {
  const auto ds = parse_dataset("a,b,c\n1,2,3\n4,5\n", "d", LoadOptions{.header = true});
  const auto out = detect_structural_conflicts(ds, kMarkers);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].issue, IssueKind::structural_conflicts);
  EXPECT_EQ(out[0].column, "");
  EXPECT_EQ(out[0].evidence.count, 1u);
  EXPECT_EQ(out[0].dimensions, (DimensionSet{Dimension::consistency, Dimension::uniqueness}));
}

TEST(StructuralConflicts, CleanRectangle) {
  Dataset ds;
  ds.columns.push_back(column("Age", {"1", "2"}, T(TypeKind::age)));
  ds.row_count = 2;
  EXPECT_TRUE(detect_structural_conflicts(ds, kMarkers).empty());
}

TEST(StructuralConflicts, MixedPopulations) {
  Dataset ds;
  ds.columns.push_back(column("Weight", {"1", "2", "heavy", "light"}, T(TypeKind::numerical_non_negative)));
  ds.columns.push_back(column("Notes", {"1", "2", "heavy", "light"}, T(TypeKind::string)));
  ds.columns.push_back(column("Score", {"1", "2", "3", "4", "5", "x"}, T(TypeKind::numerical)));
  ds.row_count = 4;
  const auto out = detect_structural_conflicts(ds, kMarkers);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].column, "Weight");
  EXPECT_EQ(values(out[0]), (std::vector<std::string>{"heavy", "light"}));
}

TEST(ValidateColumn, Dispatch) {
  const auto country = validate_column(column("Country", {"USA", "?", "Australia"}, T(TypeKind::country)), kMarkers,
                                       kConfig);
  EXPECT_EQ(kinds(country.issues), std::vector<IssueKind>{IssueKind::missing_data});

  const auto id = validate_column(column("Student ID", {"I345343", "J892932", "J892932"}, T(TypeKind::id)), kMarkers,
                                  kConfig);
  EXPECT_EQ(kinds(id.issues), (std::vector<IssueKind>{IssueKind::duplicates, IssueKind::uniqueness_violation}));

  const auto empty = validate_column(column("Age", {"?", "", "NA"}, T(TypeKind::age)), kMarkers, kConfig);
  EXPECT_EQ(kinds(empty.issues), std::vector<IssueKind>{IssueKind::missing_data});

  const auto unclassified = validate_column(column("X42", {"?", "oops"}), kMarkers, kConfig);
  EXPECT_EQ(kinds(unclassified.issues), std::vector<IssueKind>{IssueKind::missing_data});
  EXPECT_FALSE(unclassified.distribution);

  const auto cat = validate_column(column("Class", {"a", "b"}, T(TypeKind::categorical)), kMarkers, kConfig);
  EXPECT_TRUE(cat.distribution);
}

TEST(ValidateColumn, IsPureAndRepeatable) {
  const auto c = column("BirthDate", {"3/04/2121", "0/1/2010", "null"}, T(TypeKind::date));
  const auto copy = c;
  const auto a = validate_column(c, kMarkers, kConfig);
  const auto b = validate_column(c, kMarkers, kConfig);
  EXPECT_EQ(a, b);
  EXPECT_EQ(c, copy);
}

TEST(ValidateColumn, EvidenceIsCapped) {
  ColumnProfile c = column("Age", {}, T(TypeKind::age));
  for (int i = 0; i < 100; ++i) c.cells.push_back(std::to_string(1000 + i));
  const auto out = validate_column(c, kMarkers, kConfig);
  ASSERT_EQ(out.issues.size(), 1u);
  EXPECT_EQ(out.issues[0].evidence.count, 100u);
  EXPECT_EQ(out.issues[0].evidence.offending_values.size(), kMaxOffendingValues);
  EXPECT_EQ(out.issues[0].evidence.example_rows.size(), kMaxExampleRows);
}

TEST(ValidationConfig, LeapDayReference) {
  const auto c = ValidationConfig::for_reference_date(chr::year_month_day{chr::year{2024}, chr::February, chr::day{29}});
  EXPECT_TRUE(c.latest_date.ok());
  EXPECT_EQ(c.latest_date.year(), chr::year{2025});
}

}  // namespace
}  // namespace attrdq
