#include "attrdq/validation.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "attrdq/text.hpp"

namespace attrdq {

namespace chr = std::chrono;

namespace {

// Collects offending cells: counts every cell, keeps the first
// kMaxOffendingValues distinct values with full per-value counts.
class EvidenceBuilder {
 public:
  void add(std::string_view value, std::size_t row) {
    ++ev_.count;
    if (ev_.example_rows.size() < kMaxExampleRows) ev_.example_rows.push_back(row);
    if (auto it = index_.find(value); it != index_.end()) {
      ++ev_.offending_values[it->second].count;
      return;
    }
    if (ev_.offending_values.size() < kMaxOffendingValues) {
      index_.emplace(std::string(value), ev_.offending_values.size());
      ev_.offending_values.push_back(OffendingValue{std::string(value), 1});
    }
  }

  bool empty() const noexcept { return ev_.count == 0; }
  std::size_t count() const noexcept { return ev_.count; }
  Evidence take() { return std::move(ev_); }

 private:
  Evidence ev_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

void emit(std::vector<QualityIssue>& out, const ColumnProfile& column, IssueKind kind, EvidenceBuilder& b,
          std::string note) {
  if (!b.empty()) out.push_back(make_issue(column.name, kind, b.take(), std::move(note)));
}

std::string plural(std::size_t n, std::string_view word) {
  return std::to_string(n) + " " + std::string(word) + (n == 1 ? "" : "s");
}

std::string format_date(chr::year_month_day d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()), static_cast<unsigned>(d.month()),
                static_cast<unsigned>(d.day()));
  return buf;
}

std::string bounds_text(const Bounds& b) { return "[" + format_number(b.lo) + ", " + format_number(b.hi) + "]"; }

bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

std::string_view strip_percent(std::string_view s) {
  if (!s.empty() && s.back() == '%') return trim(s.substr(0, s.size() - 1));
  return s;
}

}  // namespace

QualityIssue make_issue(std::string column, IssueKind kind, Evidence evidence, std::string note) {
  return QualityIssue{std::move(column), kind, dimensions_of(kind), std::move(evidence), std::move(note)};
}

// ---------------------------------------------------------------------------
// Missing markers

MissingMarkerSet::MissingMarkerSet() : MissingMarkerSet(std::vector<std::string>{"?", "", "NA", "N/A", "null", "NaN"}) {}

MissingMarkerSet::MissingMarkerSet(std::span<const std::string> markers) {
  std::set<std::string> unique{""};
  for (const auto& m : markers) unique.insert(to_lower(trim(m)));
  markers_.assign(unique.begin(), unique.end());
}

MissingMarkerSet MissingMarkerSet::parse(std::string_view comma_separated) {
  std::vector<std::string> items;
  std::size_t start = 0;
  for (;;) {
    const auto comma = comma_separated.find(',', start);
    items.emplace_back(trim(comma_separated.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return MissingMarkerSet(items);
}

bool MissingMarkerSet::is_missing(std::string_view cell) const noexcept {
  const auto t = trim(cell);
  if (t.empty()) return true;
  return std::any_of(markers_.begin(), markers_.end(), [&](const std::string& m) { return iequals(m, t); });
}

// ---------------------------------------------------------------------------
// Configuration

chr::year_month_day one_year_from_today() {
  const chr::year_month_day today{chr::floor<chr::days>(chr::system_clock::now())};
  return ValidationConfig::for_reference_date(today).latest_date;
}

ValidationConfig ValidationConfig::for_reference_date(chr::year_month_day today) {
  ValidationConfig c{.latest_date = today};
  auto next = today + chr::years{1};
  // Feb 29 + 1 year rolls to Mar 1.
  if (!next.ok()) next = chr::year_month_day{chr::sys_days{next.year() / next.month() / chr::last} + chr::days{1}};
  c.latest_date = next;
  return c;
}

// ---------------------------------------------------------------------------
// Checks

std::optional<QualityIssue> check_missing(const ColumnProfile& column, const MissingMarkerSet& markers) {
  EvidenceBuilder b;
  for (std::size_t i = 0; i < column.cells.size(); ++i) {
    const auto cell = column.cells[i];
    if (markers.is_missing(cell)) b.add(trim(cell), i);
  }
  if (b.empty()) return std::nullopt;
  const auto n = b.count();
  return make_issue(column.name, IssueKind::missing_data, b.take(), plural(n, "missing cell"));
}

std::vector<QualityIssue> check_numerical(const ColumnProfile& column, const MissingMarkerSet& markers,
                                          bool non_negative, std::optional<Bounds> bounds, bool allow_percent_sign) {
  EvidenceBuilder wrong;
  EvidenceBuilder domain;
  for (std::size_t i = 0; i < column.cells.size(); ++i) {
    const auto cell = trim(column.cells[i]);
    if (markers.is_missing(cell)) continue;
    const auto v = parse_number(allow_percent_sign ? strip_percent(cell) : cell);
    if (!v) {
      wrong.add(cell, i);
      continue;
    }
    if ((non_negative && *v < 0) || (bounds && !bounds->contains(*v))) domain.add(cell, i);
  }
  std::vector<QualityIssue> out;
  emit(out, column, IssueKind::wrong_data_type, wrong, "non-numeric values in a numerical column");
  std::string rule = bounds ? "values outside " + bounds_text(*bounds) : "negative values";
  if (bounds && non_negative) rule = "negative values or values outside " + bounds_text(*bounds);
  emit(out, column, IssueKind::domain_violation, domain, rule);
  return out;
}

std::vector<QualityIssue> check_id(const ColumnProfile& column, const MissingMarkerSet& markers) {
  std::unordered_map<std::string_view, std::size_t> counts;
  counts.reserve(column.cells.size());
  std::size_t missing = 0;
  for (auto cell : column.cells) {
    if (markers.is_missing(cell)) {
      ++missing;
      continue;
    }
    ++counts[trim(cell)];
  }

  EvidenceBuilder dups;
  EvidenceBuilder blocking;
  for (std::size_t i = 0; i < column.cells.size(); ++i) {
    const auto cell = trim(column.cells[i]);
    if (markers.is_missing(cell)) {
      blocking.add(cell, i);
    } else if (counts[cell] >= 2) {
      dups.add(cell, i);
      blocking.add(cell, i);
    }
  }

  std::vector<QualityIssue> out;
  const std::size_t dup_cells = dups.count();
  emit(out, column, IssueKind::duplicates, dups, plural(dup_cells, "cell") + " share a duplicated identifier");
  if (!blocking.empty()) {
    emit(out, column, IssueKind::uniqueness_violation, blocking,
         "column cannot serve as a primary key (" + plural(dup_cells, "duplicated cell") + ", " +
             plural(missing, "missing cell") + ")");
  }
  return out;
}

std::vector<QualityIssue> check_string_content(const ColumnProfile& column, const MissingMarkerSet& markers,
                                               TypeKind format) {
  const bool capitalized = format == TypeKind::name || format == TypeKind::city || format == TypeKind::state ||
                           format == TypeKind::country || format == TypeKind::street;
  EvidenceBuilder numbers;
  EvidenceBuilder lowercase;
  for (std::size_t i = 0; i < column.cells.size(); ++i) {
    const auto cell = trim(column.cells[i]);
    if (markers.is_missing(cell)) continue;
    if (is_number(cell)) {
      numbers.add(cell, i);
      continue;
    }
    if (capitalized) {
      const auto first = std::find_if(cell.begin(), cell.end(), is_ascii_alpha);
      if (first != cell.end() && *first >= 'a' && *first <= 'z') lowercase.add(cell, i);
    }
  }
  std::vector<QualityIssue> out;
  emit(out, column, IssueKind::non_string_data_type, numbers, "numeric values in a text column");
  emit(out, column, IssueKind::wrong_data_type, lowercase, "improper capitalization");
  return out;
}

FrequencyDistribution frequency_distribution(const ColumnProfile& column, const MissingMarkerSet& markers) {
  std::unordered_map<std::string_view, std::size_t> counts;
  std::size_t total = 0;
  for (auto cell : column.cells) {
    if (markers.is_missing(cell)) continue;
    ++counts[trim(cell)];
    ++total;
  }
  FrequencyDistribution d;
  d.column = column.name;
  d.distinct_count = counts.size();
  d.entries.reserve(counts.size());
  for (const auto& [value, n] : counts) {
    d.entries.push_back(FrequencyEntry{std::string(value), n, static_cast<double>(n) / static_cast<double>(total)});
  }
  std::sort(d.entries.begin(), d.entries.end(), [](const FrequencyEntry& a, const FrequencyEntry& b) {
    return a.count != b.count ? a.count > b.count : a.value < b.value;
  });
  return d;
}

std::pair<FrequencyDistribution, std::vector<QualityIssue>> check_categorical(const ColumnProfile& column,
                                                                               const MissingMarkerSet& markers,
                                                                               TypeKind format,
                                                                               std::size_t max_categories) {
  auto dist = frequency_distribution(column, markers);
  std::vector<QualityIssue> issues;

  if (dist.distinct_count > max_categories) {
    Evidence ev;
    ev.count = dist.distinct_count;
    issues.push_back(make_issue(column.name, IssueKind::extraneous_data, std::move(ev),
                                std::to_string(dist.distinct_count) + " distinct categories exceed the limit of " +
                                    std::to_string(max_categories)));
  }

  if (format == TypeKind::binary && dist.distinct_count > 2) {
    // Keep the two most frequent values (earliest first on ties); the rest offend.
    std::unordered_map<std::string_view, std::pair<std::size_t, std::size_t>> seen;  // count, first row
    for (std::size_t i = 0; i < column.cells.size(); ++i) {
      const auto cell = column.cells[i];
      if (markers.is_missing(cell)) continue;
      auto [it, fresh] = seen.try_emplace(trim(cell), 0, i);
      ++it->second.first;
    }
    std::vector<std::pair<std::string_view, std::pair<std::size_t, std::size_t>>> ranked(seen.begin(), seen.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      return a.second.first != b.second.first ? a.second.first > b.second.first : a.second.second < b.second.second;
    });
    const std::unordered_set<std::string_view> kept{ranked[0].first, ranked[1].first};

    EvidenceBuilder b;
    for (std::size_t i = 0; i < column.cells.size(); ++i) {
      const auto cell = trim(column.cells[i]);
      if (markers.is_missing(cell) || kept.contains(cell)) continue;
      b.add(cell, i);
    }
    emit(issues, column, IssueKind::domain_violation, b,
         std::to_string(dist.distinct_count) + " distinct values in a binary column");
  }
  return {std::move(dist), std::move(issues)};
}

// ---------------------------------------------------------------------------
// Temporal

namespace syntax {

namespace {

// Parses 1..max_digits decimal digits.
std::optional<int> small_int(std::string_view s, std::size_t min_digits, std::size_t max_digits) {
  if (s.size() < min_digits || s.size() > max_digits || !is_all_digits(s)) return std::nullopt;
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

std::array<std::string_view, 3> split3(std::string_view s, char sep, bool& ok) {
  std::array<std::string_view, 3> parts;
  const auto a = s.find(sep);
  const auto b = a == std::string_view::npos ? a : s.find(sep, a + 1);
  ok = a != std::string_view::npos && b != std::string_view::npos && s.find(sep, b + 1) == std::string_view::npos;
  if (ok) parts = {s.substr(0, a), s.substr(a + 1, b - a - 1), s.substr(b + 1)};
  return parts;
}

}  // namespace

std::optional<DateParts> split_date(std::string_view s) noexcept {
  bool ok = false;
  if (auto p = split3(s, '-', ok); ok) {
    auto y = small_int(p[0], 4, 4);
    auto m = small_int(p[1], 1, 2);
    auto d = small_int(p[2], 1, 2);
    if (y && m && d) return DateParts{*y, *m, *d, true};
    return std::nullopt;
  }
  if (auto p = split3(s, '/', ok); ok) {
    auto a = small_int(p[0], 1, 2);
    auto b = small_int(p[1], 1, 2);
    auto y = small_int(p[2], 4, 4);
    if (a && b && y) return DateParts{*y, *a, *b, false};
  }
  return std::nullopt;
}

chr::year_month_day to_ymd(const DateParts& p, DateOrder order) noexcept {
  int month = p.first;
  int day = p.second;
  if (!p.iso && order == DateOrder::day_first) std::swap(month, day);
  return chr::year_month_day{chr::year{p.year}, chr::month{static_cast<unsigned>(month)},
                             chr::day{static_cast<unsigned>(day)}};
}

bool is_time_of_day(std::string_view s) noexcept {
  bool three = false;
  std::array<std::string_view, 3> parts = split3(s, ':', three);
  if (!three) {
    const auto colon = s.find(':');
    if (colon == std::string_view::npos || s.find(':', colon + 1) != std::string_view::npos) return false;
    parts = {s.substr(0, colon), s.substr(colon + 1), {}};
  }
  auto h = small_int(parts[0], 1, 2);
  auto m = small_int(parts[1], 2, 2);
  if (!h || !m || *h >= 24 || *m >= 60) return false;
  if (three) {
    auto sec = small_int(parts[2], 2, 2);
    if (!sec || *sec >= 60) return false;
  }
  return true;
}

bool is_weekday_name(std::string_view s) noexcept {
  static constexpr std::array<std::string_view, 17> kNames = {
      "monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday", "mon", "tue",
      "tues",   "wed",     "thu",       "thur",     "thurs",  "fri",      "sat",    "sun"};
  return std::any_of(kNames.begin(), kNames.end(), [&](std::string_view n) { return iequals(n, s); });
}

bool is_email(std::string_view s) noexcept {
  const auto at = s.find('@');
  if (at == std::string_view::npos || at == 0 || s.find('@', at + 1) != std::string_view::npos) return false;
  if (std::any_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; })) return false;
  const auto domain = s.substr(at + 1);
  return domain.find('.') != std::string_view::npos;
}

bool is_url(std::string_view s) noexcept {
  const auto sep = s.find("://");
  if (sep == std::string_view::npos) return false;
  const auto scheme = s.substr(0, sep);
  if (!iequals(scheme, "http") && !iequals(scheme, "https") && !iequals(scheme, "ftp")) return false;
  const auto rest = s.substr(sep + 3);
  const auto host = rest.substr(0, rest.find_first_of("/?#"));
  return !host.empty() && host.find(' ') == std::string_view::npos;
}

bool is_ipv4(std::string_view s) noexcept {
  int parts = 0;
  std::size_t start = 0;
  for (;;) {
    const auto dot = s.find('.', start);
    const auto octet = small_int(s.substr(start, dot == std::string_view::npos ? dot : dot - start), 1, 3);
    if (!octet || *octet > 255) return false;
    ++parts;
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return parts == 4;
}

bool is_phone(std::string_view s) noexcept {
  std::size_t digits = 0;
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      ++digits;
    } else if (c != '+' && c != '-' && c != '(' && c != ')' && c != ' ') {
      return false;
    }
  }
  return digits >= 7 && digits <= 15;
}

bool is_postal_code(std::string_view s) noexcept {
  if (s.empty() || s.front() == '-' || s.back() == '-' || s.front() == ' ' || s.back() == ' ') return false;
  std::size_t alnum = 0;
  for (char c : s) {
    if ((c >= '0' && c <= '9') || is_ascii_alpha(c)) {
      ++alnum;
    } else if (c != ' ' && c != '-') {
      return false;
    }
  }
  return alnum >= 3 && alnum <= 10;
}

std::optional<double> parse_money(std::string_view s) noexcept {
  static constexpr std::array<std::string_view, 7> kSymbols = {"$", "\xE2\x82\xAC", "\xC2\xA3", "\xC2\xA5",
                                                               "\xE2\x82\xB9", "\xE2\x82\xA9", "\xE2\x82\xBD"};
  for (auto sym : kSymbols) {
    if (s.starts_with(sym)) {
      s.remove_prefix(sym.size());
      s = trim(s);
      break;
    }
  }
  return parse_number(s);
}

}  // namespace syntax

namespace {

using syntax::DateOrder;

DateOrder lock_date_order(const ColumnProfile& column, const MissingMarkerSet& markers, std::size_t sample) {
  std::size_t day_first = 0;
  std::size_t month_first = 0;
  std::size_t seen = 0;
  for (std::size_t i = 0; i < column.cells.size() && seen < sample; ++i) {
    auto cell = trim(column.cells[i]);
    if (markers.is_missing(cell)) continue;
    ++seen;
    cell = cell.substr(0, cell.find_first_of(" T"));
    const auto parts = syntax::split_date(cell);
    if (!parts || parts->iso) continue;
    if (syntax::to_ymd(*parts, DateOrder::day_first).ok()) ++day_first;
    if (syntax::to_ymd(*parts, DateOrder::month_first).ok()) ++month_first;
  }
  return month_first > day_first ? DateOrder::month_first : DateOrder::day_first;
}

std::vector<QualityIssue> check_dates(const ColumnProfile& column, const MissingMarkerSet& markers, bool with_time,
                                      const ValidationConfig& config) {
  const DateOrder order = lock_date_order(column, markers, config.date_pattern_sample);
  EvidenceBuilder wrong;
  EvidenceBuilder future;
  EvidenceBuilder past;
  for (std::size_t i = 0; i < column.cells.size(); ++i) {
    const auto cell = trim(column.cells[i]);
    if (markers.is_missing(cell)) continue;
    std::string_view date_part = cell;
    if (with_time) {
      const auto sep = cell.find_first_of(" T");
      if (sep == std::string_view::npos || !syntax::is_time_of_day(trim(cell.substr(sep + 1)))) {
        wrong.add(cell, i);
        continue;
      }
      date_part = cell.substr(0, sep);
    }
    const auto parts = syntax::split_date(date_part);
    const auto ymd = parts ? syntax::to_ymd(*parts, order) : chr::year_month_day{};
    if (!parts || !ymd.ok()) {
      wrong.add(cell, i);
    } else if (chr::sys_days{ymd} > chr::sys_days{config.latest_date}) {
      future.add(cell, i);
    } else if (chr::sys_days{ymd} < chr::sys_days{config.earliest_date}) {
      past.add(cell, i);
    }
  }
  const std::string pattern = order == DateOrder::day_first ? "DD/MM/YYYY" : "MM/DD/YYYY";
  std::vector<QualityIssue> out;
  emit(out, column, IssueKind::wrong_data_type, wrong,
       "unparseable or impossible " + std::string(with_time ? "datetimes" : "dates") +
           " (accepted: YYYY-MM-DD, " + pattern + (with_time ? ", followed by HH:MM[:SS]" : "") + ")");
  emit(out, column, IssueKind::domain_violation, future, "dates after " + format_date(config.latest_date));
  emit(out, column, IssueKind::outdated_temporal_data, past, "dates before " + format_date(config.earliest_date));
  return out;
}

}  // namespace

std::vector<QualityIssue> check_temporal(const ColumnProfile& column, const MissingMarkerSet& markers,
                                         TypeKind format, const ValidationConfig& config) {
  switch (format) {
    case TypeKind::date:
      return check_dates(column, markers, false, config);
    case TypeKind::datetime:
      return check_dates(column, markers, true, config);
    case TypeKind::time: {
      EvidenceBuilder wrong;
      for (std::size_t i = 0; i < column.cells.size(); ++i) {
        const auto cell = trim(column.cells[i]);
        if (!markers.is_missing(cell) && !syntax::is_time_of_day(cell)) wrong.add(cell, i);
      }
      std::vector<QualityIssue> out;
      emit(out, column, IssueKind::wrong_data_type, wrong, "invalid times of day (expected HH:MM[:SS])");
      return out;
    }
    case TypeKind::weekday: {
      EvidenceBuilder wrong;
      EvidenceBuilder domain;
      for (std::size_t i = 0; i < column.cells.size(); ++i) {
        const auto cell = trim(column.cells[i]);
        if (markers.is_missing(cell) || syntax::is_weekday_name(cell)) continue;
        if (auto v = parse_number(cell)) {
          if (*v < 1 || *v > 7 || *v != static_cast<double>(static_cast<long long>(*v))) domain.add(cell, i);
        } else {
          wrong.add(cell, i);
        }
      }
      std::vector<QualityIssue> out;
      emit(out, column, IssueKind::wrong_data_type, wrong, "values that are neither day names nor numbers");
      emit(out, column, IssueKind::domain_violation, domain, "weekday numbers outside 1..7");
      return out;
    }
    default:
      return check_numerical(column, markers, false, bounds_of(format));
  }
}

std::vector<QualityIssue> check_special(const ColumnProfile& column, const MissingMarkerSet& markers,
                                        const SemanticType& type) {
  const TypeKind kind = type.kind();
  if (type.bounds()) return check_numerical(column, markers, false, type.bounds(), kind == TypeKind::percentage);

  bool (*valid)(std::string_view) noexcept = nullptr;
  std::string note;
  switch (kind) {
    case TypeKind::email:
      valid = syntax::is_email;
      note = "invalid e-mail addresses";
      break;
    case TypeKind::url:
      valid = syntax::is_url;
      note = "invalid URLs";
      break;
    case TypeKind::ip:
      valid = syntax::is_ipv4;
      note = "invalid IPv4 addresses";
      break;
    case TypeKind::phone:
      valid = syntax::is_phone;
      note = "invalid phone numbers (expected 7-15 digits)";
      break;
    case TypeKind::postal_code:
      valid = syntax::is_postal_code;
      note = "invalid postal codes";
      break;
    case TypeKind::money:
      valid = [](std::string_view s) noexcept { return syntax::parse_money(s).has_value(); };
      note = "invalid monetary amounts";
      break;
    default:
      return {};
  }
  EvidenceBuilder wrong;
  for (std::size_t i = 0; i < column.cells.size(); ++i) {
    const auto cell = trim(column.cells[i]);
    if (!markers.is_missing(cell) && !valid(cell)) wrong.add(cell, i);
  }
  std::vector<QualityIssue> out;
  emit(out, column, IssueKind::wrong_data_type, wrong, std::move(note));
  return out;
}

std::vector<QualityIssue> detect_structural_conflicts(const Dataset& dataset, const MissingMarkerSet& markers,
                                                      const ValidationConfig& config) {
  std::vector<QualityIssue> out;
  if (dataset.notes.total() > 0) {
    Evidence ev;
    ev.count = dataset.notes.total();
    ev.example_rows = dataset.notes.example_rows;
    out.push_back(make_issue({}, IssueKind::structural_conflicts, std::move(ev),
                             plural(dataset.notes.padded_rows, "short row") + " padded, " +
                                 plural(dataset.notes.overlong_rows, "long row") + " truncated"));
  }

  for (const auto& column : dataset.columns) {
    if (!column.analysis || !column.analysis->final_format) continue;
    const TypeKind kind = column.analysis->final_format->kind();
    if (!is_numerical_family(kind)) continue;
    EvidenceBuilder text;
    std::size_t present = 0;
    for (std::size_t i = 0; i < column.cells.size(); ++i) {
      const auto cell = trim(column.cells[i]);
      if (markers.is_missing(cell)) continue;
      ++present;
      if (!is_number(kind == TypeKind::percentage ? strip_percent(cell) : cell)) text.add(cell, i);
    }
    if (present == 0) continue;
    const double text_share = static_cast<double>(text.count()) / static_cast<double>(present);
    const double numeric_share = 1.0 - text_share;
    if (text_share > config.mixed_population_fraction && numeric_share > config.mixed_population_fraction) {
      const auto pct = [](double f) { return std::to_string(static_cast<int>(f * 100.0 + 0.5)) + "%"; };
      emit(out, column, IssueKind::structural_conflicts, text,
           "mixed numeric (" + pct(numeric_share) + ") and text (" + pct(text_share) + ") values");
    }
  }
  return out;
}

ColumnValidation validate_column(const ColumnProfile& column, const MissingMarkerSet& markers,
                                 const ValidationConfig& config) {
  ColumnValidation result;
  if (auto missing = check_missing(column, markers)) result.issues.push_back(std::move(*missing));
  if (!column.analysis || !column.analysis->final_format) return result;

  const SemanticType& type = *column.analysis->final_format;
  const TypeKind kind = type.kind();
  std::vector<QualityIssue> found;
  switch (kind) {
    case TypeKind::numerical:
      found = check_numerical(column, markers, false, std::nullopt);
      break;
    case TypeKind::numerical_non_negative:
      found = check_numerical(column, markers, true, std::nullopt);
      break;
    case TypeKind::age:
    case TypeKind::numerical_between:
      found = check_numerical(column, markers, false, type.bounds());
      break;
    case TypeKind::id:
      found = check_id(column, markers);
      break;
    case TypeKind::string:
    case TypeKind::name:
    case TypeKind::model_name:
    case TypeKind::city:
    case TypeKind::state:
    case TypeKind::country:
    case TypeKind::street:
      found = check_string_content(column, markers, kind);
      break;
    case TypeKind::categorical:
    case TypeKind::binary: {
      auto [dist, issues] = check_categorical(column, markers, kind, config.max_categories);
      result.distribution = std::move(dist);
      found = std::move(issues);
      break;
    }
    case TypeKind::date:
    case TypeKind::datetime:
    case TypeKind::time:
    case TypeKind::year:
    case TypeKind::month:
    case TypeKind::day:
    case TypeKind::hour:
    case TypeKind::weekday:
      found = check_temporal(column, markers, kind, config);
      break;
    case TypeKind::email:
    case TypeKind::url:
    case TypeKind::ip:
    case TypeKind::phone:
    case TypeKind::postal_code:
    case TypeKind::money:
    case TypeKind::latitude:
    case TypeKind::longitude:
    case TypeKind::ph:
    case TypeKind::percentage:
    case TypeKind::normalized:
      found = check_special(column, markers, type);
      break;
  }
  for (auto& issue : found) result.issues.push_back(std::move(issue));
  return result;
}

}  // namespace attrdq
