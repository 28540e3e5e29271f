#include "attrdq/ingestion.hpp"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "attrdq/archive.hpp"
#include "attrdq/text.hpp"

namespace attrdq {

namespace fs = std::filesystem;

std::string_view to_string(Delimiter d) noexcept {
  switch (d) {
    case Delimiter::comma:
      return "comma";
    case Delimiter::semicolon:
      return "semicolon";
    case Delimiter::whitespace:
      return "whitespace";
  }
  return "comma";
}

std::optional<Delimiter> delimiter_from_name(std::string_view name) noexcept {
  if (name == "comma" || name == ",") return Delimiter::comma;
  if (name == "semicolon" || name == ";") return Delimiter::semicolon;
  if (name == "whitespace" || name == "space" || name == "blank") return Delimiter::whitespace;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// CellColumn

CellColumn::CellColumn(std::initializer_list<std::string_view> cells) {
  for (auto c : cells) push_back(c);
}

CellColumn::CellColumn(std::span<const std::string> cells) {
  for (const auto& c : cells) push_back(c);
}

void CellColumn::push_back(std::string_view cell) {
  data_.append(cell);
  ends_.push_back(data_.size());
}

void CellColumn::reserve(std::size_t cells, std::size_t bytes) {
  ends_.reserve(cells);
  data_.reserve(bytes);
}

std::vector<std::string> CellColumn::to_vector() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (auto c : *this) out.emplace_back(c);
  return out;
}

// ---------------------------------------------------------------------------
// Input

namespace {

const std::set<std::string, std::less<>> kDataExtensions = {".txt", ".csv", ".data"};

std::string lower_name(const fs::path& p) { return to_lower(p.filename().string()); }

std::string extension_of(std::string_view name) {
  const auto base = name.substr(name.find_last_of('/') == std::string_view::npos ? 0 : name.find_last_of('/') + 1);
  const auto dot = base.find_last_of('.');
  return dot == std::string_view::npos ? std::string() : to_lower(base.substr(dot));
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestionError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

template <typename Extract>
InputText pick_member(const std::string& archive_name, const std::vector<ArchiveMember>& members,
                      const std::optional<std::string>& inner, Extract&& extract) {
  std::vector<std::string> candidates;
  for (const auto& m : members) {
    if (kDataExtensions.contains(extension_of(m.name))) candidates.push_back(m.name);
  }
  if (candidates.empty()) {
    throw IngestionError("archive '" + archive_name + "' contains no .txt, .csv or .data member");
  }
  if (!inner) {
    std::string list;
    for (const auto& c : candidates) list += (list.empty() ? "" : ", ") + c;
    throw IngestionError("archive '" + archive_name + "' needs a member to analyse (--inner); members: " + list);
  }
  const auto ext = extension_of(*inner);
  if (!kDataExtensions.contains(ext)) {
    throw IngestionError("unsupported format for member '" + *inner + "' (expected .txt, .csv or .data)");
  }
  try {
    return InputText{archive_name + "/" + *inner, extract(*inner)};
  } catch (const ArchiveError& e) {
    throw IngestionError(e.what());
  }
}

}  // namespace

InputText open_input(const std::string& path, const std::optional<std::string>& inner) {
  const fs::path p(path);
  std::error_code ec;
  if (!fs::exists(p, ec)) throw IngestionError("no such file: '" + path + "'");
  if (fs::is_directory(p, ec)) throw IngestionError("'" + path + "' is a directory");

  const std::string name = lower_name(p);
  const std::string display = p.filename().string();
  auto ends = [&](std::string_view suffix) { return name.ends_with(suffix); };

  if (ends(".xls") || ends(".xlsx")) {
    throw IngestionError("unsupported format: '" + display + "' (spreadsheets are not parsed; export to .csv)");
  }

  try {
    if (ends(".tar.gz") || ends(".tgz")) {
      const std::string tar = gunzip(read_file(p));
      auto in = pick_member(display, list_tar(tar), inner,
                            [&](const std::string& m) { return extract_tar(tar, m); });
      in.text = sanitize_utf8(in.text);
      return in;
    }
    if (ends(".zip")) {
      const std::string zip = read_file(p);
      auto in = pick_member(display, list_zip(zip), inner,
                            [&](const std::string& m) { return extract_zip(zip, m); });
      in.text = sanitize_utf8(in.text);
      return in;
    }
    if (ends(".gz")) {
      return InputText{display.substr(0, display.size() - 3), sanitize_utf8(gunzip(read_file(p)))};
    }
  } catch (const ArchiveError& e) {
    throw IngestionError("'" + display + "': " + e.what());
  }
  return InputText{display, sanitize_utf8(read_file(p))};
}

// ---------------------------------------------------------------------------
// Record splitting

namespace {

char delimiter_char(Delimiter d) { return d == Delimiter::semicolon ? ';' : ','; }

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::string_view strip_quotes(std::string_view cell) {
  if (cell.size() >= 2 && cell.front() == '"' && cell.back() == '"') return trim(cell.substr(1, cell.size() - 2));
  return cell;
}

/// Reads the next record starting at `pos`. Returns false at end of input.
/// Blank lines are skipped.
class RecordReader {
 public:
  RecordReader(std::string_view text, Delimiter delim) : text_(text), delim_(delim) {}

  bool next(std::vector<std::string>& fields) {
    while (pos_ < text_.size()) {
      fields.clear();
      const bool content = delim_ == Delimiter::whitespace ? read_blank_separated(fields) : read_quoted(fields);
      if (content) return true;
    }
    return false;
  }

  std::size_t position() const noexcept { return pos_; }

 private:
  bool read_blank_separated(std::vector<std::string>& fields) {
    auto eol = text_.find('\n', pos_);
    if (eol == std::string_view::npos) eol = text_.size();
    const std::string_view line = text_.substr(pos_, eol - pos_);
    pos_ = eol + 1;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_blank(line[i])) ++i;
      const std::size_t start = i;
      while (i < line.size() && !is_blank(line[i])) ++i;
      if (i > start) fields.emplace_back(strip_quotes(line.substr(start, i - start)));
    }
    return !fields.empty();
  }

  bool read_quoted(std::vector<std::string>& fields) {
    const char d = delimiter_char(delim_);
    const std::size_t n = text_.size();
    bool quoted_any = false;
    for (;;) {
      std::string cell;
      while (pos_ < n && is_blank(text_[pos_])) ++pos_;
      if (pos_ < n && text_[pos_] == '"') {
        quoted_any = true;
        ++pos_;
        while (pos_ < n) {
          const char c = text_[pos_];
          if (c == '"') {
            if (pos_ + 1 < n && text_[pos_ + 1] == '"') {
              cell.push_back('"');
              pos_ += 2;
              continue;
            }
            ++pos_;
            break;
          }
          cell.push_back(c);
          ++pos_;
        }
      }
      const std::size_t start = pos_;
      while (pos_ < n && text_[pos_] != d && text_[pos_] != '\n') ++pos_;
      cell.append(text_.substr(start, pos_ - start));
      fields.emplace_back(trim(cell));
      if (pos_ < n && text_[pos_] == d) {
        ++pos_;
        continue;
      }
      ++pos_;  // newline or end of input
      break;
    }
    return quoted_any || fields.size() > 1 || !fields.front().empty();
  }

  std::string_view text_;
  Delimiter delim_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> split_line(std::string_view line, Delimiter delim) {
  std::vector<std::string> fields;
  RecordReader reader(line, delim);
  reader.next(fields);
  return fields;
}

Delimiter detect_delimiter(std::span<const std::string_view> sample) {
  std::vector<std::string_view> lines;
  for (auto l : sample) {
    if (!trim(l).empty()) lines.push_back(l);
  }
  if (lines.empty()) throw IngestionError("cannot detect delimiter: empty sample");

  std::size_t best_score = 0;
  std::optional<Delimiter> best;
  for (Delimiter cand : {Delimiter::comma, Delimiter::semicolon}) {
    std::map<std::size_t, std::size_t> freq;
    for (auto l : lines) {
      const std::size_t fields = split_line(l, cand).size();
      if (fields >= 2) ++freq[fields];
    }
    std::size_t score = 0;
    for (const auto& [count, n] : freq) score = std::max(score, n);
    if (score * 2 > lines.size() && score > best_score) {
      best_score = score;
      best = cand;
    }
  }
  return best.value_or(Delimiter::whitespace);
}

Delimiter detect_delimiter(std::span<const std::string> sample) {
  std::vector<std::string_view> views(sample.begin(), sample.end());
  return detect_delimiter(std::span<const std::string_view>(views));
}

bool detect_header(std::span<const std::string> first_row, std::span<const std::vector<std::string>> sample_rows,
                   const FormatsDictionary* dictionary) {
  if (sample_rows.empty() || first_row.empty()) return false;

  if (dictionary) {
    for (const auto& cell : first_row) {
      if (is_number(cell)) continue;
      const auto tokens = tokenize(cell);
      if (tokens.empty()) continue;
      std::string phrase;
      for (const auto& t : tokens) phrase += (phrase.empty() ? "" : " ") + t;
      if (dictionary->position_of(phrase)) return true;
    }
  }

  if (std::any_of(first_row.begin(), first_row.end(), [](const std::string& c) { return is_number(c); })) {
    return false;
  }
  for (std::size_t j = 0; j < first_row.size(); ++j) {
    std::size_t numeric = 0;
    std::size_t present = 0;
    for (const auto& row : sample_rows) {
      if (j >= row.size() || row[j].empty()) continue;
      ++present;
      if (is_number(row[j])) ++numeric;
    }
    if (present > 0 && numeric * 2 > present) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Dataset materialization

namespace {

std::vector<std::string_view> sniff_lines(std::string_view text, std::size_t limit) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size() && lines.size() < limit) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = text.substr(pos, eol - pos);
    if (!trim(line).empty()) lines.push_back(line);
    pos = eol + 1;
  }
  return lines;
}

std::vector<std::string> unique_names(const std::vector<std::string>& raw) {
  std::vector<std::string> names;
  std::set<std::string, std::less<>> used;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::string base = raw[i].empty() ? "col_" + std::to_string(i + 1) : raw[i];
    std::string name = base;
    for (std::size_t k = 2; used.contains(name); ++k) name = base + "_" + std::to_string(k);
    used.insert(name);
    names.push_back(std::move(name));
  }
  return names;
}

}  // namespace

Dataset parse_dataset(std::string_view text, std::string source_name, const LoadOptions& options) {
  // Skip a UTF-8 byte order mark.
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  const auto sample = sniff_lines(text, kSniffLines);
  if (sample.empty()) throw IngestionError("'" + source_name + "': no data rows");

  Dataset ds;
  ds.source_name = std::move(source_name);
  ds.delimiter = options.delimiter.value_or(Delimiter::comma);
  if (!options.delimiter) ds.delimiter = detect_delimiter(std::span<const std::string_view>(sample));

  RecordReader reader(text, ds.delimiter);
  std::vector<std::string> first;
  if (!reader.next(first)) throw IngestionError("'" + ds.source_name + "': no data rows");

  std::vector<std::vector<std::string>> lookahead;
  std::vector<std::string> fields;
  while (lookahead.size() < kSniffLines && reader.next(fields)) lookahead.push_back(fields);

  ds.had_header = options.header.has_value() ? *options.header
                                             : detect_header(first, lookahead, options.dictionary);

  const std::size_t width = first.size();
  std::vector<std::string> names;
  if (ds.had_header) {
    names = unique_names(first);
  } else {
    for (std::size_t i = 0; i < width; ++i) names.push_back("col_" + std::to_string(i + 1));
  }

  const auto newlines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
  ds.columns.resize(width);
  for (std::size_t j = 0; j < width; ++j) {
    ds.columns[j].name = std::move(names[j]);
    ds.columns[j].cells.reserve(newlines, text.size() / std::max<std::size_t>(width, 1));
  }

  auto append = [&](const std::vector<std::string>& row) {
    const std::size_t index = ds.row_count++;
    if (row.size() != width) {
      (row.size() < width ? ds.notes.padded_rows : ds.notes.overlong_rows)++;
      if (ds.notes.example_rows.size() < 10) ds.notes.example_rows.push_back(index);
    }
    for (std::size_t j = 0; j < width; ++j) ds.columns[j].cells.push_back(j < row.size() ? row[j] : "");
  };

  if (!ds.had_header) append(first);
  for (const auto& row : lookahead) append(row);
  while (reader.next(fields)) append(fields);

  if (ds.row_count == 0) throw IngestionError("'" + ds.source_name + "': no data rows");
  return ds;
}

Dataset load_dataset(const std::string& path, const LoadOptions& options) {
  auto input = open_input(path, options.inner);
  return parse_dataset(input.text, std::move(input.source_name), options);
}

std::string write_delimited(const Dataset& dataset) {
  const bool whitespace = dataset.delimiter == Delimiter::whitespace;
  const char d = whitespace ? ' ' : delimiter_char(dataset.delimiter);
  const std::size_t width = dataset.columns.size();

  std::string out;
  auto put = [&](std::string_view cell) {
    const bool needs_quotes =
        !whitespace && (cell.find_first_of(std::string{d, '"', '\n', '\r'}) != std::string_view::npos ||
                        (width == 1 && cell.empty()));
    if (!needs_quotes) {
      out.append(cell);
      return;
    }
    out.push_back('"');
    for (char c : cell) {
      if (c == '"') out.push_back('"');
      out.push_back(c);
    }
    out.push_back('"');
  };
  auto row = [&](auto&& cell_at) {
    for (std::size_t j = 0; j < width; ++j) {
      if (j) out.push_back(d);
      put(cell_at(j));
    }
    out.push_back('\n');
  };

  if (dataset.had_header) row([&](std::size_t j) { return std::string_view(dataset.columns[j].name); });
  for (std::size_t i = 0; i < dataset.row_count; ++i) row([&](std::size_t j) { return dataset.columns[j].cells[i]; });
  return out;
}

}  // namespace attrdq
