#pragma once

#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "attrdq/dictionaries.hpp"
#include "attrdq/label_analysis.hpp"

namespace attrdq {

class IngestionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Delimiter { comma, semicolon, whitespace };

std::string_view to_string(Delimiter d) noexcept;
std::optional<Delimiter> delimiter_from_name(std::string_view name) noexcept;

/// Append-only column of text cells packed into one buffer.
class CellColumn {
 public:
  class const_iterator {
   public:
    using iterator_category = std::random_access_iterator_tag;
    using value_type = std::string_view;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::string_view;

    const_iterator() = default;
    const_iterator(const CellColumn* col, std::size_t i) : col_(col), i_(i) {}
    std::string_view operator*() const { return (*col_)[i_]; }
    const_iterator& operator++() { ++i_; return *this; }
    const_iterator operator++(int) { auto t = *this; ++i_; return t; }
    const_iterator& operator--() { --i_; return *this; }
    const_iterator& operator+=(difference_type n) { i_ += n; return *this; }
    friend const_iterator operator+(const_iterator it, difference_type n) { return it += n; }
    friend difference_type operator-(const const_iterator& a, const const_iterator& b) {
      return static_cast<difference_type>(a.i_) - static_cast<difference_type>(b.i_);
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.i_ == b.i_; }

   private:
    const CellColumn* col_ = nullptr;
    std::size_t i_ = 0;
  };

  CellColumn() = default;
  CellColumn(std::initializer_list<std::string_view> cells);
  explicit CellColumn(std::span<const std::string> cells);

  void push_back(std::string_view cell);
  void reserve(std::size_t cells, std::size_t bytes);

  std::size_t size() const noexcept { return ends_.size(); }
  bool empty() const noexcept { return ends_.empty(); }
  std::string_view operator[](std::size_t i) const noexcept {
    const std::size_t begin = i == 0 ? 0 : ends_[i - 1];
    return std::string_view(data_).substr(begin, ends_[i] - begin);
  }
  const_iterator begin() const { return {this, 0}; }
  const_iterator end() const { return {this, size()}; }

  std::vector<std::string> to_vector() const;

  friend bool operator==(const CellColumn& a, const CellColumn& b) noexcept {
    return a.ends_ == b.ends_ && a.data_ == b.data_;
  }

 private:
  std::string data_;
  std::vector<std::size_t> ends_;
};

struct ColumnProfile {
  std::string name;
  std::optional<std::string> description;
  CellColumn cells;
  std::optional<LabelAnalysis> analysis;

  friend bool operator==(const ColumnProfile&, const ColumnProfile&) = default;
};

/// Shape repairs made while materializing rows.
struct StructuralNotes {
  std::size_t padded_rows = 0;    // rows shorter than the header, padded with ""
  std::size_t overlong_rows = 0;  // rows longer than the header, extra cells dropped
  std::vector<std::size_t> example_rows;  // up to 10 data-row indices

  std::size_t total() const noexcept { return padded_rows + overlong_rows; }
  friend bool operator==(const StructuralNotes&, const StructuralNotes&) = default;
};

struct Dataset {
  std::string source_name;
  std::vector<ColumnProfile> columns;
  std::size_t row_count = 0;
  Delimiter delimiter = Delimiter::comma;
  bool had_header = false;
  StructuralNotes notes;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

struct InputText {
  std::string source_name;  // file name, ".gz" stripped, "archive/member" for archives
  std::string text;         // UTF-8, invalid bytes replaced
};

inline constexpr std::size_t kSniffLines = 20;

/// Reads a .txt/.csv/.data file, optionally inside .gz, .zip or .tar.gz.
/// Zip and tar.gz inputs need `inner` to pick the member.
InputText open_input(const std::string& path, const std::optional<std::string>& inner = std::nullopt);

/// Chooses comma or semicolon when its modal field count (>= 2) is shared by
/// a majority of the sample lines, preferring the candidate that matches
/// more lines (comma on ties); otherwise whitespace. Blank lines are ignored.
Delimiter detect_delimiter(std::span<const std::string_view> sample);
Delimiter detect_delimiter(std::span<const std::string> sample);

/// Splits one physical line. Comma/semicolon honour double-quoted fields;
/// whitespace splits on runs of blanks. Cells are trimmed and unquoted.
std::vector<std::string> split_line(std::string_view line, Delimiter delim);

/// Heuristic header test. `dictionary` may be null.
bool detect_header(std::span<const std::string> first_row, std::span<const std::vector<std::string>> sample_rows,
                   const FormatsDictionary* dictionary = nullptr);

struct LoadOptions {
  std::optional<Delimiter> delimiter{};
  std::optional<bool> header{};
  std::optional<std::string> inner{};
  const FormatsDictionary* dictionary = nullptr;  // used by header detection
};

Dataset parse_dataset(std::string_view text, std::string source_name, const LoadOptions& options = {});
Dataset load_dataset(const std::string& path, const LoadOptions& options = {});

/// Writes header (when the dataset had one) and rows back with its delimiter.
std::string write_delimited(const Dataset& dataset);

}  // namespace attrdq
