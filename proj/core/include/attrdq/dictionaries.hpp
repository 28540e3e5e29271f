#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "attrdq/semantic_model.hpp"

namespace attrdq {

/// Raised by the dictionary loaders; `line()` is 1-based.
class DictionaryError : public std::runtime_error {
 public:
  DictionaryError(std::size_t line, const std::string& detail, const std::string& source = {})
      : std::runtime_error((source.empty() ? "line " : source + ":") + std::to_string(line) + ": " + detail),
        line_(line),
        detail_(detail) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

struct FormatEntry {
  std::string keyword;              // normalized: tokens joined by single spaces
  std::vector<std::string> tokens;  // tokenized keyword
  SemanticType type;
};

struct KeywordMatch {
  SemanticType type;
  std::string keyword;
  std::size_t position = 0;  // rank among entries, 0-based
};

/// Ordered keyword -> semantic type map. Keywords are unique; entry order
/// is the order of the source file.
class FormatsDictionary {
 public:
  FormatsDictionary() = default;

  /// Throws DictionaryError on duplicate keywords (after normalization).
  void add(std::string_view keyword, SemanticType type, std::size_t source_line = 0);

  const std::vector<FormatEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t max_keyword_tokens() const noexcept { return max_tokens_; }

  /// Exact keyword lookup on a normalized phrase ("birth date").
  std::optional<std::size_t> position_of(std::string_view normalized_keyword) const;

  /// Among every keyword occurring in `phrase` as a contiguous token run,
  /// picks the one with the most tokens, then the earliest position.
  std::optional<KeywordMatch> lookup(std::span<const std::string> phrase) const;

 private:
  std::vector<FormatEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t max_tokens_ = 0;
};

/// Abbreviation -> expansion tokens.
class AbbreviationsDictionary {
 public:
  AbbreviationsDictionary() = default;

  /// Throws DictionaryError on duplicates, empty expansions and self-mappings.
  void add(std::string_view abbreviation, std::string_view expansion, std::size_t source_line = 0);

  const std::vector<std::string>* find(std::string_view abbreviation) const;
  std::size_t size() const noexcept { return order_.size(); }
  bool empty() const noexcept { return order_.empty(); }
  /// Abbreviations in load order.
  const std::vector<std::string>& abbreviations() const noexcept { return order_; }

 private:
  std::unordered_map<std::string, std::vector<std::string>> map_;
  std::vector<std::string> order_;
};

// File grammar for both dictionaries: one `key<TAB>value` entry per line,
// blank lines and lines starting with '#' ignored.
FormatsDictionary load_formats_dictionary(std::istream& in);
AbbreviationsDictionary load_abbreviations_dictionary(std::istream& in);
FormatsDictionary load_formats_dictionary_file(const std::string& path);
AbbreviationsDictionary load_abbreviations_dictionary_file(const std::string& path);

void write_formats_dictionary(std::ostream& out, const FormatsDictionary& dict);
void write_abbreviations_dictionary(std::ostream& out, const AbbreviationsDictionary& dict);

struct FormatFrequency {
  std::string label;
  std::size_t frequency = 0;
  double percentage = 0.0;  // rounded to hundredths; rows sum to exactly 100
};

/// Per-type keyword counts, sorted by frequency descending then label.
std::vector<FormatFrequency> format_frequencies(const FormatsDictionary& dict);

}  // namespace attrdq
