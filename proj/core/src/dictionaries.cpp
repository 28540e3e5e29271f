#include "attrdq/dictionaries.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "attrdq/label_analysis.hpp"
#include "attrdq/text.hpp"

namespace attrdq {

namespace {

std::string join(std::span<const std::string> tokens, std::size_t first, std::size_t count) {
  std::string out;
  for (std::size_t i = first; i < first + count; ++i) {
    if (i != first) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::string join(std::span<const std::string> tokens) { return join(tokens, 0, tokens.size()); }

struct TsvLine {
  std::size_t number;
  std::string key;
  std::string value;
};

// Calls fn(TsvLine) for every entry line.
template <typename Fn>
void for_each_entry(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tab = body.find('\t');
    if (tab == std::string_view::npos) {
      throw DictionaryError(number, "expected '<key><TAB><value>', got '" + std::string(body) + "'");
    }
    fn(TsvLine{number, std::string(trim(body.substr(0, tab))), std::string(trim(body.substr(tab + 1)))});
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dictionary file '" + path + "'");
  return in;
}

}  // namespace

// ---------------------------------------------------------------------------

void FormatsDictionary::add(std::string_view keyword, SemanticType type, std::size_t source_line) {
  auto tokens = tokenize(keyword);
  if (tokens.empty()) throw DictionaryError(source_line, "empty keyword");
  std::string normalized = join(tokens);
  if (auto it = index_.find(normalized); it != index_.end()) {
    throw DictionaryError(source_line, "duplicate keyword '" + normalized + "' (first defined as entry " +
                                           std::to_string(it->second + 1) + ")");
  }
  index_.emplace(normalized, entries_.size());
  max_tokens_ = std::max(max_tokens_, tokens.size());
  entries_.push_back(FormatEntry{std::move(normalized), std::move(tokens), std::move(type)});
}

std::optional<std::size_t> FormatsDictionary::position_of(std::string_view normalized_keyword) const {
  if (auto it = index_.find(std::string(normalized_keyword)); it != index_.end()) return it->second;
  return std::nullopt;
}

std::optional<KeywordMatch> FormatsDictionary::lookup(std::span<const std::string> phrase) const {
  std::optional<std::size_t> best;
  std::size_t best_len = 0;
  for (std::size_t start = 0; start < phrase.size(); ++start) {
    const std::size_t longest = std::min(max_tokens_, phrase.size() - start);
    // Only lengths >= best_len can win.
    for (std::size_t len = longest; len >= std::max<std::size_t>(best_len, 1); --len) {
      auto pos = position_of(join(phrase, start, len));
      if (!pos) continue;
      if (len > best_len || *pos < *best) {
        best = pos;
        best_len = len;
      }
      break;
    }
  }
  if (!best) return std::nullopt;
  const auto& e = entries_[*best];
  return KeywordMatch{e.type, e.keyword, *best};
}

// ---------------------------------------------------------------------------

void AbbreviationsDictionary::add(std::string_view abbreviation, std::string_view expansion,
                                  std::size_t source_line) {
  auto key_tokens = tokenize(abbreviation);
  if (key_tokens.size() != 1) {
    throw DictionaryError(source_line, "abbreviation '" + std::string(abbreviation) + "' must be a single token");
  }
  auto exp_tokens = tokenize(expansion);
  if (exp_tokens.empty()) {
    throw DictionaryError(source_line, "empty expansion for abbreviation '" + key_tokens.front() + "'");
  }
  if (exp_tokens.size() == 1 && exp_tokens.front() == key_tokens.front()) {
    throw DictionaryError(source_line, "abbreviation '" + key_tokens.front() + "' maps to itself");
  }
  if (map_.contains(key_tokens.front())) {
    throw DictionaryError(source_line, "duplicate abbreviation '" + key_tokens.front() + "'");
  }
  order_.push_back(key_tokens.front());
  map_.emplace(std::move(key_tokens.front()), std::move(exp_tokens));
}

const std::vector<std::string>* AbbreviationsDictionary::find(std::string_view abbreviation) const {
  if (auto it = map_.find(std::string(abbreviation)); it != map_.end()) return &it->second;
  return nullptr;
}

// ---------------------------------------------------------------------------

FormatsDictionary load_formats_dictionary(std::istream& in) {
  FormatsDictionary dict;
  for_each_entry(in, [&](const TsvLine& l) {
    SemanticType type = SemanticType::of(TypeKind::string);
    try {
      type = parse_semantic_type(l.value);
    } catch (const TypeError& e) {
      throw DictionaryError(l.number, e.what());
    }
    dict.add(l.key, std::move(type), l.number);
  });
  return dict;
}

AbbreviationsDictionary load_abbreviations_dictionary(std::istream& in) {
  AbbreviationsDictionary dict;
  for_each_entry(in, [&](const TsvLine& l) { dict.add(l.key, l.value, l.number); });
  return dict;
}

FormatsDictionary load_formats_dictionary_file(const std::string& path) {
  auto in = open_or_throw(path);
  try {
    return load_formats_dictionary(in);
  } catch (const DictionaryError& e) {
    throw DictionaryError(e.line(), e.detail(), path);
  }
}

AbbreviationsDictionary load_abbreviations_dictionary_file(const std::string& path) {
  auto in = open_or_throw(path);
  try {
    return load_abbreviations_dictionary(in);
  } catch (const DictionaryError& e) {
    throw DictionaryError(e.line(), e.detail(), path);
  }
}

void write_formats_dictionary(std::ostream& out, const FormatsDictionary& dict) {
  for (const auto& e : dict.entries()) out << e.keyword << '\t' << e.type.label() << '\n';
}

void write_abbreviations_dictionary(std::ostream& out, const AbbreviationsDictionary& dict) {
  for (const auto& abbr : dict.abbreviations()) out << abbr << '\t' << join(*dict.find(abbr)) << '\n';
}

std::vector<FormatFrequency> format_frequencies(const FormatsDictionary& dict) {
  std::map<std::string, std::size_t> counts;
  for (const auto& e : dict.entries()) ++counts[e.type.label()];

  std::vector<FormatFrequency> rows;
  rows.reserve(counts.size());
  for (auto& [label, n] : counts) rows.push_back(FormatFrequency{label, n, 0.0});
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.frequency > b.frequency; });
  if (rows.empty()) return rows;

  // Largest-remainder rounding to hundredths of a percent, computed in
  // integer units so the column sums to exactly 100.00.
  const std::size_t total = dict.size();
  std::vector<std::size_t> units(rows.size());
  std::vector<std::pair<std::size_t, std::size_t>> remainders;  // (remainder numerator, row)
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t scaled = rows[i].frequency * 10000;
    units[i] = scaled / total;
    assigned += units[i];
    remainders.emplace_back(scaled % total, i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < 10000; ++k, ++assigned) ++units[remainders[k].second];
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].percentage = static_cast<double>(units[i]) / 100.0;
  return rows;
}

}  // namespace attrdq
