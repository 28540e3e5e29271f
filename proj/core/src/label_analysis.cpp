#include "attrdq/label_analysis.hpp"

#include <algorithm>

#include "attrdq/text.hpp"

namespace attrdq {

namespace {

bool is_separator(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v' || c == '_' || c == '-' ||
         c == '.' || c == '/';
}
bool is_lower(char c) noexcept { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) noexcept { return c >= 'A' && c <= 'Z'; }
bool is_alnum(char c) noexcept { return is_lower(c) || is_upper(c) || (c >= '0' && c <= '9'); }

bool has_id_token(std::span<const std::string> tokens) {
  return std::any_of(tokens.begin(), tokens.end(), [](const std::string& t) { return t == "id"; });
}

std::vector<std::string> matchable(std::span<const std::string> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!is_all_digits(t)) out.push_back(t);
  }
  return out;
}

}  // namespace

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::from_name:
      return "from_name";
    case Provenance::from_description:
      return "from_description";
    case Provenance::from_abbreviation:
      return "from_abbreviation";
    case Provenance::id_rule:
      return "id_rule";
    case Provenance::unclassified:
      return "unclassified";
  }
  return "unclassified";
}

std::optional<Provenance> provenance_from_name(std::string_view name) noexcept {
  for (auto p : {Provenance::from_name, Provenance::from_description, Provenance::from_abbreviation,
                 Provenance::id_rule, Provenance::unclassified}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

std::string LabelAnalysis::format_name() const {
  return final_format ? std::string(final_format->name()) : std::string("NaN");
}

std::string LabelAnalysis::format_label() const { return final_format ? final_format->label() : "NaN"; }

std::vector<std::string> tokenize(std::string_view header) {
  std::vector<std::string> tokens;
  std::string current;
  char prev = '\0';  // last alphanumeric byte kept in `current`
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
    prev = '\0';
  };
  for (char c : header) {
    if (is_separator(c)) {
      flush();
      continue;
    }
    if (!is_alnum(c)) continue;
    // "pH", "eMail": a single leading lowercase letter stays attached.
    if (is_upper(c) && is_lower(prev) && current.size() > 1) flush();
    current.push_back(is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c);
    prev = c;
  }
  flush();
  return tokens;
}

std::vector<std::string> expand_abbreviations(std::span<const std::string> tokens,
                                              const AbbreviationsDictionary& abbr) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (const auto* expansion = abbr.find(t)) {
      out.insert(out.end(), expansion->begin(), expansion->end());
    } else {
      out.push_back(t);
    }
  }
  return out;
}

std::optional<SemanticType> identify_format(std::span<const std::string> tokens, const FormatsDictionary& dict) {
  const auto words = matchable(tokens);
  if (has_id_token(words)) return SemanticType::of(TypeKind::id);
  if (auto m = dict.lookup(words)) return m->type;
  return std::nullopt;
}

bool is_generic(const SemanticType& t) noexcept {
  return t.kind() == TypeKind::string || t.kind() == TypeKind::numerical;
}

bool is_specific(const SemanticType& t) noexcept {
  const TypeKind k = t.kind();
  return is_bounded(k) || k == TypeKind::id || k == TypeKind::name || is_temporal(k) || is_geographical(k) ||
         is_special_syntax(k);
}

std::optional<SemanticType> resolve_format(const std::optional<SemanticType>& name_fmt,
                                           const std::optional<SemanticType>& desc_fmt) {
  if (name_fmt) {
    if (is_generic(*name_fmt) && desc_fmt && is_specific(*desc_fmt)) return desc_fmt;
    return name_fmt;
  }
  return desc_fmt;
}

LabelAnalysis analyze_label(std::string_view header, std::optional<std::string_view> description,
                            const FormatsDictionary& fmts, const AbbreviationsDictionary& abbr) {
  LabelAnalysis a;
  a.original_header = std::string(header);
  a.tokens = tokenize(header);
  a.expanded_tokens = expand_abbreviations(a.tokens, abbr);
  a.name_format = identify_format(a.expanded_tokens, fmts);

  std::vector<std::string> desc_tokens;
  if (description && (!a.name_format || is_generic(*a.name_format))) {
    desc_tokens = expand_abbreviations(tokenize(*description), abbr);
    a.description_format = identify_format(desc_tokens, fmts);
  }
  a.final_format = resolve_format(a.name_format, a.description_format);

  if (!a.final_format) {
    a.provenance = Provenance::unclassified;
  } else if (a.final_format != a.name_format) {
    a.provenance = has_id_token(matchable(desc_tokens)) ? Provenance::id_rule : Provenance::from_description;
  } else if (has_id_token(matchable(a.expanded_tokens))) {
    a.provenance = Provenance::id_rule;
  } else if (identify_format(a.tokens, fmts) != a.name_format) {
    a.provenance = Provenance::from_abbreviation;
  } else {
    a.provenance = Provenance::from_name;
  }
  return a;
}

}  // namespace attrdq
