#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "attrdq/dictionaries.hpp"
#include "attrdq/semantic_model.hpp"

namespace attrdq {

enum class Provenance { from_name, from_description, from_abbreviation, id_rule, unclassified };

std::string_view to_string(Provenance p) noexcept;
std::optional<Provenance> provenance_from_name(std::string_view name) noexcept;

/// Result of analysing one column label. `final_format` empty means the
/// column is Unclassified (reported as "NaN").
struct LabelAnalysis {
  std::string original_header;
  std::vector<std::string> tokens;
  std::vector<std::string> expanded_tokens;
  std::optional<SemanticType> name_format;
  std::optional<SemanticType> description_format;
  std::optional<SemanticType> final_format;
  Provenance provenance = Provenance::unclassified;

  bool classified() const noexcept { return final_format.has_value(); }
  /// Report name of the final format, or "NaN".
  std::string format_name() const;
  /// Dictionary label of the final format, or "NaN".
  std::string format_label() const;

  friend bool operator==(const LabelAnalysis&, const LabelAnalysis&) = default;
};

/// Splits on whitespace, '_', '-', '.', '/', and lower->upper camelCase
/// boundaries (except after a lone leading lowercase letter, so "pH" stays
/// one token), drops any other non-alphanumeric byte, lowercases.
std::vector<std::string> tokenize(std::string_view header);

/// Single pass: each token found in `abbr` is replaced by its expansion.
std::vector<std::string> expand_abbreviations(std::span<const std::string> tokens,
                                              const AbbreviationsDictionary& abbr);

/// ID rule first (any token equal to "id"), then keyword lookup. Pure-digit
/// tokens never participate in matching.
std::optional<SemanticType> identify_format(std::span<const std::string> tokens, const FormatsDictionary& dict);

/// True for the catch-all members `string` and `numerical`.
bool is_generic(const SemanticType& t) noexcept;
/// Bounded, id, name, temporal, geographical or special-syntax members.
bool is_specific(const SemanticType& t) noexcept;

/// Name wins; description fills in a miss, or replaces a generic name
/// format with a more specific one.
std::optional<SemanticType> resolve_format(const std::optional<SemanticType>& name_fmt,
                                           const std::optional<SemanticType>& desc_fmt);

LabelAnalysis analyze_label(std::string_view header, std::optional<std::string_view> description,
                            const FormatsDictionary& fmts, const AbbreviationsDictionary& abbr);

}  // namespace attrdq
