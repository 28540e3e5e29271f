#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace attrdq {

/// Named members of the semantic type taxonomy. `numerical_between` is the
/// open-ended bounded variant whose range comes from the dictionary entry.
enum class TypeKind {
  age,
  binary,
  categorical,
  city,
  country,
  date,
  datetime,
  day,
  email,
  hour,
  id,
  ip,
  latitude,
  longitude,
  money,
  model_name,
  month,
  name,
  normalized,
  numerical,
  numerical_non_negative,
  percentage,
  ph,
  phone,
  postal_code,
  state,
  street,
  string,
  time,
  url,
  weekday,
  year,
  numerical_between,
};

inline constexpr std::array kAllTypeKinds = {
    TypeKind::age,        TypeKind::binary,      TypeKind::categorical,
    TypeKind::city,       TypeKind::country,     TypeKind::date,
    TypeKind::datetime,   TypeKind::day,         TypeKind::email,
    TypeKind::hour,       TypeKind::id,          TypeKind::ip,
    TypeKind::latitude,   TypeKind::longitude,   TypeKind::money,
    TypeKind::model_name, TypeKind::month,       TypeKind::name,
    TypeKind::normalized, TypeKind::numerical,   TypeKind::numerical_non_negative,
    TypeKind::percentage, TypeKind::ph,          TypeKind::phone,
    TypeKind::postal_code, TypeKind::state,      TypeKind::street,
    TypeKind::string,     TypeKind::time,        TypeKind::url,
    TypeKind::weekday,    TypeKind::year,        TypeKind::numerical_between,
};

/// Inclusive numeric range.
struct Bounds {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const noexcept { return v >= lo && v <= hi; }
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A member of the taxonomy. Bounded members always carry their range;
/// every other member carries none.
class SemanticType {
 public:
  /// Builds a named member. Throws TypeError for `numerical_between`,
  /// which needs explicit bounds.
  static SemanticType of(TypeKind kind);
  /// Throws TypeError when lo > hi or either bound is not finite.
  static SemanticType between(double lo, double hi);

  TypeKind kind() const noexcept { return kind_; }
  const std::optional<Bounds>& bounds() const noexcept { return bounds_; }

  /// snake_case name used in reports ("numerical_non_negative", "numerical_between").
  std::string_view name() const noexcept;
  /// Dictionary-file label ("numerical>=0", "numerical between 0 and 360", "id").
  std::string label() const;

  friend bool operator==(const SemanticType&, const SemanticType&) = default;

 private:
  SemanticType(TypeKind kind, std::optional<Bounds> bounds) : kind_(kind), bounds_(bounds) {}

  TypeKind kind_;
  std::optional<Bounds> bounds_;
};

std::string_view to_string(TypeKind kind) noexcept;
std::optional<TypeKind> type_kind_from_name(std::string_view snake_name) noexcept;

/// Parses a dictionary type field: snake names, dictionary labels, the
/// "numerical between <lo> and <hi>" pattern and the legacy aliases used by
/// published format lists ("ID column", "E-mail format", "numerical > 0", ...).
/// Throws TypeError on anything outside the taxonomy.
SemanticType parse_semantic_type(std::string_view text);

/// Fixed inclusive range for bounded named members; none otherwise.
/// For numerical_between use SemanticType::bounds().
std::optional<Bounds> bounds_of(TypeKind kind) noexcept;
inline std::optional<Bounds> bounds_of(const SemanticType& t) noexcept { return t.bounds(); }

bool is_bounded(TypeKind kind) noexcept;
bool is_temporal(TypeKind kind) noexcept;
bool is_geographical(TypeKind kind) noexcept;
/// email, url, ip, phone, postal_code, money.
bool is_special_syntax(TypeKind kind) noexcept;
/// numerical, numerical_non_negative and every bounded numeric member.
bool is_numerical_family(TypeKind kind) noexcept;

// ---------------------------------------------------------------------------
// Data quality issues and dimensions

enum class IssueKind {
  missing_data,
  extraneous_data,
  outdated_temporal_data,
  duplicates,
  structural_conflicts,
  domain_violation,
  wrong_data_type,
  uniqueness_violation,
  non_string_data_type,
};

inline constexpr std::array kAllIssueKinds = {
    IssueKind::missing_data,         IssueKind::extraneous_data, IssueKind::outdated_temporal_data,
    IssueKind::duplicates,           IssueKind::structural_conflicts, IssueKind::domain_violation,
    IssueKind::wrong_data_type,      IssueKind::uniqueness_violation, IssueKind::non_string_data_type,
};

enum class Dimension { accuracy, completeness, consistency, uniqueness, timeliness };

inline constexpr std::array kAllDimensions = {
    Dimension::accuracy, Dimension::completeness, Dimension::consistency,
    Dimension::uniqueness, Dimension::timeliness,
};

/// Sorted by enum order, never empty.
using DimensionSet = std::vector<Dimension>;

std::string_view to_string(IssueKind kind) noexcept;
std::string_view to_string(Dimension dim) noexcept;
std::optional<IssueKind> issue_kind_from_name(std::string_view name) noexcept;
std::optional<Dimension> dimension_from_name(std::string_view name) noexcept;

/// Fixed issue -> dimension attribution. Missing data is attributed to
/// completeness only, matching how the published issue tallies were
/// aggregated (the literature mapping also lists accuracy).
DimensionSet dimensions_of(IssueKind issue);

/// Bucket key for a dimension set: names joined with '+' in enum order,
/// e.g. "consistency+uniqueness".
std::string dimension_bucket(const DimensionSet& dims);

}  // namespace attrdq
