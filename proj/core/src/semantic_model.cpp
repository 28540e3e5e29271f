#include "attrdq/semantic_model.hpp"

#include <cmath>
#include <utility>

#include "attrdq/text.hpp"

namespace attrdq {

namespace {

struct KindName {
  TypeKind kind;
  std::string_view name;
};

constexpr std::array<KindName, kAllTypeKinds.size()> kTypeNames{{
    {TypeKind::age, "age"},
    {TypeKind::binary, "binary"},
    {TypeKind::categorical, "categorical"},
    {TypeKind::city, "city"},
    {TypeKind::country, "country"},
    {TypeKind::date, "date"},
    {TypeKind::datetime, "datetime"},
    {TypeKind::day, "day"},
    {TypeKind::email, "email"},
    {TypeKind::hour, "hour"},
    {TypeKind::id, "id"},
    {TypeKind::ip, "ip"},
    {TypeKind::latitude, "latitude"},
    {TypeKind::longitude, "longitude"},
    {TypeKind::money, "money"},
    {TypeKind::model_name, "model_name"},
    {TypeKind::month, "month"},
    {TypeKind::name, "name"},
    {TypeKind::normalized, "normalized"},
    {TypeKind::numerical, "numerical"},
    {TypeKind::numerical_non_negative, "numerical_non_negative"},
    {TypeKind::percentage, "percentage"},
    {TypeKind::ph, "ph"},
    {TypeKind::phone, "phone"},
    {TypeKind::postal_code, "postal_code"},
    {TypeKind::state, "state"},
    {TypeKind::street, "street"},
    {TypeKind::string, "string"},
    {TypeKind::time, "time"},
    {TypeKind::url, "url"},
    {TypeKind::weekday, "weekday"},
    {TypeKind::year, "year"},
    {TypeKind::numerical_between, "numerical_between"},
}};

// Labels seen in published format lists, compared after collapsing spaces,
// underscores and hyphens.
constexpr std::array<std::pair<std::string_view, TypeKind>, 14> kAliases{{
    {"numerical>=0", TypeKind::numerical_non_negative},
    {"numerical>0", TypeKind::numerical_non_negative},
    {"numericalnonnegative", TypeKind::numerical_non_negative},
    {"nonnegative", TypeKind::numerical_non_negative},
    {"idcolumn", TypeKind::id},
    {"ipformat", TypeKind::ip},
    {"ipaddress", TypeKind::ip},
    {"emailformat", TypeKind::email},
    {"urlformat", TypeKind::url},
    {"modelname", TypeKind::model_name},
    {"postalcode", TypeKind::postal_code},
    {"zipcode", TypeKind::postal_code},
    {"phonenumber", TypeKind::phone},
    {"numericalbetween", TypeKind::numerical_between},
}};

std::string squash(std::string_view s) {
  std::string out;
  for (char c : to_lower(s)) {
    if (c != ' ' && c != '_' && c != '-' && c != '\t') out.push_back(c);
  }
  return out;
}

double parse_bound(std::string_view text, std::string_view full) {
  auto v = parse_number(trim(text));
  if (!v || !std::isfinite(*v)) {
    throw TypeError("malformed bound '" + std::string(trim(text)) + "' in '" + std::string(full) + "'");
  }
  return *v;
}

}  // namespace

SemanticType SemanticType::of(TypeKind kind) {
  if (kind == TypeKind::numerical_between) {
    throw TypeError("numerical_between requires explicit bounds");
  }
  return SemanticType(kind, bounds_of(kind));
}

SemanticType SemanticType::between(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw TypeError("numerical_between bounds must be finite");
  if (lo > hi) {
    throw TypeError("numerical_between lower bound " + format_number(lo) + " exceeds upper bound " +
                    format_number(hi));
  }
  return SemanticType(TypeKind::numerical_between, Bounds{lo, hi});
}

std::string_view SemanticType::name() const noexcept { return to_string(kind_); }

std::string SemanticType::label() const {
  switch (kind_) {
    case TypeKind::numerical_non_negative:
      return "numerical>=0";
    case TypeKind::numerical_between:
      return "numerical between " + format_number(bounds_->lo) + " and " + format_number(bounds_->hi);
    default:
      return std::string(to_string(kind_));
  }
}

std::string_view to_string(TypeKind kind) noexcept {
  for (const auto& [k, n] : kTypeNames) {
    if (k == kind) return n;
  }
  return "unknown";
}

std::optional<TypeKind> type_kind_from_name(std::string_view snake_name) noexcept {
  for (const auto& [k, n] : kTypeNames) {
    if (n == snake_name) return k;
  }
  return std::nullopt;
}

SemanticType parse_semantic_type(std::string_view text) {
  const std::string lowered = to_lower(trim(text));
  if (lowered.empty()) throw TypeError("empty type name");

  static constexpr std::string_view kBetween = "numerical between ";
  if (lowered.starts_with(kBetween)) {
    const std::string_view rest = std::string_view(lowered).substr(kBetween.size());
    const auto sep = rest.find(" and ");
    if (sep == std::string_view::npos) {
      throw TypeError("expected 'numerical between <lo> and <hi>', got '" + std::string(text) + "'");
    }
    const double lo = parse_bound(rest.substr(0, sep), text);
    const double hi = parse_bound(rest.substr(sep + 5), text);
    return SemanticType::between(lo, hi);
  }

  if (auto kind = type_kind_from_name(lowered); kind && *kind != TypeKind::numerical_between) {
    return SemanticType::of(*kind);
  }
  const std::string squashed = squash(lowered);
  for (const auto& [k, n] : kTypeNames) {
    if (k != TypeKind::numerical_between && squash(n) == squashed) return SemanticType::of(k);
  }
  for (const auto& [alias, kind] : kAliases) {
    if (alias == squashed) {
      if (kind == TypeKind::numerical_between) break;
      return SemanticType::of(kind);
    }
  }
  throw TypeError("unknown semantic type '" + std::string(trim(text)) + "'");
}

std::optional<Bounds> bounds_of(TypeKind kind) noexcept {
  switch (kind) {
    case TypeKind::age:
      return Bounds{0, 150};
    case TypeKind::day:
      return Bounds{1, 31};
    case TypeKind::hour:
      return Bounds{0, 24};
    case TypeKind::latitude:
      return Bounds{-90, 90};
    case TypeKind::longitude:
      return Bounds{-180, 180};
    case TypeKind::month:
      return Bounds{1, 12};
    case TypeKind::normalized:
      return Bounds{0, 1};
    case TypeKind::percentage:
      return Bounds{0, 100};
    case TypeKind::ph:
      return Bounds{0, 14};
    case TypeKind::year:
      return Bounds{1000, 2100};
    default:
      return std::nullopt;
  }
}

bool is_bounded(TypeKind kind) noexcept {
  return kind == TypeKind::numerical_between || bounds_of(kind).has_value();
}

bool is_temporal(TypeKind kind) noexcept {
  switch (kind) {
    case TypeKind::date:
    case TypeKind::datetime:
    case TypeKind::time:
    case TypeKind::year:
    case TypeKind::month:
    case TypeKind::day:
    case TypeKind::hour:
    case TypeKind::weekday:
      return true;
    default:
      return false;
  }
}

bool is_geographical(TypeKind kind) noexcept {
  switch (kind) {
    case TypeKind::city:
    case TypeKind::state:
    case TypeKind::country:
    case TypeKind::street:
    case TypeKind::latitude:
    case TypeKind::longitude:
      return true;
    default:
      return false;
  }
}

bool is_special_syntax(TypeKind kind) noexcept {
  switch (kind) {
    case TypeKind::email:
    case TypeKind::url:
    case TypeKind::ip:
    case TypeKind::phone:
    case TypeKind::postal_code:
    case TypeKind::money:
      return true;
    default:
      return false;
  }
}

bool is_numerical_family(TypeKind kind) noexcept {
  return kind == TypeKind::numerical || kind == TypeKind::numerical_non_negative || is_bounded(kind);
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::pair<IssueKind, std::string_view>, kAllIssueKinds.size()> kIssueNames{{
    {IssueKind::missing_data, "missing_data"},
    {IssueKind::extraneous_data, "extraneous_data"},
    {IssueKind::outdated_temporal_data, "outdated_temporal_data"},
    {IssueKind::duplicates, "duplicates"},
    {IssueKind::structural_conflicts, "structural_conflicts"},
    {IssueKind::domain_violation, "domain_violation"},
    {IssueKind::wrong_data_type, "wrong_data_type"},
    {IssueKind::uniqueness_violation, "uniqueness_violation"},
    {IssueKind::non_string_data_type, "non_string_data_type"},
}};

constexpr std::array<std::pair<Dimension, std::string_view>, kAllDimensions.size()> kDimensionNames{{
    {Dimension::accuracy, "accuracy"},
    {Dimension::completeness, "completeness"},
    {Dimension::consistency, "consistency"},
    {Dimension::uniqueness, "uniqueness"},
    {Dimension::timeliness, "timeliness"},
}};

}  // namespace

std::string_view to_string(IssueKind kind) noexcept {
  for (const auto& [k, n] : kIssueNames) {
    if (k == kind) return n;
  }
  return "unknown";
}

std::string_view to_string(Dimension dim) noexcept {
  for (const auto& [d, n] : kDimensionNames) {
    if (d == dim) return n;
  }
  return "unknown";
}

std::optional<IssueKind> issue_kind_from_name(std::string_view name) noexcept {
  for (const auto& [k, n] : kIssueNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::optional<Dimension> dimension_from_name(std::string_view name) noexcept {
  for (const auto& [d, n] : kDimensionNames) {
    if (n == name) return d;
  }
  return std::nullopt;
}

DimensionSet dimensions_of(IssueKind issue) {
  using D = Dimension;
  switch (issue) {
    case IssueKind::missing_data:
      return {D::completeness};
    case IssueKind::extraneous_data:
      return {D::consistency, D::uniqueness};
    case IssueKind::outdated_temporal_data:
      return {D::timeliness};
    case IssueKind::duplicates:
      return {D::uniqueness};
    case IssueKind::structural_conflicts:
      return {D::consistency, D::uniqueness};
    case IssueKind::domain_violation:
      return {D::accuracy};
    case IssueKind::wrong_data_type:
      return {D::consistency};
    case IssueKind::uniqueness_violation:
      return {D::uniqueness};
    case IssueKind::non_string_data_type:
      return {D::consistency};
  }
  return {D::consistency};
}

std::string dimension_bucket(const DimensionSet& dims) {
  std::string out;
  for (Dimension d : dims) {
    if (!out.empty()) out.push_back('+');
    out.append(to_string(d));
  }
  return out;
}

}  // namespace attrdq
