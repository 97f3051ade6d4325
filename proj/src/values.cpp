#include "ogrisk/values.hpp"

#include "ogrisk/text.hpp"

namespace ogrisk {

const char* feature_kind_name(FeatureKind kind) {
    switch (kind) {
    case FeatureKind::Integer: return "integer";
    case FeatureKind::Real: return "real";
    case FeatureKind::Boolean: return "boolean";
    case FeatureKind::Categorical: return "categorical";
    }
    return "unknown";
}

std::optional<FeatureKind> feature_kind_from(std::string_view name) {
    std::string n = to_lower(trim(name));
    if (n == "integer") return FeatureKind::Integer;
    if (n == "real" || n == "numeric") return FeatureKind::Real;
    if (n == "boolean") return FeatureKind::Boolean;
    if (n == "categorical" || n == "nominal" || n == "string") return FeatureKind::Categorical;
    return std::nullopt;
}

bool is_numeric_kind(FeatureKind kind) {
    return kind == FeatureKind::Integer || kind == FeatureKind::Real;
}

bool is_numeric(const Value& v) {
    return std::holds_alternative<double>(v);
}

std::string format_value(const Value& v) {
    if (const double* d = std::get_if<double>(&v)) return format_number(*d);
    return std::get<std::string>(v);
}

std::string label_key(const std::optional<RowLabels>& labels) {
    if (!labels) return {};
    return labels->specific + "|" + labels->category + "|" + labels->binary;
}

} // namespace ogrisk
