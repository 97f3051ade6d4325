#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace ogrisk {

enum class FeatureKind { Integer, Real, Boolean, Categorical };

const char* feature_kind_name(FeatureKind kind);
std::optional<FeatureKind> feature_kind_from(std::string_view name);
bool is_numeric_kind(FeatureKind kind);

/// A cell value: numeric features hold doubles, boolean/categorical features
/// hold their raw token.
using Value = std::variant<double, std::string>;

bool is_numeric(const Value& v);
std::string format_value(const Value& v);

struct RowLabels {
    std::string specific;
    std::string category;
    std::string binary;

    bool operator==(const RowLabels&) const = default;
};

struct MeasurementRow {
    std::map<std::string, Value> values;
    double timestamp = 0.0;
    std::optional<RowLabels> labels;
    std::string sensor_id;
};

/// Label component of dedup keys: rows identical in state but differing in
/// attack label are kept apart.
std::string label_key(const std::optional<RowLabels>& labels);

} // namespace ogrisk
