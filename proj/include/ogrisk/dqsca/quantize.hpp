#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ogrisk/error.hpp"
#include "ogrisk/values.hpp"

namespace ogrisk::dqsca {

/// Expert-supplied quantization for one feature. Numeric kinds bucket
/// against strictly increasing thresholds; boolean/categorical kinds map
/// tokens through value_map.
///
/// Boundary semantics for numeric features with thresholds t1 < ... < tk:
/// values at or below t1 take the first code, values at or above any later
/// threshold take that threshold's code, so each boundary except the first
/// belongs to the interval above it.
struct FeatureQuantizer {
    std::string feature;
    FeatureKind kind = FeatureKind::Real;
    std::vector<std::string> interval_names;
    std::vector<int> enumerations;
    std::vector<double> thresholds;        // numeric kinds
    std::map<std::string, int> value_map;  // boolean/categorical kinds
};

struct QuantizationSpec {
    std::vector<FeatureQuantizer> features;

    const FeatureQuantizer* find(const std::string& feature) const;
    std::vector<std::string> feature_names() const;

    /// Throws invalid_quantization_spec naming the offending feature.
    void validate() const;
};

int quantize_value(const Value& value, const FeatureQuantizer& q);

std::vector<int> quantize_row(const MeasurementRow& row, const QuantizationSpec& spec,
                              const std::vector<std::string>& selected_features);

QuantizationSpec load_quantization_spec(std::istream& input);
void save_quantization_spec(std::ostream& out, const QuantizationSpec& spec);

} // namespace ogrisk::dqsca
