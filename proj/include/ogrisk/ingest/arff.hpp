#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "ogrisk/error.hpp"
#include "ogrisk/values.hpp"

namespace ogrisk::ingest {

struct FeatureDecl {
    std::string name;
    FeatureKind kind = FeatureKind::Real;
    std::vector<std::string> nominal_values; // categorical only

    bool operator==(const FeatureDecl&) const = default;
};

/// Declared column layout. The last four attributes are the timestamp,
/// specific attack, category attack, and binary attack columns, in that
/// order; everything before them is a measurement feature.
struct FeatureSchema {
    std::string relation;
    std::vector<FeatureDecl> features;

    std::string timestamp_column;
    std::string specific_column;
    std::string category_column;
    std::string binary_column;

    std::size_t feature_count() const {
        return features.size() >= 4 ? features.size() - 4 : 0;
    }

    bool operator==(const FeatureSchema&) const = default;
};

struct ArffParseResult {
    FeatureSchema schema;
    std::vector<MeasurementRow> rows;
    std::vector<Diagnostic> diagnostics;
};

/// Strict subset of ARFF: @relation / @attribute declarations, a @data
/// marker, then dense comma-separated rows. Throws on unusable headers;
/// per-row problems become diagnostics.
ArffParseResult parse_arff_dataset(std::istream& input);

void write_arff_dataset(std::ostream& out, const FeatureSchema& schema,
                        const std::vector<MeasurementRow>& rows);

} // namespace ogrisk::ingest
