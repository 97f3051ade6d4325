#include "ogrisk/dqsca/quantize.hpp"

#include <algorithm>

#include "json.hpp"
#include "ogrisk/text.hpp"

namespace ogrisk::dqsca {

using nlohmann::json;

const FeatureQuantizer* QuantizationSpec::find(const std::string& feature) const {
    for (const FeatureQuantizer& q : features) {
        if (q.feature == feature) return &q;
    }
    return nullptr;
}

std::vector<std::string> QuantizationSpec::feature_names() const {
    std::vector<std::string> names;
    names.reserve(features.size());
    for (const FeatureQuantizer& q : features) names.push_back(q.feature);
    return names;
}

void QuantizationSpec::validate() const {
    std::vector<std::string> seen;
    for (const FeatureQuantizer& q : features) {
        auto fail = [&](const std::string& why) {
            throw Error(errc::invalid_quantization_spec,
                        "feature '" + q.feature + "': " + why);
        };
        if (q.feature.empty()) fail("empty feature name");
        if (std::find(seen.begin(), seen.end(), q.feature) != seen.end()) {
            fail("duplicate feature name");
        }
        seen.push_back(q.feature);
        if (q.enumerations.empty()) fail("no enumerations");
        if (q.interval_names.size() != q.enumerations.size()) {
            fail("interval_names and enumerations differ in length");
        }
        for (std::size_t i = 1; i < q.enumerations.size(); ++i) {
            if (q.enumerations[i] <= q.enumerations[i - 1]) {
                fail("enumerations not strictly increasing");
            }
        }
        if (is_numeric_kind(q.kind)) {
            if (q.enumerations.size() != q.thresholds.size() + 1) {
                fail("need exactly one more enumeration than thresholds");
            }
            for (std::size_t i = 1; i < q.thresholds.size(); ++i) {
                if (!(q.thresholds[i - 1] < q.thresholds[i])) {
                    fail("thresholds not strictly increasing");
                }
            }
        } else {
            if (q.value_map.empty()) fail("boolean/categorical feature needs a value_map");
            for (const auto& [token, code] : q.value_map) {
                if (std::find(q.enumerations.begin(), q.enumerations.end(), code) ==
                    q.enumerations.end()) {
                    fail("value_map code " + std::to_string(code) +
                         " for '" + token + "' is not an enumeration");
                }
            }
        }
    }
}

int quantize_value(const Value& value, const FeatureQuantizer& q) {
    if (is_numeric_kind(q.kind)) {
        if (!is_numeric(value)) {
            throw Error(errc::non_numeric_value,
                        "feature '" + q.feature + "' got non-numeric value '" +
                            format_value(value) + "'");
        }
        double v = std::get<double>(value);
        if (q.thresholds.empty()) return q.enumerations.front();
        if (v <= q.thresholds.front()) return q.enumerations.front();
        std::size_t idx = 0;
        for (std::size_t i = 0; i < q.thresholds.size(); ++i) {
            if (v >= q.thresholds[i]) idx = i + 1;
        }
        return q.enumerations[idx];
    }

    std::string token = format_value(value);
    auto it = q.value_map.find(token);
    if (it == q.value_map.end()) {
        throw Error(errc::unmapped_categorical_value,
                    "feature '" + q.feature + "' has no mapping for value '" + token + "'");
    }
    return it->second;
}

std::vector<int> quantize_row(const MeasurementRow& row, const QuantizationSpec& spec,
                              const std::vector<std::string>& selected_features) {
    std::vector<int> codes;
    codes.reserve(selected_features.size());
    for (const std::string& name : selected_features) {
        const FeatureQuantizer* q = spec.find(name);
        if (q == nullptr) {
            throw Error(errc::missing_feature,
                        "selected feature '" + name + "' has no quantizer");
        }
        auto it = row.values.find(name);
        if (it == row.values.end()) {
            throw Error(errc::missing_feature,
                        "row lacks selected feature '" + name + "'");
        }
        codes.push_back(quantize_value(it->second, *q));
    }
    return codes;
}

QuantizationSpec load_quantization_spec(std::istream& input) {
    json doc;
    try {
        doc = json::parse(input);
    } catch (const json::exception& e) {
        throw Error(errc::bad_input, std::string("quantization spec is not valid JSON: ") +
                                         e.what());
    }
    QuantizationSpec spec;
    if (!doc.is_object() || !doc.contains("features") || !doc["features"].is_array()) {
        throw Error(errc::bad_input, "quantization spec needs a 'features' array");
    }
    for (const json& f : doc["features"]) {
        FeatureQuantizer q;
        q.feature = f.value("name", "");
        auto kind = feature_kind_from(f.value("kind", "real"));
        if (!kind) {
            throw Error(errc::bad_input,
                        "feature '" + q.feature + "': unknown kind '" +
                            f.value("kind", "") + "'");
        }
        q.kind = *kind;
        for (const json& n : f.value("interval_names", json::array())) {
            q.interval_names.push_back(n.get<std::string>());
        }
        for (const json& e : f.value("enumerations", json::array())) {
            q.enumerations.push_back(e.get<int>());
        }
        for (const json& t : f.value("thresholds", json::array())) {
            q.thresholds.push_back(t.get<double>());
        }
        if (f.contains("value_map")) {
            for (auto it = f["value_map"].begin(); it != f["value_map"].end(); ++it) {
                q.value_map[it.key()] = it.value().get<int>();
            }
        }
        spec.features.push_back(std::move(q));
    }
    spec.validate();
    return spec;
}

void save_quantization_spec(std::ostream& out, const QuantizationSpec& spec) {
    json features = json::array();
    for (const FeatureQuantizer& q : spec.features) {
        json f;
        f["name"] = q.feature;
        f["kind"] = feature_kind_name(q.kind);
        f["interval_names"] = q.interval_names;
        f["enumerations"] = q.enumerations;
        if (is_numeric_kind(q.kind)) {
            f["thresholds"] = q.thresholds;
        } else {
            f["value_map"] = q.value_map;
        }
        features.push_back(std::move(f));
    }
    json doc;
    doc["features"] = std::move(features);
    out << doc.dump(2) << "\n";
}

} // namespace ogrisk::dqsca
