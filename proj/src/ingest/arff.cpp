#include "ogrisk/ingest/arff.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ogrisk/text.hpp"

namespace ogrisk::ingest {

namespace {

struct AttributeLine {
    std::string name;
    FeatureKind kind;
    std::vector<std::string> nominal_values;
};

std::optional<AttributeLine> parse_attribute_line(const std::string& body) {
    // body is everything after the "@attribute" keyword
    std::string t = trim(body);
    if (t.empty()) return std::nullopt;
    std::size_t name_end = 0;
    while (name_end < t.size() && !std::isspace(static_cast<unsigned char>(t[name_end]))) {
        ++name_end;
    }
    AttributeLine attr;
    attr.name = t.substr(0, name_end);
    std::string type = trim(t.substr(name_end));
    if (attr.name.empty() || type.empty()) return std::nullopt;

    if (type.front() == '{') {
        if (type.back() != '}') return std::nullopt;
        attr.kind = FeatureKind::Categorical;
        for (const std::string& v : split(type.substr(1, type.size() - 2), ',')) {
            attr.nominal_values.push_back(trim(v));
        }
        if (attr.nominal_values.empty()) return std::nullopt;
        return attr;
    }
    auto kind = feature_kind_from(type);
    if (!kind) return std::nullopt;
    attr.kind = *kind;
    return attr;
}

bool starts_with_keyword(const std::string& line, const char* keyword, std::string& rest) {
    std::string lowered = to_lower(line);
    std::string kw = keyword;
    if (lowered.rfind(kw, 0) != 0) return false;
    if (lowered.size() > kw.size() &&
        !std::isspace(static_cast<unsigned char>(lowered[kw.size()]))) {
        return false;
    }
    rest = line.substr(kw.size());
    return true;
}

} // namespace

ArffParseResult parse_arff_dataset(std::istream& input) {
    ArffParseResult result;
    std::string line;
    std::size_t line_no = 0;
    bool in_data = false;
    std::set<std::string> seen_names;

    while (std::getline(input, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t.front() == '%') continue;

        if (!in_data) {
            std::string rest;
            if (starts_with_keyword(t, "@relation", rest)) {
                result.schema.relation = trim(rest);
                continue;
            }
            if (starts_with_keyword(t, "@attribute", rest)) {
                auto attr = parse_attribute_line(rest);
                if (!attr) {
                    throw Error(errc::bad_input,
                                "unparseable attribute declaration at line " +
                                    std::to_string(line_no) + ": " + t);
                }
                if (!seen_names.insert(attr->name).second) {
                    throw Error(errc::bad_input,
                                "duplicate attribute name '" + attr->name + "' at line " +
                                    std::to_string(line_no));
                }
                result.schema.features.push_back(
                    {attr->name, attr->kind, std::move(attr->nominal_values)});
                continue;
            }
            if (starts_with_keyword(t, "@data", rest)) {
                in_data = true;
                if (result.schema.features.size() < 4) {
                    throw Error(errc::bad_input,
                                "need at least four attributes (timestamp, specific, "
                                "category, binary); got " +
                                    std::to_string(result.schema.features.size()));
                }
                std::size_t n = result.schema.features.size();
                result.schema.timestamp_column = result.schema.features[n - 4].name;
                result.schema.specific_column = result.schema.features[n - 3].name;
                result.schema.category_column = result.schema.features[n - 2].name;
                result.schema.binary_column = result.schema.features[n - 1].name;
                continue;
            }
            throw Error(errc::bad_input, "unexpected line before @data at line " +
                                             std::to_string(line_no) + ": " + t);
        }

        auto fields = split(t, ',');
        const auto& decls = result.schema.features;
        if (fields.size() != decls.size()) {
            result.diagnostics.push_back(
                {errc::header_data_arity_mismatch, line_no,
                 "row has " + std::to_string(fields.size()) + " fields, header declares " +
                     std::to_string(decls.size())});
            continue;
        }

        MeasurementRow row;
        RowLabels labels;
        bool bad = false;
        for (std::size_t i = 0; i < decls.size() && !bad; ++i) {
            const FeatureDecl& decl = decls[i];
            std::string field = trim(fields[i]);
            const std::size_t n = decls.size();
            const bool is_timestamp = i == n - 4;
            const bool is_label = i >= n - 3;

            if (is_timestamp) {
                auto ts = parse_double(field);
                if (!ts) {
                    result.diagnostics.push_back(
                        {errc::non_numeric_value, line_no,
                         "timestamp column '" + decl.name + "' value '" + field + "'"});
                    bad = true;
                    break;
                }
                row.timestamp = *ts;
                continue;
            }
            if (is_label) {
                if (i == n - 3) labels.specific = field;
                else if (i == n - 2) labels.category = field;
                else labels.binary = field;
                continue;
            }

            if (is_numeric_kind(decl.kind)) {
                auto v = parse_double(field);
                if (!v) {
                    result.diagnostics.push_back(
                        {errc::non_numeric_value, line_no,
                         "attribute '" + decl.name + "' value '" + field + "'"});
                    bad = true;
                    break;
                }
                row.values[decl.name] = *v;
            } else {
                if (decl.kind == FeatureKind::Categorical && !decl.nominal_values.empty() &&
                    std::find(decl.nominal_values.begin(), decl.nominal_values.end(), field) ==
                        decl.nominal_values.end()) {
                    result.diagnostics.push_back(
                        {errc::undeclared_attribute, line_no,
                         "value '" + field + "' is not in the declared domain of '" +
                             decl.name + "'"});
                    bad = true;
                    break;
                }
                row.values[decl.name] = field;
            }
        }
        if (bad) continue;
        row.labels = std::move(labels);
        result.rows.push_back(std::move(row));
    }

    if (!in_data && result.schema.features.empty()) {
        throw Error(errc::undeclared_attribute, "input declares no attributes");
    }
    if (!in_data) {
        // header-only input: still resolve the label block
        if (result.schema.features.size() < 4) {
            throw Error(errc::bad_input,
                        "need at least four attributes (timestamp, specific, category, "
                        "binary); got " +
                            std::to_string(result.schema.features.size()));
        }
        std::size_t n = result.schema.features.size();
        result.schema.timestamp_column = result.schema.features[n - 4].name;
        result.schema.specific_column = result.schema.features[n - 3].name;
        result.schema.category_column = result.schema.features[n - 2].name;
        result.schema.binary_column = result.schema.features[n - 1].name;
    }
    return result;
}

void write_arff_dataset(std::ostream& out, const FeatureSchema& schema,
                        const std::vector<MeasurementRow>& rows) {
    out << "@relation " << (schema.relation.empty() ? "dataset" : schema.relation) << "\n";
    for (const FeatureDecl& decl : schema.features) {
        out << "@attribute " << decl.name << " ";
        if (decl.kind == FeatureKind::Categorical) {
            out << "{" << join(decl.nominal_values, ',') << "}";
        } else {
            out << feature_kind_name(decl.kind);
        }
        out << "\n";
    }
    out << "@data\n";
    const std::size_t n = schema.features.size();
    for (const MeasurementRow& row : rows) {
        std::vector<std::string> fields;
        fields.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == n - 4) {
                fields.push_back(format_number(row.timestamp));
            } else if (i == n - 3) {
                fields.push_back(row.labels ? row.labels->specific : "?");
            } else if (i == n - 2) {
                fields.push_back(row.labels ? row.labels->category : "?");
            } else if (i == n - 1) {
                fields.push_back(row.labels ? row.labels->binary : "?");
            } else {
                auto it = row.values.find(schema.features[i].name);
                fields.push_back(it == row.values.end() ? "?" : format_value(it->second));
            }
        }
        out << join(fields, ',') << "\n";
    }
}

} // namespace ogrisk::ingest
