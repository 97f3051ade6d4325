#include "ogrisk/ingest/raw_dataset.hpp"

#include <cctype>
#include <string>

#include "ogrisk/text.hpp"

namespace ogrisk::ingest {

namespace {

std::optional<std::vector<std::uint8_t>> decode_hex(std::string_view text) {
    std::string t = trim(text);
    if (t.size() >= 2 && (t[0] == '0') && (t[1] == 'x' || t[1] == 'X')) {
        t = t.substr(2);
    }
    if (t.empty() || t.size() % 2 != 0) return std::nullopt;
    std::vector<std::uint8_t> out;
    out.reserve(t.size() / 2);
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    for (std::size_t i = 0; i < t.size(); i += 2) {
        int hi = nibble(t[i]);
        int lo = nibble(t[i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        out.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
    }
    return out;
}

} // namespace

std::optional<ModbusFrameFields> decode_frame(const std::vector<std::uint8_t>& frame) {
    if (frame.size() < 2) return std::nullopt;
    ModbusFrameFields f;
    f.unit_address = frame[0];
    f.function_code = frame[1];
    if (frame.size() >= 4) {
        f.register_address = static_cast<std::uint16_t>(frame[2] << 8 | frame[3]);
    }
    if (frame.size() >= 6) {
        f.value = static_cast<std::uint16_t>(frame[4] << 8 | frame[5]);
    }
    if (frame.size() >= 8) {
        f.crc = static_cast<std::uint16_t>(frame[frame.size() - 2] << 8 | frame.back());
    }
    return f;
}

RawParseResult parse_raw_dataset(std::istream& input, const RawParseOptions& opts) {
    RawParseResult result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        if (trim(line).empty()) continue;

        auto fields = split(line, opts.delimiter);
        if (fields.size() != 6) {
            result.diagnostics.push_back(
                {errc::bad_input, line_no,
                 "expected 6 fields, got " + std::to_string(fields.size())});
            continue;
        }

        auto frame = decode_hex(fields[0]);
        if (!frame) {
            result.diagnostics.push_back(
                {errc::malformed_frame, line_no, "frame field is not hex-decodable"});
            continue;
        }

        auto category = parse_category(fields[1]);
        if (!category) {
            result.diagnostics.push_back(
                {errc::unknown_attack_label, line_no,
                 "unknown attack category '" + trim(fields[1]) + "'"});
            continue;
        }
        auto specific = parse_specific(fields[2]);
        if (!specific) {
            result.diagnostics.push_back(
                {errc::unknown_attack_label, line_no,
                 "unknown specific attack '" + trim(fields[2]) + "'"});
            continue;
        }
        if (category_of(*specific) != *category) {
            result.diagnostics.push_back(
                {errc::unknown_attack_label, line_no,
                 std::string("specific attack '") + specific_name(*specific) +
                     "' does not belong to category '" + category_name(*category) + "'"});
            continue;
        }

        auto ts = parse_double(fields[5]);
        if (!ts || *ts < 0.0) {
            result.diagnostics.push_back(
                {errc::bad_timestamp, line_no, "timestamp '" + trim(fields[5]) + "'"});
            continue;
        }

        RawRecord rec;
        rec.modbus_frame = std::move(*frame);
        rec.frame_fields = decode_frame(rec.modbus_frame);
        rec.attack_category = *category;
        rec.specific_attack = *specific;
        rec.source = trim(fields[3]);
        rec.destination = trim(fields[4]);
        rec.timestamp = *ts;
        result.records.push_back(std::move(rec));
    }
    return result;
}

std::vector<MeasurementRow> raw_to_rows(const std::vector<RawRecord>& records,
                                        const std::string& sensor_id) {
    std::vector<MeasurementRow> rows;
    rows.reserve(records.size());
    for (const RawRecord& rec : records) {
        MeasurementRow row;
        row.timestamp = rec.timestamp;
        row.sensor_id = sensor_id;
        if (rec.frame_fields) {
            row.values["unit_address"] = static_cast<double>(rec.frame_fields->unit_address);
            row.values["function_code"] = static_cast<double>(rec.frame_fields->function_code);
            if (rec.frame_fields->register_address) {
                row.values["register_address"] =
                    static_cast<double>(*rec.frame_fields->register_address);
            }
            if (rec.frame_fields->value) {
                row.values["register_value"] = static_cast<double>(*rec.frame_fields->value);
            }
        }
        RowLabels labels;
        labels.specific = specific_name(rec.specific_attack);
        labels.category = category_name(rec.attack_category);
        labels.binary = rec.attack_category == AttackCategory::Normal ? "0" : "1";
        row.labels = std::move(labels);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace ogrisk::ingest
