#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <vector>

#include "ogrisk/error.hpp"
#include "ogrisk/ingest/taxonomy.hpp"
#include "ogrisk/values.hpp"

namespace ogrisk::ingest {

/// Best-effort structural view of a Modbus RTU frame. Decoding failure
/// degrades to the opaque byte form, never to a parse error.
struct ModbusFrameFields {
    std::uint8_t unit_address = 0;
    std::uint8_t function_code = 0;
    std::optional<std::uint16_t> register_address;
    std::optional<std::uint16_t> value;
    std::optional<std::uint16_t> crc;
};

struct RawRecord {
    std::vector<std::uint8_t> modbus_frame;
    std::optional<ModbusFrameFields> frame_fields;
    AttackCategory attack_category = AttackCategory::Normal;
    SpecificAttack specific_attack = SpecificAttack::Normal;
    std::string source;
    std::string destination;
    double timestamp = 0.0;
};

struct RawParseOptions {
    char delimiter = ',';
};

struct RawParseResult {
    std::vector<RawRecord> records;
    std::vector<Diagnostic> diagnostics;
};

/// One record per non-empty line: frame(hex), category, specific attack,
/// source, destination, timestamp. Malformed lines become diagnostics with
/// line numbers; parsing continues.
RawParseResult parse_raw_dataset(std::istream& input, const RawParseOptions& opts = {});

std::optional<ModbusFrameFields> decode_frame(const std::vector<std::uint8_t>& frame);

/// Bridge into the reduction pipeline: decoded frame fields become numeric
/// features (unit_address, function_code, register_address, register_value).
std::vector<MeasurementRow> raw_to_rows(const std::vector<RawRecord>& records,
                                        const std::string& sensor_id);

} // namespace ogrisk::ingest
