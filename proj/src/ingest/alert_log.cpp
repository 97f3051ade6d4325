#include "ogrisk/ingest/alert_log.hpp"

#include <algorithm>

#include "ogrisk/text.hpp"

namespace ogrisk::ingest {

AlertLogResult parse_alert_log(std::istream& input, char delimiter) {
    AlertLogResult result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        if (trim(line).empty()) continue;

        auto fields = split(line, delimiter);
        if (fields.size() != 8) {
            result.diagnostics.push_back(
                {errc::bad_input, line_no,
                 "expected 8 fields, got " + std::to_string(fields.size())});
            continue;
        }

        auto ts = parse_double(fields[0]);
        if (!ts || *ts < 0.0) {
            result.diagnostics.push_back(
                {errc::bad_timestamp, line_no, "timestamp '" + trim(fields[0]) + "'"});
            continue;
        }

        auto severity = parse_double(fields[6]);
        if (!severity) {
            result.diagnostics.push_back(
                {errc::bad_input, line_no, "severity '" + trim(fields[6]) + "'"});
            continue;
        }

        std::optional<double> reliability;
        std::string rel_field = trim(fields[7]);
        if (!rel_field.empty()) {
            auto r = parse_double(rel_field);
            if (!r || *r < 0.0 || *r > 1.0) {
                result.diagnostics.push_back(
                    {errc::reliability_out_of_range, line_no,
                     "reliability '" + rel_field + "' is not in [0,1]"});
                continue;
            }
            reliability = *r;
        }

        alerts::Alert alert;
        alert.timestamp = *ts;
        alert.detector_id = trim(fields[1]);
        alert.event_id = trim(fields[2]);
        alert.signature = trim(fields[3]);
        alert.source = trim(fields[4]);
        alert.destination = trim(fields[5]);
        alert.severity_native = *severity;
        alert.reliability = reliability;
        result.alerts.push_back(std::move(alert));
    }

    std::stable_sort(result.alerts.begin(), result.alerts.end(),
                     [](const alerts::Alert& a, const alerts::Alert& b) {
                         return a.timestamp < b.timestamp;
                     });
    return result;
}

} // namespace ogrisk::ingest
