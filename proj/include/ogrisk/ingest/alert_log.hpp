#pragma once

#include <istream>
#include <vector>

#include "ogrisk/alerts/alert.hpp"
#include "ogrisk/error.hpp"

namespace ogrisk::ingest {

struct AlertLogResult {
    std::vector<alerts::Alert> alerts; // sorted by timestamp, ties in file order
    std::vector<Diagnostic> diagnostics;
};

/// One alert per line: timestamp, detector_id, event_id, signature, source,
/// destination, severity, reliability. The reliability field may be empty.
AlertLogResult parse_alert_log(std::istream& input, char delimiter = ',');

} // namespace ogrisk::ingest
