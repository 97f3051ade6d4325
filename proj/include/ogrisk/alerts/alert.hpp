#pragma once

#include <optional>
#include <string>

namespace ogrisk::alerts {

/// Normalized detector event. event_id binds the alert to a risk-tree node.
/// reliability stays absent until a detector supplies one; consumers default
/// it to 1.
struct Alert {
    double timestamp = 0.0;
    std::string detector_id;
    std::string event_id;
    std::string signature;
    std::string source;
    std::string destination;
    double severity_native = 0.0;
    std::optional<int> severity_common;
    std::optional<double> reliability;
};

double reliability_or_default(const Alert& alert);

} // namespace ogrisk::alerts
