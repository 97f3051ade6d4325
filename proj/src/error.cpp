#include "ogrisk/error.hpp"

namespace ogrisk {

const char* errc_name(errc code) {
    switch (code) {
    case errc::unknown_attack_label: return "UnknownAttackLabel";
    case errc::malformed_frame: return "MalformedFrame";
    case errc::bad_timestamp: return "BadTimestamp";
    case errc::header_data_arity_mismatch: return "HeaderDataArityMismatch";
    case errc::undeclared_attribute: return "UndeclaredAttribute";
    case errc::non_numeric_value: return "NonNumericValueForNumericAttribute";
    case errc::reliability_out_of_range: return "ReliabilityOutOfRange";
    case errc::no_streams: return "NoStreams";
    case errc::no_prior_sample: return "NoPriorSample";
    case errc::unmapped_categorical_value: return "UnmappedCategoricalValue";
    case errc::missing_feature: return "MissingFeature";
    case errc::invalid_quantization_spec: return "InvalidQuantizationSpec";
    case errc::unregistered_detector: return "UnregisteredDetector";
    case errc::empty_queue: return "EmptyQueue";
    case errc::cycle_detected: return "CycleDetected";
    case errc::multiple_parents: return "MultipleParents";
    case errc::dangling_child_id: return "DanglingChildId";
    case errc::missing_root: return "MissingRoot";
    case errc::invalid_tree: return "InvalidTree";
    case errc::zero_actual_value: return "ZeroActualValue";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::nonpositive_baseline: return "NonpositiveBaseline";
    case errc::out_of_range_percent: return "OutOfRangePercent";
    case errc::zero_network_services: return "ZeroNetworkServices";
    case errc::bad_input: return "BadInput";
    case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

std::string format_diagnostic(const Diagnostic& d) {
    std::string out = errc_name(d.code);
    if (d.line != 0) {
        out += " at line " + std::to_string(d.line);
    }
    if (!d.message.empty()) {
        out += ": " + d.message;
    }
    return out;
}

} // namespace ogrisk
