#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ogrisk {

enum class errc {
    // ingest
    unknown_attack_label,
    malformed_frame,
    bad_timestamp,
    header_data_arity_mismatch,
    undeclared_attribute,
    non_numeric_value,
    reliability_out_of_range,
    // dqsca
    no_streams,
    no_prior_sample,
    unmapped_categorical_value,
    missing_feature,
    invalid_quantization_spec,
    // alerts
    unregistered_detector,
    empty_queue,
    // hrct
    cycle_detected,
    multiple_parents,
    dangling_child_id,
    missing_root,
    invalid_tree,
    // metrics
    zero_actual_value,
    length_mismatch,
    nonpositive_baseline,
    out_of_range_percent,
    zero_network_services,
    // generic
    bad_input,
    io_error,
};

const char* errc_name(errc code);

/// Hard failure carrying a typed error code. Soft, per-line input problems
/// travel as Diagnostic records instead so parsing stays total.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

struct Diagnostic {
    errc code;
    std::size_t line = 0; // 1-based input line; 0 when not line-bound
    std::string message;
};

std::string format_diagnostic(const Diagnostic& d);

} // namespace ogrisk
