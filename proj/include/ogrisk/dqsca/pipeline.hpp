#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ogrisk/dqsca/quantize.hpp"
#include "ogrisk/dqsca/state.hpp"
#include "ogrisk/error.hpp"
#include "ogrisk/values.hpp"

namespace ogrisk::dqsca {

struct SensorStream {
    std::string sensor_id;
    std::vector<MeasurementRow> rows; // sorted by timestamp
};

struct Scenario {
    std::string id;
    std::vector<SensorStream> streams;
};

enum class MissingSamplePolicy {
    HoldAbsent, // baseline timestamps before a sensor's first sample omit it
    Error,      // ... raise NoPriorSample instead
};

/// Time-align every stream onto the fastest sensor's timestamps, carrying
/// each slower sensor's most recent value forward. Sampling frequency is
/// (count - 1) / (last - first); ties break to the lexicographically
/// smallest sensor id.
std::vector<MeasurementRow> merge_streams(const std::vector<SensorStream>& streams,
                                          MissingSamplePolicy policy =
                                              MissingSamplePolicy::HoldAbsent);

struct ReductionStats {
    std::size_t original_rows = 0;
    std::size_t retained_rows = 0;
    std::size_t duplicates_removed = 0;          // dropped, raw values unchanged
    std::size_t combined_by_quantization = 0;    // dropped, raw values differed

    double reduction_percent() const {
        if (original_rows == 0) return 0.0;
        return static_cast<double>(original_rows - retained_rows) /
               static_cast<double>(original_rows) * 100.0;
    }
};

struct DqscaOptions {
    double window = std::numeric_limits<double>::infinity();
    MissingSamplePolicy missing_policy = MissingSamplePolicy::HoldAbsent;
    std::vector<std::string> selected_features; // empty = spec order
};

struct DqscaResult {
    std::vector<StatePath> paths; // one compressed path per scenario
    ReductionStats stats;
};

/// Steps 1-5 over every scenario: merge, quantize, intern states, compress.
/// The shared database accumulates across scenarios.
DqscaResult run_dqsca(const std::vector<Scenario>& scenarios, const QuantizationSpec& spec,
                      StateDatabase& db, const DqscaOptions& opts = {});

struct RefreshResult {
    StateDatabase db;
    QuantizationSpec spec;
    /// Unique (old index, new index) pairs in first-seen order. Splitting an
    /// interval can fan one old index out to several new ones.
    std::vector<std::pair<int, int>> remap;
};

/// Rebuild the state database from retained rows after a threshold update.
RefreshResult refresh_quantization(const std::vector<MeasurementRow>& retained_rows,
                                   const QuantizationSpec& old_spec,
                                   const StateDatabase& old_db,
                                   const QuantizationSpec& new_spec,
                                   const std::vector<std::string>& selected_features,
                                   int start_index = 0);

void write_reduction_stats_json(std::ostream& out, const ReductionStats& stats);
void write_reduction_stats_text(std::ostream& out, const ReductionStats& stats);

} // namespace ogrisk::dqsca
