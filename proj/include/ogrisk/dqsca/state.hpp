#pragma once

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ogrisk/error.hpp"

namespace ogrisk::dqsca {

struct SystemState {
    int index = 0;
    std::vector<int> codes;
};

/// Interning table for quantized code vectors. Indices are assigned in
/// first-seen order starting at start_index and the vector<->index mapping
/// stays bijective.
class StateDatabase {
public:
    explicit StateDatabase(int start_index = 0) : start_index_(start_index) {}

    /// Returns the existing state for a seen vector, otherwise inserts it
    /// under the next free index.
    SystemState intern(const std::vector<int>& codes);

    std::optional<int> index_of(const std::vector<int>& codes) const;
    const std::vector<int>* codes_of(int index) const;

    std::size_t size() const { return by_index_.size(); }
    int start_index() const { return start_index_; }
    int next_index() const { return start_index_ + static_cast<int>(by_index_.size()); }

    /// States ordered by index.
    std::vector<SystemState> states() const;

private:
    std::map<std::vector<int>, int> by_codes_;
    std::vector<std::vector<int>> by_index_;
    int start_index_ = 0;
};

struct PathEntry {
    int state_index = 0;
    double timestamp = 0.0;
    std::string label;

    bool operator==(const PathEntry&) const = default;
};

struct StatePath {
    std::string scenario_id;
    std::vector<PathEntry> entries;
    bool compressed = false;
};

/// Indices of the entries a compression pass keeps: the first entry of every
/// run, plus any repeat whose gap from the last kept entry exceeds the
/// window. Infinite window degenerates to consecutive dedup.
std::vector<std::size_t> compression_kept_indices(const std::vector<PathEntry>& entries,
                                                  double window);

StatePath compress_path(const StatePath& path, double window);

void write_state_database(std::ostream& out, const StateDatabase& db, char delimiter = ',');
StateDatabase read_state_database(std::istream& input, char delimiter = ',');

void write_state_paths(std::ostream& out, const std::vector<StatePath>& paths,
                       char delimiter = ',');

} // namespace ogrisk::dqsca
