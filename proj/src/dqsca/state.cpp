#include "ogrisk/dqsca/state.hpp"

#include "ogrisk/text.hpp"

namespace ogrisk::dqsca {

SystemState StateDatabase::intern(const std::vector<int>& codes) {
    auto it = by_codes_.find(codes);
    if (it != by_codes_.end()) {
        return {it->second, codes};
    }
    int index = next_index();
    by_codes_.emplace(codes, index);
    by_index_.push_back(codes);
    return {index, codes};
}

std::optional<int> StateDatabase::index_of(const std::vector<int>& codes) const {
    auto it = by_codes_.find(codes);
    if (it == by_codes_.end()) return std::nullopt;
    return it->second;
}

const std::vector<int>* StateDatabase::codes_of(int index) const {
    int offset = index - start_index_;
    if (offset < 0 || offset >= static_cast<int>(by_index_.size())) return nullptr;
    return &by_index_[static_cast<std::size_t>(offset)];
}

std::vector<SystemState> StateDatabase::states() const {
    std::vector<SystemState> out;
    out.reserve(by_index_.size());
    for (std::size_t i = 0; i < by_index_.size(); ++i) {
        out.push_back({start_index_ + static_cast<int>(i), by_index_[i]});
    }
    return out;
}

std::vector<std::size_t> compression_kept_indices(const std::vector<PathEntry>& entries,
                                                  double window) {
    std::vector<std::size_t> kept;
    kept.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (kept.empty()) {
            kept.push_back(i);
            continue;
        }
        const PathEntry& last_kept = entries[kept.back()];
        const PathEntry& prev = entries[i - 1];
        const PathEntry& cur = entries[i];
        bool same_run = cur.state_index == prev.state_index && cur.label == prev.label &&
                        cur.state_index == last_kept.state_index && cur.label == last_kept.label;
        if (same_run && cur.timestamp - last_kept.timestamp <= window) {
            continue; // repeat inside the window
        }
        kept.push_back(i);
    }
    return kept;
}

StatePath compress_path(const StatePath& path, double window) {
    StatePath out;
    out.scenario_id = path.scenario_id;
    out.compressed = true;
    for (std::size_t i : compression_kept_indices(path.entries, window)) {
        out.entries.push_back(path.entries[i]);
    }
    return out;
}

void write_state_database(std::ostream& out, const StateDatabase& db, char delimiter) {
    for (const SystemState& s : db.states()) {
        out << s.index;
        for (int code : s.codes) out << delimiter << code;
        out << "\n";
    }
}

StateDatabase read_state_database(std::istream& input, char delimiter) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::pair<int, std::vector<int>>> rows;
    while (std::getline(input, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split(line, delimiter);
        if (fields.size() < 2) {
            throw Error(errc::bad_input,
                        "state line " + std::to_string(line_no) + " has no codes");
        }
        auto index = parse_int(fields[0]);
        if (!index) {
            throw Error(errc::bad_input,
                        "state line " + std::to_string(line_no) + ": bad index");
        }
        std::vector<int> codes;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            auto c = parse_int(fields[i]);
            if (!c) {
                throw Error(errc::bad_input,
                            "state line " + std::to_string(line_no) + ": bad code");
            }
            codes.push_back(static_cast<int>(*c));
        }
        rows.emplace_back(static_cast<int>(*index), std::move(codes));
    }
    if (rows.empty()) return StateDatabase{};

    StateDatabase db(rows.front().first);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].first != db.next_index()) {
            throw Error(errc::bad_input, "state indices are not consecutive at index " +
                                             std::to_string(rows[i].first));
        }
        SystemState s = db.intern(rows[i].second);
        if (s.index != rows[i].first) {
            throw Error(errc::bad_input, "duplicate state vector at index " +
                                             std::to_string(rows[i].first));
        }
    }
    return db;
}

void write_state_paths(std::ostream& out, const std::vector<StatePath>& paths,
                       char delimiter) {
    for (const StatePath& path : paths) {
        for (const PathEntry& e : path.entries) {
            out << path.scenario_id << delimiter << e.state_index << delimiter
                << format_number(e.timestamp) << delimiter << e.label << "\n";
        }
    }
}

} // namespace ogrisk::dqsca
