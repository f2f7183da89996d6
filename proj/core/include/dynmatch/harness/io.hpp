#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dynmatch/harness/stream.hpp"

namespace dynmatch::harness {

/// Static edge list:
///
///     n
///     u v [w]
///     ...
///
/// Blank lines and lines starting with '#' or '%' are ignored. Direction is
/// dropped; self-loops and repeated pairs are removed (first occurrence
/// wins) and counted. Throws ParseError with the 1-based line number.
StaticGraphData parse_static_edgelist(std::string_view text);

struct TemporalData {
    UpdateStream stream;
    bool weighted = true;  ///< false if any record lacked a weight (those get 1)
    std::size_t dropped_self_loops = 0;
    std::size_t dropped_duplicates = 0;   ///< inserts of a present edge
    std::size_t dropped_absent = 0;       ///< deletes of an absent edge
};

/// Temporal edge stream, one record per line: `u v [w [ts [op]]]` with op
/// '+' (insert, default) or '-' (delete). Records are stably ordered by ts
/// when every record has one. n is max id + 1 unless a `# vertices N` line
/// raises it. Records that would break replay (self-loops, duplicate
/// inserts, deletes of absent edges) are dropped and counted.
TemporalData parse_temporal(std::string_view text);

/// Writes `stream` in the temporal format, seq as ts, with a vertex header.
void write_stream(std::ostream& out, const UpdateStream& stream);

void write_static(std::ostream& out, const StaticGraphData& data);

std::string read_file(const std::string& path);

} // namespace dynmatch::harness
