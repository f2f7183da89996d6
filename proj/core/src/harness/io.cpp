#include "dynmatch/harness/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"

namespace dynmatch::harness {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        ++line_no;
        fn(line_no, text.substr(start, end - start));
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
}

bool is_comment(std::string_view line) {
    const auto tokens = split_ws(line);
    return tokens.empty() || tokens.front().starts_with('#') || tokens.front().starts_with('%');
}

std::uint64_t parse_uint(std::string_view token, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("bad ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

double parse_double(std::string_view token, std::size_t line, const char* what) {
    double value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("bad ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

VertexId parse_vertex(std::string_view token, std::size_t line) {
    const auto id = parse_uint(token, line, "vertex id");
    if (id >= kNoVertex - 1) {
        throw ParseError(line, "vertex id too large");
    }
    return static_cast<VertexId>(id);
}

Weight parse_weight(std::string_view token, std::size_t line) {
    const double w = parse_double(token, line, "weight");
    if (!(w > 0)) {
        throw ParseError(line, "weight must be positive");
    }
    return w;
}

std::uint64_t pair_key(VertexId u, VertexId v) {
    if (u > v) {
        std::swap(u, v);
    }
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace

StaticGraphData parse_static_edgelist(std::string_view text) {
    StaticGraphData data;
    bool have_n = false;
    std::unordered_set<std::uint64_t> seen;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        if (is_comment(line)) {
            return;
        }
        const auto tokens = split_ws(line);
        if (!have_n) {
            if (tokens.size() != 1) {
                throw ParseError(line_no, "expected the vertex count on its own line");
            }
            data.n = parse_uint(tokens[0], line_no, "vertex count");
            have_n = true;
            return;
        }
        if (tokens.size() < 2 || tokens.size() > 3) {
            throw ParseError(line_no, "expected 'u v [w]'");
        }
        const VertexId u = parse_vertex(tokens[0], line_no);
        const VertexId v = parse_vertex(tokens[1], line_no);
        if (u >= data.n || v >= data.n) {
            throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(data.n) + ")");
        }
        std::optional<Weight> w;
        if (tokens.size() == 3) {
            w = parse_weight(tokens[2], line_no);
        }
        if (u == v) {
            ++data.dropped_self_loops;
            return;
        }
        if (!seen.insert(pair_key(u, v)).second) {
            ++data.dropped_duplicates;
            return;
        }
        data.edges.push_back({u, v, w});
    });
    if (!have_n) {
        throw ParseError(1, "missing vertex count");
    }
    return data;
}

TemporalData parse_temporal(std::string_view text) {
    struct Record {
        OpKind kind;
        VertexId u;
        VertexId v;
        std::optional<Weight> w;
        std::optional<double> ts;
        std::size_t line;
    };
    std::vector<Record> records;
    std::size_t declared_n = 0;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        const auto tokens = split_ws(line);
        if (tokens.size() == 3 && tokens[0] == "#" && tokens[1] == "vertices") {
            declared_n = parse_uint(tokens[2], line_no, "vertex count");
            return;
        }
        if (is_comment(line)) {
            return;
        }
        if (tokens.size() < 2 || tokens.size() > 5) {
            throw ParseError(line_no, "expected 'u v [w [ts [op]]]'");
        }
        Record r{OpKind::insert, parse_vertex(tokens[0], line_no), parse_vertex(tokens[1], line_no),
                 std::nullopt, std::nullopt, line_no};
        if (tokens.size() >= 3) {
            r.w = parse_weight(tokens[2], line_no);
        }
        if (tokens.size() >= 4) {
            r.ts = parse_double(tokens[3], line_no, "timestamp");
        }
        if (tokens.size() == 5) {
            if (tokens[4] == "+") {
                r.kind = OpKind::insert;
            } else if (tokens[4] == "-") {
                r.kind = OpKind::remove;
            } else {
                throw ParseError(line_no, "operation must be '+' or '-'");
            }
        }
        records.push_back(r);
    });

    const bool all_timestamped =
        !records.empty() && std::all_of(records.begin(), records.end(), [](const Record& r) { return r.ts.has_value(); });
    if (all_timestamped) {
        std::stable_sort(records.begin(), records.end(),
                         [](const Record& a, const Record& b) { return *a.ts < *b.ts; });
    }

    TemporalData out;
    std::size_t n = declared_n;
    for (const auto& r : records) {
        n = std::max<std::size_t>(n, std::max(r.u, r.v) + std::size_t{1});
    }
    out.stream.n = n;
    std::unordered_set<std::uint64_t> present;
    for (const auto& r : records) {
        if (r.u == r.v) {
            ++out.dropped_self_loops;
            continue;
        }
        const auto key = pair_key(r.u, r.v);
        if (r.kind == OpKind::insert) {
            if (!present.insert(key).second) {
                ++out.dropped_duplicates;
                continue;
            }
            if (!r.w) {
                out.weighted = false;
            }
            out.stream.ops.push_back({OpKind::insert, r.u, r.v, r.w.value_or(1), out.stream.ops.size()});
        } else {
            if (present.erase(key) == 0) {
                ++out.dropped_absent;
                continue;
            }
            out.stream.ops.push_back({OpKind::remove, r.u, r.v, 0, out.stream.ops.size()});
        }
    }
    return out;
}

void write_stream(std::ostream& out, const UpdateStream& stream) {
    const auto precision = out.precision(17);
    out << "# vertices " << stream.n << '\n';
    out << "# source " << (stream.provenance.source.empty() ? "-" : stream.provenance.source) << " seed "
        << stream.provenance.seed << " undo " << stream.provenance.undo_percent << '\n';
    for (const auto& op : stream.ops) {
        const Weight w = op.kind == OpKind::insert ? op.w : 1;
        out << op.u << ' ' << op.v << ' ' << w << ' ' << op.seq << ' '
            << (op.kind == OpKind::insert ? '+' : '-') << '\n';
    }
    out.precision(precision);
}

void write_static(std::ostream& out, const StaticGraphData& data) {
    const auto precision = out.precision(17);
    out << data.n << '\n';
    for (const auto& e : data.edges) {
        out << e.u << ' ' << e.v;
        if (e.w) {
            out << ' ' << *e.w;
        }
        out << '\n';
    }
    out.precision(precision);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace dynmatch::harness
