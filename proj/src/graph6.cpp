#include "ramseylab/graph6.hpp"

#include <istream>

namespace ramseylab {

// graph6 (McKay): N(n) followed by the upper triangle of the adjacency
// matrix in column order, 6 bits per byte (MSB first), each byte offset by
// 63, padded on the right with zero bits.

namespace {
constexpr std::string_view kHeader = ">>graph6<<";

int group_at(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw DecodeError("truncated graph6 input", pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw DecodeError("invalid graph6 byte", pos);
    return c - 63;
}
}  // namespace

Graph parse_graph6(std::string_view line) {
    std::string_view s = line;
    if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw DecodeError("empty graph6 input", 0);

    std::size_t pos = 0;
    long long n;
    if (group_at(s, 0) != 63) {
        n = group_at(s, 0);
        pos = 1;
    } else {
        if (s.size() > 1 && group_at(s, 1) == 63)
            throw DecodeError("graph6 vertex counts above 258047 unsupported", 1);
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | group_at(s, i);
        if (n < 63) throw DecodeError("non-canonical long vertex count", 1);
        pos = 4;
    }

    long long bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos < need) throw DecodeError("truncated edge data", s.size());
    if (s.size() - pos > need) throw DecodeError("trailing bytes after edge data", pos + need);

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int g = group_at(s, pos + static_cast<std::size_t>(bit / 6));
            if ((g >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    // Padding bits must be zero.
    for (; bit < static_cast<long long>(need) * 6; ++bit) {
        std::size_t byte = pos + static_cast<std::size_t>(bit / 6);
        if ((group_at(s, byte) >> (5 - bit % 6)) & 1)
            throw DecodeError("nonzero padding bit", byte);
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
    std::string out;
    long long n = g.n;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw DomainError("graph too large for supported graph6 range");
    }
    long long bits = n * (n - 1) / 2;
    std::size_t data_start = out.size();
    out.resize(out.size() + static_cast<std::size_t>((bits + 5) / 6), 63);
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (g.has_edge(u, v))
                out[data_start + static_cast<std::size_t>(bit / 6)] += 1 << (5 - bit % 6);
        }
    }
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace ramseylab
