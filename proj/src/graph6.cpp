// graph6: printable-ASCII encoding of undirected graphs. Byte layout:
//   order   one byte n+63 for n <= 62, or '~' followed by three bytes holding
//           n in 18 bits (big-endian 6-bit groups), each group + 63.
//   body    the upper triangle of the adjacency matrix in column-major order
//           (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed 6 bits per byte
//           high-bit first, each byte + 63, zero-padded to a byte boundary.
// All bytes sit in [63, 126]. sparse6 (':'-prefixed) and digraph6 ('&') are
// deliberately not handled here.

#include "royal/graph6.hpp"

#include <vector>

namespace royal {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int body_bytes(long long n) {
    long long bits = n * (n - 1) / 2;
    return static_cast<int>((bits + 5) / 6);
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t base = 0;
    if (line.substr(0, kHeader.size()) == kHeader) {
        base = kHeader.size();
        line.remove_prefix(kHeader.size());
    }
    if (line.empty()) throw Graph6Error("empty graph6 string", base);
    if (line[0] == ':') throw Graph6Error("sparse6 input not supported", base);
    if (line[0] == '&') throw Graph6Error("digraph6 input not supported", base);
    for (std::size_t i = 0; i < line.size(); ++i) {
        unsigned char b = line[i];
        if (b < 63 || b > 126)
            throw Graph6Error("byte outside graph6 range [63,126]", base + i);
    }

    long long n;
    std::size_t pos;
    if (line[0] != '~') {
        n = line[0] - 63;
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            throw Graph6Error("graph order beyond 258047 not supported", base + 1);
        if (line.size() < 4)
            throw Graph6Error("truncated order field", base + line.size());
        n = ((long long)(line[1] - 63) << 12) | ((long long)(line[2] - 63) << 6) |
            (long long)(line[3] - 63);
        if (n < 63)
            throw Graph6Error("long-form order below 63", base + 1);
        pos = 4;
    }

    int need = body_bytes(n);
    if (static_cast<int>(line.size() - pos) < need)
        throw Graph6Error("truncated adjacency body: need " + std::to_string(need) +
                              " bytes, have " + std::to_string(line.size() - pos),
                          base + line.size());
    if (static_cast<int>(line.size() - pos) > need)
        throw Graph6Error("trailing bytes after adjacency body", base + pos + need);

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned char byte = line[pos + bit / 6];
            if ((byte - 63) >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
        }
    // Padding bits beyond the triangle must be zero.
    long long total_bits = (long long)need * 6;
    for (long long b = bit; b < total_bits; ++b) {
        unsigned char byte = line[pos + b / 6];
        if ((byte - 63) >> (5 - b % 6) & 1)
            throw Graph6Error("nonzero padding bit", base + pos + b / 6);
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    long long n = g.order();
    if (n > 258047)
        throw std::invalid_argument("graph order beyond 258047 not encodable");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int need = body_bytes(n);
    std::string body(need, 0);
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) body[bit / 6] |= 1 << (5 - bit % 6);
    for (char& c : body) c += 63;
    return out + body;
}

}  // namespace royal
