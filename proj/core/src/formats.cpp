#include "specgraph/formats.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace specgraph {

namespace {

constexpr int kLo = 63;   // '?'
constexpr int kHi = 126;  // '~'
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t base = 0;
    if (line.substr(0, kHeader.size()) == kHeader) {
        base = kHeader.size();
        line.remove_prefix(kHeader.size());
    }
    if (line.empty()) throw ParseError("empty graph6 line", base);
    unsigned char first = static_cast<unsigned char>(line[0]);
    if (first < kLo || first > kHi)
        throw ParseError("byte out of graph6 range", base);
    if (first == kHi)
        throw ParseError("multi-byte order (n > 62) not supported; use an edge list", base);
    const int n = first - kLo;
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() < 1 + nbytes)
        throw ParseError("graph6 line truncated", base + line.size());
    if (line.size() > 1 + nbytes)
        throw ParseError("trailing bytes after graph6 data", base + 1 + nbytes);

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            std::size_t byte = 1 + bit / 6;
            unsigned char c = static_cast<unsigned char>(line[byte]);
            if (c < kLo || c > kHi) throw ParseError("byte out of graph6 range", base + byte);
            if ((c - kLo) >> (5 - bit % 6) & 1) edges.emplace_back(u, v);
        }
    }
    // padding bits must be zero, otherwise the line does not round-trip
    for (std::size_t p = nbits; p < nbytes * 6; ++p) {
        std::size_t byte = 1 + p / 6;
        unsigned char c = static_cast<unsigned char>(line[byte]);
        if (c < kLo || c > kHi) throw ParseError("byte out of graph6 range", base + byte);
        if ((c - kLo) >> (5 - p % 6) & 1)
            throw ParseError("nonzero padding bits", base + byte);
    }
    return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62)
        throw std::invalid_argument("graph6 output capped at 62 vertices; use an edge list");
    std::string out(1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6,
                    static_cast<char>(kLo));
    out[0] = static_cast<char>(kLo + n);
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (g.adjacent(u, v)) out[1 + bit / 6] += 1 << (5 - bit % 6);
        }
    }
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string linebuf;
    std::size_t offset = 0;
    std::size_t lineno = 0;

    auto next_line = [&](std::string& dst) {
        while (std::getline(in, dst)) {
            std::size_t start = offset;
            offset += dst.size() + 1;
            ++lineno;
            std::size_t pos = dst.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;  // blank
            return start;
        }
        return std::string::npos;
    };

    std::size_t start = next_line(linebuf);
    if (start == std::string::npos) throw ParseError("empty edge list", 0);
    long n = -1, m = -1;
    {
        std::istringstream hdr(linebuf);
        char extra;
        if (!(hdr >> n >> m) || (hdr >> extra) || n < 0 || m < 0)
            throw ParseError("edge list header must be \"n m\" (line 1)", start);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (long i = 0; i < m; ++i) {
        start = next_line(linebuf);
        if (start == std::string::npos)
            throw ParseError("edge list truncated: expected " + std::to_string(m) + " edges", offset);
        std::istringstream row(linebuf);
        long u = -1, v = -1;
        char extra;
        if (!(row >> u >> v) || (row >> extra))
            throw ParseError("bad edge on line " + std::to_string(lineno), start);
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw ParseError("bad edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                 ") on line " + std::to_string(lineno),
                             start);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line(linebuf) != std::string::npos)
        throw ParseError("trailing content after " + std::to_string(m) + " edges", offset);
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::vector<Graph> read_graphs(std::string_view text) {
    std::size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string_view::npos) throw ParseError("no graph in input", 0);
    char lead = text[pos];
    if (lead >= '0' && lead <= '9') return {parse_edge_list(text)};

    std::vector<Graph> out;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t nl = text.find('\n', line_start);
        std::string_view line =
            text.substr(line_start, nl == std::string_view::npos ? nl : nl - line_start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (!line.empty() && line != kHeader) {
            try {
                out.push_back(parse_graph6(line));
            } catch (const ParseError& e) {
                throw ParseError(std::string(e.what()), line_start + e.offset());
            }
        }
        if (nl == std::string_view::npos) break;
        line_start = nl + 1;
    }
    if (out.empty()) throw ParseError("no graph in input", 0);
    return out;
}

std::vector<Graph> read_graphs(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_graphs(buf.str());
}

}  // namespace specgraph
