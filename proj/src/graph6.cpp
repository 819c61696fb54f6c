#include "fva/graph6.hpp"

#include <istream>
#include <sstream>

namespace fva {

namespace {

constexpr int kBias = 63;
constexpr char kHeader[] = ">>graph6<<";

[[noreturn]] void fail(std::size_t offset, const std::string& what) {
    throw ParseError("graph6: " + what + " at offset " + std::to_string(offset));
}

int sextet(std::string_view s, std::size_t offset, std::size_t base) {
    if (offset >= s.size()) fail(base + offset, "truncated input");
    int c = static_cast<unsigned char>(s[offset]);
    if (c < kBias || c > 126) fail(base + offset, "byte " + std::to_string(c) + " out of range");
    return c - kBias;
}

} // namespace

Graph decode_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kHeader)) {
        base = sizeof(kHeader) - 1;
        text.remove_prefix(base);
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) fail(base, "empty record");

    std::size_t pos = 0;
    long long n = 0;
    int first = sextet(text, pos++, base);
    if (first < 63) {
        n = first;
    } else {
        int second = sextet(text, pos, base);
        int width = 3;
        if (second == 63) {
            ++pos;
            width = 6;
        }
        for (int i = 0; i < width; ++i) n = (n << 6) | sextet(text, pos++, base);
        if ((width == 3 && n < 63) || (width == 6 && n < 258048))
            fail(base, "non-minimal length header");
    }
    if (n > (1 << 20)) fail(base, "vertex count too large");

    const long long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != body)
        fail(base + pos, "expected " + std::to_string(body) + " data bytes, found " +
                             std::to_string(text.size() - pos));

    Graph g(static_cast<int>(n));
    long long k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            std::size_t at = pos + static_cast<std::size_t>(k / 6);
            int b = sextet(text, at, base);
            if ((b >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    for (; k % 6 != 0; ++k) {
        std::size_t at = pos + static_cast<std::size_t>(k / 6);
        if ((sextet(text, at, base) >> (5 - k % 6)) & 1) fail(base + at, "nonzero padding bit");
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    std::string out;
    const long long n = g.order();
    if (n < 63) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n < 258048) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        out.push_back(decode_graph6(line));
    }
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1;
    if (!(in >> n) || n < 0) throw ParseError("edge list: missing vertex count");
    Graph g(static_cast<int>(n));
    long long u = 0, v = 0;
    while (in >> u) {
        if (!(in >> v)) throw ParseError("edge list: dangling endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("edge list: invalid edge " + std::to_string(u) + " " + std::to_string(v));
        if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            throw ParseError("edge list: repeated edge " + std::to_string(u) + " " + std::to_string(v));
    }
    if (!in.eof()) throw ParseError("edge list: non-numeric token");
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace fva
