#pragma once

// Text formats for graphs: a plain edge list and graph6.
//
// Edge list: first line "n m", then m lines "u v" with 1 <= u < v <= n.
// Blank lines and lines starting with '#' are ignored.

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "flagbal/errors.hpp"
#include "flagbal/graph.hpp"

namespace flagbal {

enum class GraphFormat { Auto, EdgeList, Graph6 };

struct ParsedGraphs {
    std::vector<Graph> graphs;
    std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

inline bool is_blank(std::string_view line) {
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

inline std::vector<std::uint64_t> read_numbers(std::string_view line, std::size_t lineno) {
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        if (!std::isdigit(static_cast<unsigned char>(line[i])))
            throw ParseError("line " + std::to_string(lineno) + ": expected a nonnegative integer");
        std::uint64_t v = 0;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
            const auto digit = static_cast<std::uint64_t>(line[i] - '0');
            if (v > (UINT64_MAX - digit) / 10) throw ParseError("line " + std::to_string(lineno) + ": number too large");
            v = v * 10 + digit;
            ++i;
        }
        if (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            throw ParseError("line " + std::to_string(lineno) + ": expected a nonnegative integer");
        out.push_back(v);
    }
    return out;
}

}  // namespace detail

inline ParsedGraphs parse_edge_list(std::string_view text) {
    ParsedGraphs result;
    const auto lines = detail::split_lines(text);
    std::size_t i = 0;
    auto next_content = [&]() -> std::size_t {
        while (i < lines.size() && (detail::is_blank(lines[i]) || lines[i].front() == '#')) ++i;
        return i;
    };

    if (next_content() == lines.size()) throw ParseError("edge list: missing \"n m\" header");
    const auto header = detail::read_numbers(lines[i], i + 1);
    if (header.size() != 2) throw ParseError("edge list: header must be \"n m\"");
    const std::uint64_t n = header[0];
    const std::uint64_t m = header[1];
    if (n > Graph::kMaxVertices) throw ParseError("edge list: at most 64 vertices are supported");
    ++i;

    Graph g(static_cast<std::size_t>(n));
    for (std::uint64_t e = 0; e < m; ++e) {
        if (next_content() == lines.size())
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(e));
        const auto uv = detail::read_numbers(lines[i], i + 1);
        if (uv.size() != 2) throw ParseError("line " + std::to_string(i + 1) + ": expected \"u v\"");
        const auto [u, v] = std::pair{uv[0], uv[1]};
        if (u < 1 || v < 1 || u > n || v > n)
            throw ParseError("line " + std::to_string(i + 1) + ": vertex index out of range");
        if (u == v) throw ParseError("line " + std::to_string(i + 1) + ": self-loop");
        if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            result.warnings.push_back("line " + std::to_string(i + 1) + ": duplicate edge ignored");
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        ++i;
    }
    if (next_content() != lines.size()) throw ParseError("line " + std::to_string(i + 1) + ": unexpected extra content");
    result.graphs.push_back(std::move(g));
    return result;
}

inline Graph parse_graph6_line(std::string_view line) {
    if (line.rfind(">>graph6<<", 0) == 0) line.remove_prefix(10);
    for (char c : line)
        if (c < 63 || c > 126) throw ParseError("graph6: invalid character");
    if (line.empty()) throw ParseError("graph6: empty line");

    std::size_t pos = 0;
    auto take = [&]() -> std::uint64_t {
        if (pos >= line.size()) throw ParseError("graph6: truncated");
        return static_cast<std::uint64_t>(line[pos++] - 63);
    };
    std::uint64_t n = take();
    if (n == 63) {
        std::size_t width = 3;
        if (pos < line.size() && line[pos] == '~') {
            ++pos;
            width = 6;
        }
        n = 0;
        for (std::size_t j = 0; j < width; ++j) n = (n << 6) | take();
    }
    if (n > Graph::kMaxVertices) throw ParseError("graph6: at most 64 vertices are supported");

    const std::uint64_t bits = n * (n - (n > 0)) / 2;
    if (line.size() - pos != (bits + 5) / 6) throw ParseError("graph6: wrong length for " + std::to_string(n) + " vertices");

    Graph g(static_cast<std::size_t>(n));
    std::uint64_t e = 0;
    for (Vertex j = 2; j <= n; ++j) {
        for (Vertex i = 1; i < j; ++i, ++e) {
            const auto chunk = static_cast<std::uint64_t>(line[pos + e / 6] - 63);
            if ((chunk >> (5 - e % 6)) & 1U) g.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const auto last = static_cast<std::uint64_t>(line.back() - 63);
        if ((last & ((std::uint64_t{1} << (6 - bits % 6)) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
    }
    return g;
}

inline ParsedGraphs parse_graph6(std::string_view text) {
    ParsedGraphs result;
    for (auto line : detail::split_lines(text)) {
        if (detail::is_blank(line)) continue;
        result.graphs.push_back(parse_graph6_line(line));
    }
    if (result.graphs.empty()) throw ParseError("graph6: no graphs in input");
    return result;
}

inline std::string to_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    unsigned chunk = 0;
    unsigned filled = 0;
    for (Vertex j = 2; j <= n; ++j) {
        for (Vertex i = 1; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled != 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
    return out;
}

// Edge-list if the first significant byte is a digit or '#', graph6 otherwise.
inline GraphFormat detect_format(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return (std::isdigit(static_cast<unsigned char>(c)) || c == '#') ? GraphFormat::EdgeList : GraphFormat::Graph6;
    }
    throw ParseError("empty graph input");
}

inline ParsedGraphs parse_graphs(std::string_view text, GraphFormat format = GraphFormat::Auto) {
    if (format == GraphFormat::Auto) format = detect_format(text);
    return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

inline Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto) {
    auto parsed = parse_graphs(text, format);
    if (parsed.graphs.size() != 1) throw ParseError("expected exactly one graph in input");
    return std::move(parsed.graphs.front());
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (Vertex u = 1; u <= g.order(); ++u)
        for (Vertex v = u + 1; v <= g.order(); ++v)
            if (g.adjacent(u, v)) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace flagbal
