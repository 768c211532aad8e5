#ifndef LONGHOLE_FORMAT_HPP
#define LONGHOLE_FORMAT_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "longhole/graph.hpp"

namespace longhole {

namespace detail {

inline void strip_trailing_newline(std::string_view& s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
}

}  // namespace detail

/// Parses one line in McKay's graph6 format. The ">>graph6<<" header is
/// tolerated. Rejects out-of-range bytes, truncated data and nonzero padding.
inline Graph parse_graph6(std::string_view text) {
    detail::strip_trailing_newline(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    if (text.empty()) throw std::invalid_argument("graph6: empty input");

    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };

    long long n = 0;
    if (text[0] != '~') {
        n = byte(0);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated length field");
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        if (n < 63) throw std::invalid_argument("graph6: non-canonical length field");
        pos = 4;
    } else {
        if (text.size() < 8) throw std::invalid_argument("graph6: truncated length field");
        n = 0;
        for (int i = 2; i < 8; ++i) n = (n << 6) | byte(static_cast<std::size_t>(i));
        if (n < 258048) throw std::invalid_argument("graph6: non-canonical length field");
        pos = 8;
    }
    if (n > 1'000'000) throw std::invalid_argument("graph6: vertex count too large");

    const long long bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != need) throw std::invalid_argument("graph6: wrong data length");

    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (std::size_t i = 0; i < need; ++i) {
        int w = byte(pos + i);
        for (int k = 5; k >= 0; --k, ++bit) {
            bool on = (w >> k) & 1;
            if (bit >= bits) {
                if (on) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (on) {
                // upper-triangle column order: (0,1),(0,2),(1,2),(0,3),...
                long long b = bit;
                int col = 1;
                while (b >= col) b -= col++;
                g.add_edge(static_cast<Vertex>(b), col);
            }
        }
    }
    return g;
}

inline std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: vertex count too large to encode");
    }
    int acc = 0, nb = 0;
    for (Vertex col = 1; col < n; ++col)
        for (Vertex row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nb = 0;
            }
        }
    if (nb) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

/// Edge-list format: first line "n m", then m lines "u v".
/// Loops, duplicate edges and out-of-range ids are rejected.
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("edge list: bad header line");
    if (n > 1'000'000) throw std::invalid_argument("edge list: vertex count too large");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge list: vertex id out of range");
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));  // throws on loop/duplicate
    }
    long long extra;
    if (in >> extra) throw std::invalid_argument("edge list: trailing data");
    return g;
}

inline std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace longhole

#endif
