#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "absx/graph.hpp"

namespace absx {

// Edge-list text: first token is n, then whitespace-separated 0-based pairs "u v".
inline Graph from_edge_list(std::string_view text) {
    std::vector<long long> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i == text.size()) break;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
        if (ec != std::errc() || ptr != text.data() + j)
            throw ParseError("edge list: not an integer: '" + std::string(text.substr(i, j - i)) + "'");
        tokens.push_back(value);
        i = j;
    }
    if (tokens.empty()) throw ParseError("edge list: missing vertex count");
    const long long n = tokens.front();
    if (n < 1 || n > kMaxOrder) throw ParseError("edge list: vertex count must be in [1, 64]");
    if (tokens.size() % 2 != 1) throw ParseError("edge list: dangling vertex index");

    GraphBuilder b(static_cast<int>(n));
    for (std::size_t t = 1; t < tokens.size(); t += 2) {
        const long long u = tokens[t];
        const long long v = tokens[t + 1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge list: vertex index out of range in pair " + std::to_string(u) + " " +
                             std::to_string(v));
        if (u == v) throw ParseError("edge list: self-loop at vertex " + std::to_string(u));
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return std::move(b).build();
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

namespace detail {

// Bit index of pair (i, j), i < j, in graph6 column-major upper-triangle order.
constexpr std::size_t graph6_pair_index(int i, int j) {
    return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
}

inline std::string graph6_header(int n) {
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    return out;
}

// Encodes n plus a packed upper-triangle bitstring (LSB-first words).
inline std::string encode_graph6(int n, const std::vector<std::uint64_t>& words) {
    std::string out = graph6_header(n);
    const std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
    for (std::size_t start = 0; start < total; start += 6) {
        int chunk = 0;
        for (std::size_t k = 0; k < 6; ++k) {
            const std::size_t t = start + k;
            const bool set = t < total && ((words[t / 64] >> (t % 64)) & 1U);
            chunk = (chunk << 1) | (set ? 1 : 0);
        }
        out.push_back(static_cast<char>(chunk + 63));
    }
    return out;
}

inline std::vector<std::uint64_t> upper_triangle_words(const Graph& g) {
    const int n = g.order();
    const std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<std::uint64_t> words((total + 63) / 64, 0);
    for (int j = 1; j < n; ++j)
        for_each_bit(g.neighbors(j) & low_bits(j), [&](int i) {
            const std::size_t t = graph6_pair_index(i, j);
            words[t / 64] |= std::uint64_t{1} << (t % 64);
        });
    return words;
}

inline Graph graph_from_upper_triangle(int n, const std::vector<std::uint64_t>& words) {
    GraphBuilder b(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            const std::size_t t = graph6_pair_index(i, j);
            if ((words[t / 64] >> (t % 64)) & 1U) b.add_edge(i, j);
        }
    return std::move(b).build();
}

} // namespace detail

inline std::string to_graph6(const Graph& g) {
    return detail::encode_graph6(g.order(), detail::upper_triangle_words(g));
}

inline Graph from_graph6(std::string_view text) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    if (text.empty()) throw ParseError("graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126) throw ParseError("graph6: byte outside the printable range 63..126");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != '~') {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~') throw ParseError("graph6: order too large");
        if (text.size() < 4) throw ParseError("graph6: truncated order header");
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - 63);
        pos = 4;
    }
    if (n < 1 || n > kMaxOrder) throw ParseError("graph6: order must be in [1, 64], got " + std::to_string(n));

    const std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = (total + 5) / 6;
    if (text.size() - pos != expected)
        throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes, got " +
                         std::to_string(text.size() - pos));

    std::vector<std::uint64_t> words((total + 63) / 64, 0);
    for (std::size_t t = 0; t < total; ++t) {
        const int chunk = text[pos + t / 6] - 63;
        if ((chunk >> (5 - t % 6)) & 1) words[t / 64] |= std::uint64_t{1} << (t % 64);
    }
    return detail::graph_from_upper_triangle(static_cast<int>(n), words);
}

} // namespace absx
