#ifndef FIXSUB_GRAPH6_HPP
#define FIXSUB_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "fixsub/graph.hpp"

namespace fixsub {

// graph6 interchange format. Header encodes n; then the upper triangle
// x(i,j), taken column-wise ((0,1),(0,2),(1,2),(0,3),...), packed MSB-first
// into 6-bit groups, each printed as ASCII value + 63.

inline std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 63 <= n <= 258047: '~' followed by 18 bits in three 6-bit groups.
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int group = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = group << 1 | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + 63));
    return out;
}

inline Graph decode_graph6(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    std::size_t pos = 0;
    long n;
    if (text[0] == '~') {
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated header");
        if (text[1] == '~') throw std::invalid_argument("graph6: vertex count out of range");
        n = 0;
        for (int k = 1; k <= 3; ++k) {
            const int c = static_cast<unsigned char>(text[k]) - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad header byte");
            n = n << 6 | c;
        }
        pos = 4;
    } else {
        n = static_cast<unsigned char>(text[0]) - 63;
        if (n < 0 || n > 62) throw std::invalid_argument("graph6: bad header byte");
        pos = 1;
    }
    if (n < 1 || n > Graph::max_vertices)
        throw std::invalid_argument("graph6: vertex count out of [1, 64]");
    const long pair_bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((pair_bits + 5) / 6);
    if (text.size() != pos + body) throw std::invalid_argument("graph6: length mismatch");

    std::vector<Edge> es;
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const int c = static_cast<unsigned char>(text[pos + bit / 6]) - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("graph6: byte out of range");
            if (c >> (5 - bit % 6) & 1) es.emplace_back(i, j);
        }
    // Padding bits must be zero.
    for (long b = pair_bits; b < static_cast<long>(body) * 6; ++b) {
        const int c = static_cast<unsigned char>(text[pos + b / 6]) - 63;
        if (c >> (5 - b % 6) & 1) throw std::invalid_argument("graph6: nonzero padding");
    }
    return Graph(static_cast<int>(n), std::move(es));
}

} // namespace fixsub

#endif // FIXSUB_GRAPH6_HPP
