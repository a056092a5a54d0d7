#include "kpath/graph6.hpp"

#include <string>

#include "kpath/error.hpp"

namespace kpath {

namespace {

constexpr int bias = 63;

std::size_t body_bytes(int n)
{
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    return (bits + 5) / 6;
}

} // namespace

std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > graph6_short_form_max)
        throw Error(Errc::order_too_large, "graph6 short form holds at most 62 vertices, got " + std::to_string(n));

    std::string out;
    out.reserve(1 + body_bytes(n));
    out.push_back(static_cast<char>(n + bias));

    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + bias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + bias));
    return out;
}

Graph decode_graph6(std::string_view text)
{
    if (text.empty()) throw Error(Errc::malformed_header, "empty string");
    const int header = static_cast<unsigned char>(text[0]);
    if (header < bias || header > bias + graph6_short_form_max)
        throw Error(Errc::malformed_header, "header byte " + std::to_string(header) + " is not a short-form order");
    const int n = header - bias;

    const std::string_view body = text.substr(1);
    for (std::size_t p = 0; p < body.size(); ++p) {
        const int byte = static_cast<unsigned char>(body[p]);
        if (byte < bias || byte > 126)
            throw Error(Errc::char_out_of_range, "byte " + std::to_string(byte) + " at offset " + std::to_string(p + 1));
    }
    if (body.size() != body_bytes(n))
        throw Error(Errc::bad_length, "order " + std::to_string(n) + " needs " + std::to_string(body_bytes(n)) +
                                          " body bytes, got " + std::to_string(body.size()));

    Graph g(n);
    std::size_t bit_index = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit_index) {
            const int byte = static_cast<unsigned char>(body[bit_index / 6]) - bias;
            if ((byte >> (5 - bit_index % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (bit_index % 6 != 0) {
        const int last = static_cast<unsigned char>(body.back()) - bias;
        const int pad = 6 - static_cast<int>(bit_index % 6);
        if ((last & ((1 << pad) - 1)) != 0) throw Error(Errc::nonzero_padding, "padding bits set in final byte");
    }
    return g;
}

void write_graph6_list(std::ostream& out, std::span<const Graph> graphs)
{
    for (const Graph& g : graphs) out << encode_graph6(g) << '\n';
}

std::vector<Graph> read_graph6_list(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(decode_graph6(line));
    }
    return out;
}

} // namespace kpath
