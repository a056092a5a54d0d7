#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpath/graph.hpp"

namespace kpath {

/// Largest order representable with the one-byte graph6 header.
inline constexpr int graph6_short_form_max = 62;

/// graph6 encoding: header byte n+63, then the upper triangle read column
/// by column (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed big-endian into
/// 6-bit groups, each offset by 63, zero-padded. Throws OrderTooLarge for
/// n > 62.
std::string encode_graph6(const Graph& g);

/// Strict inverse of encode_graph6. Rejects long-form headers and the
/// ">>graph6<<" prefix (MalformedHeader), body bytes outside 63..126
/// (CharOutOfRange), wrong body length (BadLength) and set padding bits
/// (NonzeroPadding).
Graph decode_graph6(std::string_view text);

/// One graph6 string per line, each linefeed-terminated.
void write_graph6_list(std::ostream& out, std::span<const Graph> graphs);
std::vector<Graph> read_graph6_list(std::istream& in);

} // namespace kpath
