#include "kpath/kpath_graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <string>

#include "kpath/error.hpp"

namespace kpath {

namespace {

using Mask = Graph::Mask;

constexpr Mask bit(int v) { return Mask{1} << v; }

void check_family_order(int k, int n, int min_n)
{
    if (k < 2) throw Error(Errc::invalid_order, "k must be at least 2, got " + std::to_string(k));
    if (n < min_n)
        throw Error(Errc::invalid_order, "order " + std::to_string(n) + " below minimum " + std::to_string(min_n));
    if (n > max_order) throw Error(Errc::order_too_large, "order " + std::to_string(n));
}

void check_length(const ColorSequence& c, int n)
{
    check_family_order(c.k(), n, c.k() + 1);
    if (static_cast<int>(c.size()) != n - c.k() - 1)
        throw Error(Errc::length_mismatch, "sequence length " + std::to_string(c.size()) + " but order " +
                                               std::to_string(n) + " needs " + std::to_string(n - c.k() - 1));
}

// Colors 1..k+1 index the current clique member holding that color.
template <typename OnStep>
Graph build_impl(const ColorSequence& c, int n, OnStep&& on_step)
{
    check_length(c, n);
    const int k = c.k();
    Graph g(n);
    std::vector<int> holder(static_cast<std::size_t>(k) + 2);
    for (int v = 0; v <= k; ++v) {
        holder[v + 1] = v;
        for (int u = 0; u < v; ++u) g.add_edge(u, v);
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int color = c[i];
        const int added = k + 1 + static_cast<int>(i);
        const int removed = holder[color];
        for (int col = 1; col <= k + 1; ++col)
            if (col != color) g.add_edge(added, holder[col]);
        holder[color] = added;
        on_step(removed, added, color);
    }
    return g;
}

// Walks the clique path starting at simplicial end `start`; returns the raw
// (unnormalized) color sequence, or nullopt if the walk is not a k-path
// construction.
std::optional<std::vector<int>> walk_from(const Graph& g, int k, int start)
{
    const int n = g.order();
    Mask clique = g.neighbors(start) | bit(start);
    Mask processed = clique;
    std::array<int, max_order> color{};
    {
        int next = 1;
        for (Mask m = clique; m; m &= m - 1) color[std::countr_zero(m)] = next++;
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n - k - 1));
    for (int step = 0; step < n - k - 1; ++step) {
        int found = -1;
        for (Mask rest = g.all_vertices() & ~processed; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int shared = std::popcount(g.neighbors(v) & clique);
            if (shared > k) return std::nullopt;
            if (shared == k) {
                if (found >= 0) return std::nullopt;
                found = v;
            }
        }
        if (found < 0) return std::nullopt;
        const Mask leaving = clique & ~g.neighbors(found);
        const int removed = std::countr_zero(leaving);
        color[found] = color[removed];
        out.push_back(color[removed]);
        clique = (clique & ~leaving) | bit(found);
        processed |= bit(found);
    }
    return out;
}

std::vector<int> alternating(std::size_t length)
{
    std::vector<int> out(length);
    for (std::size_t i = 0; i < length; ++i) out[i] = (i % 2 == 0) ? 1 : 2;
    return out;
}

} // namespace

KPathGraph::KPathGraph(int k, Graph graph, std::vector<int> coloring, std::vector<int> vertex_order,
                       CoreTrace trace)
    : k_(k), graph_(graph), coloring_(std::move(coloring)), vertex_order_(std::move(vertex_order)),
      trace_(std::move(trace))
{
}

Graph build_graph(const ColorSequence& c, int n)
{
    return build_impl(c, n, [](int, int, int) {});
}

KPathGraph build_from_sequence(const ColorSequence& c, int n)
{
    const int k = c.k();
    std::vector<int> coloring(static_cast<std::size_t>(std::max(n, 0)));
    CoreTrace trace;
    Mask clique = 0;
    for (int v = 0; v <= k && v < n; ++v) {
        coloring[v] = v + 1;
        clique |= bit(v);
    }
    trace.cliques.push_back(clique);
    Graph g = build_impl(c, n, [&](int removed, int added, int color) {
        coloring[added] = color;
        clique = (clique & ~bit(removed)) | bit(added);
        trace.cliques.push_back(clique);
        trace.removed.push_back(removed);
        trace.added.push_back(added);
    });
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[v] = v;
    return KPathGraph(k, g, std::move(coloring), std::move(order), std::move(trace));
}

ColorSequence derive_color_sequence(const Graph& g, int k)
{
    const int n = g.order();
    if (k < 2) throw Error(Errc::invalid_order, "k must be at least 2");
    if (n < k + 1) throw Error(Errc::not_kpath, "order " + std::to_string(n) + " below k+1");
    if (g.edge_count() != kpath_edge_count(k, n))
        throw Error(Errc::not_kpath, "edge count " + std::to_string(g.edge_count()) + " != " +
                                         std::to_string(kpath_edge_count(k, n)));
    if (n == k + 1) return ColorSequence(k);

    std::vector<int> ends;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < k) throw Error(Errc::not_kpath, "vertex " + std::to_string(v) + " has degree below k");
        if (g.degree(v) == k) ends.push_back(v);
    }
    if (ends.size() != 2)
        throw Error(Errc::not_kpath, std::to_string(ends.size()) + " vertices of degree k, expected 2");

    std::optional<ColorSequence> best;
    for (int end : ends) {
        if (!g.is_clique(g.neighbors(end)))
            throw Error(Errc::not_kpath, "degree-k vertex " + std::to_string(end) + " is not simplicial");
        auto raw = walk_from(g, k, end);
        if (!raw) throw Error(Errc::not_kpath, "clique path stalls from vertex " + std::to_string(end));
        ColorSequence candidate(k);
        try {
            candidate = normalize(*raw, k);
        } catch (const Error& e) {
            throw Error(Errc::not_kpath, std::string("clique tree is not a path (") + e.what() + ")");
        }
        if (!best || candidate < *best) best = std::move(candidate);
    }
    return *best;
}

ColorSequence generalized_fan_sequence(int k, int n)
{
    check_family_order(k, n, k + 1);
    return ColorSequence(k, alternating(static_cast<std::size_t>(n - k - 1)));
}

ColorSequence ribbon_sequence(int k, int n)
{
    check_family_order(k, n, k + 1);
    std::vector<int> entries(static_cast<std::size_t>(n - k - 1));
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = static_cast<int>(i % (k + 1)) + 1;
    return ColorSequence(k, std::move(entries));
}

ColorSequence weak_generalized_fan_sequence(int k, int n)
{
    check_family_order(k, n, k + 2);
    const auto length = static_cast<std::size_t>(n - k - 1);
    std::vector<int> entries = alternating(length);
    if (length >= 3) entries.back() = 3;
    return ColorSequence(k, std::move(entries));
}

KPathGraph generalized_fan(int k, int n)
{
    check_family_order(k, n, k + 1);
    const int hub = k - 1;  // clique K_{k-1} occupies 0..hub-1
    Graph g(n);
    std::vector<int> coloring(static_cast<std::size_t>(n));
    for (int u = 0; u < hub; ++u) {
        coloring[u] = u + 3;
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    for (int v = hub; v < n; ++v) {
        coloring[v] = ((v - hub) % 2 == 0) ? 1 : 2;
        if (v + 1 < n) g.add_edge(v, v + 1);
    }
    const Mask hub_mask = (Mask{1} << hub) - 1;
    CoreTrace trace;
    for (int p = hub; p + 1 < n; ++p) trace.cliques.push_back(hub_mask | bit(p) | bit(p + 1));
    for (int p = hub; p + 2 < n; ++p) {
        trace.removed.push_back(p);
        trace.added.push_back(p + 2);
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[v] = v;
    return KPathGraph(k, g, std::move(coloring), std::move(order), std::move(trace));
}

KPathGraph ribbon(int k, int n)
{
    check_family_order(k, n, k + 1);
    Graph g(n);
    std::vector<int> coloring(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        coloring[u] = u % (k + 1) + 1;
        for (int v = u + 1; v < n && v - u <= k; ++v) g.add_edge(u, v);
    }
    CoreTrace trace;
    for (int first = 0; first + k < n; ++first) {
        Mask clique = 0;
        for (int v = first; v <= first + k; ++v) clique |= bit(v);
        trace.cliques.push_back(clique);
        if (first + k + 1 < n) {
            trace.removed.push_back(first);
            trace.added.push_back(first + k + 1);
        }
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[v] = v;
    return KPathGraph(k, g, std::move(coloring), std::move(order), std::move(trace));
}

KPathGraph weak_generalized_fan(int k, int n)
{
    return build_from_sequence(weak_generalized_fan_sequence(k, n), n);
}

} // namespace kpath
