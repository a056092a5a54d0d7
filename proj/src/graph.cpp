#include "kpath/graph.hpp"

#include <string>

#include "kpath/error.hpp"

namespace kpath {

Graph::Graph(int n) : n_(n)
{
    if (n < 0) throw Error(Errc::invalid_order, "negative order");
    if (n > max_order)
        throw Error(Errc::order_too_large, "order " + std::to_string(n) + " exceeds " + std::to_string(max_order));
}

void Graph::add_edge(int u, int v)
{
    if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(u));
    rows_[u] |= Mask{1} << v;
    rows_[v] |= Mask{1} << u;
}

void Graph::remove_edge(int u, int v)
{
    rows_[u] &= ~(Mask{1} << v);
    rows_[v] &= ~(Mask{1} << u);
}

std::size_t Graph::edge_count() const noexcept
{
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(std::popcount(rows_[v]));
    return twice / 2;
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out[v] = degree(v);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const
{
    if (n_ == 0) return true;
    Mask seen = 1, frontier = 1;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= rows_[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all_vertices();
}

bool Graph::is_clique(Mask vertices) const noexcept
{
    for (Mask m = vertices; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        const Mask others = vertices & ~(Mask{1} << v);
        if ((rows_[v] & others) != others) return false;
    }
    return true;
}

Graph Graph::without_vertex(int v) const
{
    Graph out(n_ - 1);
    for (int a = 0; a < n_; ++a) {
        if (a == v) continue;
        for (int b = a + 1; b < n_; ++b) {
            if (b == v || !has_edge(a, b)) continue;
            out.add_edge(a < v ? a : a - 1, b < v ? b : b - 1);
        }
    }
    return out;
}

Graph Graph::permuted(const std::vector<int>& perm) const
{
    Graph out(n_);
    for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

Graph complete_graph(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n)
{
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

} // namespace kpath
