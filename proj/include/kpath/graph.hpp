#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace kpath {

inline constexpr int max_order = 64;

/// Simple undirected graph on at most 64 vertices, stored as one 64-bit
/// neighbourhood mask per vertex. Fixed-size storage, so copies never
/// allocate.
class Graph {
public:
    using Mask = std::uint64_t;

    Graph() = default;
    /// Throws OrderTooLarge when n > 64.
    explicit Graph(int n);

    int order() const noexcept { return n_; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }

    Mask neighbors(int v) const noexcept { return rows_[v]; }
    int degree(int v) const noexcept { return std::popcount(rows_[v]); }
    std::size_t edge_count() const noexcept;
    std::vector<int> degrees() const;

    /// Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;
    bool is_clique(Mask vertices) const noexcept;

    /// Graph with vertex v deleted; later vertices shift down by one.
    Graph without_vertex(int v) const;

    /// Relabeled copy: vertex i of this graph becomes perm[i].
    Graph permuted(const std::vector<int>& perm) const;

    Mask all_vertices() const noexcept { return n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1); }

    friend bool operator==(const Graph& a, const Graph& b) noexcept
    {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    int n_ = 0;
    std::array<Mask, max_order> rows_{};
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

} // namespace kpath
