#pragma once

#include <vector>

#include "kpath/graph.hpp"
#include "kpath/sequence.hpp"

namespace kpath {

/// Clique path F_1, ..., F_{n-k} of a k-path graph together with the
/// vertex leaving (removed[i] in F_i \ F_{i+1}) and entering
/// (added[i] in F_{i+1} \ F_i) at each step.
struct CoreTrace {
    std::vector<Graph::Mask> cliques;
    std::vector<int> removed;
    std::vector<int> added;
};

/// Immutable k-path graph with the construction data that produced it.
class KPathGraph {
public:
    KPathGraph(int k, Graph graph, std::vector<int> coloring, std::vector<int> vertex_order, CoreTrace trace);

    int k() const noexcept { return k_; }
    int order() const noexcept { return graph_.order(); }
    const Graph& graph() const noexcept { return graph_; }
    /// Color of each vertex, in 1..k+1.
    const std::vector<int>& coloring() const noexcept { return coloring_; }
    /// Base clique first, then added vertices in order.
    const std::vector<int>& vertex_order() const noexcept { return vertex_order_; }
    const CoreTrace& trace() const noexcept { return trace_; }

private:
    int k_;
    Graph graph_;
    std::vector<int> coloring_;
    std::vector<int> vertex_order_;
    CoreTrace trace_;
};

/// kn - k(k+1)/2.
constexpr std::size_t kpath_edge_count(int k, int n) noexcept
{
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(n) -
           static_cast<std::size_t>(k) * static_cast<std::size_t>(k + 1) / 2;
}

/// Reconstructs the unique k-path graph with coloring sequence c.
///
/// Vertices 0..k form the first clique, colored 1..k+1 in index order.
/// Step i adds vertex k+1+i with color c[i], joined to the current clique
/// minus its member of color c[i], which leaves the clique.
/// Throws LengthMismatch unless c.size() == n-k-1.
KPathGraph build_from_sequence(const ColorSequence& c, int n);

/// Adjacency-only variant of build_from_sequence for hot loops.
Graph build_graph(const ColorSequence& c, int n);

/// Canonical sequence of a k-path graph: walks the clique path from each of
/// its two simplicial degree-k ends, normalizes both color sequences, and
/// returns the lexicographically smaller. Throws NotKPath if g is not a
/// k-path graph.
ColorSequence derive_color_sequence(const Graph& g, int k);

/// K_{k-1} joined with P_{n-k+1}: vertices 0..k-2 are the clique, the path
/// runs through k-1..n-1.
KPathGraph generalized_fan(int k, int n);

/// P_n^k: i ~ j iff |i - j| <= k.
KPathGraph ribbon(int k, int n);

/// Sequence 1,2,1,2,...,1,2,3 of length n-k-1. For lengths below 3 no such
/// normalized word exists and the (unique) graph of that order is returned.
KPathGraph weak_generalized_fan(int k, int n);

ColorSequence generalized_fan_sequence(int k, int n);
ColorSequence ribbon_sequence(int k, int n);
ColorSequence weak_generalized_fan_sequence(int k, int n);

} // namespace kpath
