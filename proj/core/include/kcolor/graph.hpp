#ifndef KCOLOR_GRAPH_HPP
#define KCOLOR_GRAPH_HPP

#include <utility>
#include <vector>

namespace kcolor {

/// Undirected edge as a pair of 0-based vertex ids.
using Edge = std::pair<int, int>;

/// Simple undirected graph over vertices 0..n-1, stored as sorted adjacency
/// lists. Self-loops are rejected at construction; duplicate edges and both
/// orientations collapse to a single edge. Immutable once built, so a Graph
/// may be shared freely across threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Ids must lie in [0, n); self-loops
    /// throw std::invalid_argument. Duplicates are collapsed silently.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;

    /// All edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

private:
    std::vector<std::vector<int>> adj_;
    long long m_ = 0;
};

/// Maximum degree over all vertices; 0 for empty or edgeless graphs.
int max_degree(const Graph& g);

} // namespace kcolor

#endif
