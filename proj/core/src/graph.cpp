#include "kcolor/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kcolor {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0)
        throw std::invalid_argument("Graph: negative vertex count");
    Graph g;
    g.adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: vertex id out of range: (" +
                                        std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.m_ += static_cast<long long>(list.size());
    }
    g.m_ /= 2;
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

} // namespace kcolor
