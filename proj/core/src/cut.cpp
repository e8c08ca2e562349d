#include "kcolor/cut.hpp"

#include <stdexcept>
#include <string>

#include "kcolor/metrics.hpp"

namespace kcolor {

Partition partition_from_coloring(const Coloring& c) {
    Partition part;
    part.k = c.k;
    part.parts.resize(static_cast<std::size_t>(c.k));
    for (int v = 0; v < c.vertex_count(); ++v) {
        int color = c.colors[static_cast<std::size_t>(v)];
        if (color < 1 || color > c.k)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has color " +
                                        std::to_string(color) + ", outside 1.." +
                                        std::to_string(c.k));
        part.parts[static_cast<std::size_t>(color - 1)].push_back(v);
    }
    return part;
}

long long cut_size(const Graph& g, const Partition& part) {
    int n = g.vertex_count();
    std::vector<int> part_of(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < static_cast<int>(part.parts.size()); ++i) {
        for (int v : part.parts[static_cast<std::size_t>(i)]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("partition names vertex " + std::to_string(v) +
                                            ", graph has " + std::to_string(n));
            if (part_of[static_cast<std::size_t>(v)] != 0)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " appears in more than one part");
            part_of[static_cast<std::size_t>(v)] = i + 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (part_of[static_cast<std::size_t>(v)] == 0)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is in no part");
    long long crossing = 0;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v && part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)])
                ++crossing;
    return crossing;
}

Rational mixed_edge_lower_bound(long long m, int k) {
    if (k < 2)
        throw std::invalid_argument("mixed_edge_lower_bound: k must be >= 2");
    if (m < 0)
        throw std::invalid_argument("mixed_edge_lower_bound: m must be >= 0");
    return Rational(k - 1, k) * Rational(m);
}

CutResult k_max_cut(const Graph& g, int k, const SolveConfig& cfg) {
    SolveResult solved = integrated_coloring(g, k, cfg);
    Partition part = partition_from_coloring(solved.coloring);
    return CutResult{std::move(part), mixing_number(g, solved.coloring)};
}

} // namespace kcolor
