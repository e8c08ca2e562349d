#include "kcolor/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace kcolor {

Family family_from_name(std::string_view name) {
    if (name == "complete")
        return Family::Complete;
    if (name == "cycle")
        return Family::Cycle;
    if (name == "path")
        return Family::Path;
    if (name == "star")
        return Family::Star;
    if (name == "petersen")
        return Family::Petersen;
    throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

Graph gen_named(Family family, int n) {
    if (family != Family::Petersen && n < 1)
        throw std::invalid_argument("gen_named: n must be >= 1");
    std::vector<Edge> edges;
    switch (family) {
    case Family::Complete:
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    case Family::Cycle:
        if (n < 3)
            throw std::invalid_argument("gen_named: a cycle needs n >= 3");
        for (int u = 0; u < n; ++u)
            edges.emplace_back(u, (u + 1) % n);
        return Graph::from_edges(n, edges);
    case Family::Path:
        for (int u = 0; u + 1 < n; ++u)
            edges.emplace_back(u, u + 1);
        return Graph::from_edges(n, edges);
    case Family::Star:
        // vertex 0 is the center, 1..n the leaves
        for (int v = 1; v <= n; ++v)
            edges.emplace_back(0, v);
        return Graph::from_edges(n + 1, edges);
    case Family::Petersen:
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);         // outer cycle
            edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
            edges.emplace_back(i, 5 + i);               // spokes
        }
        return Graph::from_edges(10, edges);
    }
    throw std::invalid_argument("gen_named: unknown family");
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0)
        throw std::invalid_argument("gen_gnp: n must be >= 0");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("gen_gnp: p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            // 53-bit draw in [0, 1); avoids std::uniform_real_distribution,
            // whose output is not pinned down by the standard.
            double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < p)
                edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

} // namespace kcolor
