#ifndef KCOLOR_CUT_HPP
#define KCOLOR_CUT_HPP

#include <vector>

#include "kcolor/coloring.hpp"
#include "kcolor/graph.hpp"
#include "kcolor/rational.hpp"
#include "kcolor/solver.hpp"

namespace kcolor {

/// Vertex set split into k disjoint parts covering all of V. Empty parts
/// are legal; parts[i] holds the vertices of part i+1 in ascending order.
struct Partition {
    int k = 0;
    std::vector<std::vector<int>> parts;
};

/// Part i collects the vertices of color i.
Partition partition_from_coloring(const Coloring& c);

/// Number of edges whose endpoints lie in different parts. Throws
/// std::invalid_argument if some vertex of g is missing from all parts or
/// present in more than one.
long long cut_size(const Graph& g, const Partition& part);

/// (k-1)/k * m, the guaranteed mixed-edge count of any integrated
/// k-coloring. Cut sizes are integers, so callers compare against
/// .ceil() of this value. Requires k >= 2 and m >= 0.
Rational mixed_edge_lower_bound(long long m, int k);

struct CutResult {
    Partition partition;
    long long cut_edges = 0;
};

/// k-way cut with at least ceil((k-1)m/k) crossing edges, extracted from an
/// integrated k-coloring.
CutResult k_max_cut(const Graph& g, int k, const SolveConfig& cfg = {});

} // namespace kcolor

#endif
