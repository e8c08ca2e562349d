#ifndef KCOLOR_METRICS_HPP
#define KCOLOR_METRICS_HPP

#include <vector>

#include "kcolor/coloring.hpp"
#include "kcolor/graph.hpp"
#include "kcolor/rational.hpp"

namespace kcolor {

/// One vertex whose neighborhood breaks the condition under test: it has
/// `same_color_neighbors` neighbors of its own color, strictly above
/// `threshold`.
struct Violation {
    int vertex = 0;
    int same_color_neighbors = 0;
    Rational threshold;
};

struct VerifyReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// d_i(v): number of neighbors of v carrying color i.
int color_degree(const Graph& g, const Coloring& c, int v, int color);

/// d_{c(v)}(v): neighbors of v sharing v's own color.
int same_color_degree(const Graph& g, const Coloring& c, int v);

/// b_1..b_k: per-color counts of monochrome edges (both endpoints color i).
std::vector<long long> monochrome_edge_counts(const Graph& g, const Coloring& c);

/// The potential sum over colors of b_i / p_i, exact. Zero iff the coloring
/// is proper.
Rational sigma(const Graph& g, const Coloring& c, const WeightVector& p);

/// Number of edges whose endpoints differ in color; equals m minus the sum
/// of the monochrome counts.
long long mixing_number(const Graph& g, const Coloring& c);

/// True iff strictly more than |N(v)|/k of v's neighbors share v's color,
/// decided by the integer comparison k * d_same > |N(v)|.
bool is_k_secure(const Graph& g, const Coloring& c, int v, int k);

/// Every vertex must have at most |N(v)|/k same-colored neighbors.
VerifyReport verify_integrated(const Graph& g, const Coloring& c, int k);

/// Every vertex v must satisfy d_{c(v)}(v) <= p_{c(v)} * d(v), exactly.
VerifyReport verify_proportional(const Graph& g, const Coloring& c, const WeightVector& p);

/// Every vertex must have at most u same-colored neighbors; u = 0 is the
/// proper-coloring check.
VerifyReport verify_defective(const Graph& g, const Coloring& c, long long u);

inline VerifyReport verify_proper(const Graph& g, const Coloring& c) {
    return verify_defective(g, c, 0);
}

/// Every vertex must have at most half of its neighbors sharing its color.
VerifyReport verify_unfriendly_partition(const Graph& g, const Coloring& c);

} // namespace kcolor

#endif
