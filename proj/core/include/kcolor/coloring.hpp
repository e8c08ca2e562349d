#ifndef KCOLOR_COLORING_HPP
#define KCOLOR_COLORING_HPP

#include <vector>

#include "kcolor/graph.hpp"
#include "kcolor/rational.hpp"

namespace kcolor {

/// Total assignment of colors 1..k to the vertices of a companion graph.
/// Not necessarily proper; colors[v] is indexed by 0-based vertex id.
struct Coloring {
    int k = 0;
    std::vector<int> colors;

    int vertex_count() const { return static_cast<int>(colors.size()); }
    int color_of(int v) const { return colors.at(static_cast<std::size_t>(v)); }
};

/// All n vertices assigned the same color.
Coloring uniform_coloring(int n, int k, int color = 1);

/// Throws std::invalid_argument unless c colors exactly the vertices of g
/// with values in 1..k.
void check_coloring(const Graph& g, const Coloring& c);

/// Per-color weights p_1..p_k with 0 < p_i <= 1 and sum >= 1. Each p_i caps
/// the fraction of v's neighborhood allowed to share v's color when v has
/// color i.
class WeightVector {
public:
    explicit WeightVector(std::vector<Rational> entries);

    /// p_i = 1/k for every color.
    static WeightVector uniform(int k);

    int size() const { return static_cast<int>(entries_.size()); }
    /// Weight of a 1-based color index.
    const Rational& weight(int color) const { return entries_.at(static_cast<std::size_t>(color - 1)); }
    const std::vector<Rational>& entries() const { return entries_; }

    bool is_uniform() const;

private:
    std::vector<Rational> entries_;
};

} // namespace kcolor

#endif
