#include "kcolor/coloring.hpp"

#include <stdexcept>
#include <string>

namespace kcolor {

Coloring uniform_coloring(int n, int k, int color) {
    if (n < 0 || k < 1 || color < 1 || color > k)
        throw std::invalid_argument("uniform_coloring: invalid arguments");
    return Coloring{k, std::vector<int>(static_cast<std::size_t>(n), color)};
}

void check_coloring(const Graph& g, const Coloring& c) {
    if (c.vertex_count() != g.vertex_count())
        throw std::invalid_argument("coloring covers " + std::to_string(c.vertex_count()) +
                                    " vertices, graph has " + std::to_string(g.vertex_count()));
    if (c.k < 1 && c.vertex_count() > 0)
        throw std::invalid_argument("coloring must have k >= 1");
    for (int v = 0; v < c.vertex_count(); ++v) {
        int color = c.colors[static_cast<std::size_t>(v)];
        if (color < 1 || color > c.k)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has color " +
                                        std::to_string(color) + ", outside 1.." +
                                        std::to_string(c.k));
    }
}

WeightVector::WeightVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("weight vector must not be empty");
    Rational sum(0);
    for (const Rational& p : entries_) {
        if (p <= Rational(0))
            throw std::invalid_argument("weights must be strictly positive, got " + p.str());
        if (p > Rational(1))
            throw std::invalid_argument("weights must be at most 1, got " + p.str());
        sum += p;
    }
    if (sum < Rational(1))
        throw std::invalid_argument("sum of weights must be >= 1, got " + sum.str());
}

WeightVector WeightVector::uniform(int k) {
    if (k < 1)
        throw std::invalid_argument("uniform weights need k >= 1");
    return WeightVector(std::vector<Rational>(static_cast<std::size_t>(k), Rational(1, k)));
}

bool WeightVector::is_uniform() const {
    Rational expected(1, size());
    for (const Rational& p : entries_)
        if (p != expected)
            return false;
    return true;
}

} // namespace kcolor
