#include "kcolor/metrics.hpp"

#include <stdexcept>
#include <string>

namespace kcolor {

namespace {

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

void check_sizes(const Graph& g, const Coloring& c) {
    if (c.vertex_count() != g.vertex_count())
        throw std::invalid_argument("coloring/graph size mismatch");
}

} // namespace

int color_degree(const Graph& g, const Coloring& c, int v, int color) {
    check_sizes(g, c);
    check_vertex(g, v);
    if (color < 1 || color > c.k)
        throw std::invalid_argument("color " + std::to_string(color) + " out of range 1.." +
                                    std::to_string(c.k));
    int count = 0;
    for (int u : g.neighbors(v))
        if (c.colors[static_cast<std::size_t>(u)] == color)
            ++count;
    return count;
}

int same_color_degree(const Graph& g, const Coloring& c, int v) {
    check_sizes(g, c);
    check_vertex(g, v);
    int own = c.colors[static_cast<std::size_t>(v)];
    int count = 0;
    for (int u : g.neighbors(v))
        if (c.colors[static_cast<std::size_t>(u)] == own)
            ++count;
    return count;
}

std::vector<long long> monochrome_edge_counts(const Graph& g, const Coloring& c) {
    check_sizes(g, c);
    std::vector<long long> b(static_cast<std::size_t>(c.k), 0);
    for (int u = 0; u < g.vertex_count(); ++u) {
        int cu = c.colors[static_cast<std::size_t>(u)];
        for (int v : g.neighbors(u))
            if (u < v && c.colors[static_cast<std::size_t>(v)] == cu)
                ++b[static_cast<std::size_t>(cu - 1)];
    }
    return b;
}

Rational sigma(const Graph& g, const Coloring& c, const WeightVector& p) {
    if (c.k != p.size())
        throw std::invalid_argument("coloring has k=" + std::to_string(c.k) + " but " +
                                    std::to_string(p.size()) + " weights were given");
    std::vector<long long> b = monochrome_edge_counts(g, c);
    Rational total(0);
    for (int i = 1; i <= c.k; ++i)
        total += Rational(b[static_cast<std::size_t>(i - 1)]) / p.weight(i);
    return total;
}

long long mixing_number(const Graph& g, const Coloring& c) {
    check_sizes(g, c);
    long long mixed = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        int cu = c.colors[static_cast<std::size_t>(u)];
        for (int v : g.neighbors(u))
            if (u < v && c.colors[static_cast<std::size_t>(v)] != cu)
                ++mixed;
    }
    return mixed;
}

bool is_k_secure(const Graph& g, const Coloring& c, int v, int k) {
    if (k < 1)
        throw std::invalid_argument("is_k_secure: k must be >= 1");
    long long d_same = same_color_degree(g, c, v);
    return static_cast<long long>(k) * d_same > static_cast<long long>(g.degree(v));
}

VerifyReport verify_integrated(const Graph& g, const Coloring& c, int k) {
    check_sizes(g, c);
    if (k < 1)
        throw std::invalid_argument("verify_integrated: k must be >= 1");
    if (c.k != k)
        throw std::invalid_argument("coloring has k=" + std::to_string(c.k) +
                                    " but the check is for k=" + std::to_string(k));
    VerifyReport report;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d_same = same_color_degree(g, c, v);
        if (static_cast<long long>(k) * d_same > static_cast<long long>(g.degree(v)))
            report.violations.push_back({v, d_same, Rational(g.degree(v), k)});
    }
    return report;
}

VerifyReport verify_proportional(const Graph& g, const Coloring& c, const WeightVector& p) {
    check_sizes(g, c);
    if (c.k != p.size())
        throw std::invalid_argument("coloring has k=" + std::to_string(c.k) + " but " +
                                    std::to_string(p.size()) + " weights were given");
    VerifyReport report;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const Rational& pv = p.weight(c.colors[static_cast<std::size_t>(v)]);
        int d_same = same_color_degree(g, c, v);
        // d_same > p * d(v)  <=>  d_same * den > num * d(v)
        auto lhs = static_cast<__int128>(d_same) * pv.den();
        auto rhs = static_cast<__int128>(pv.num()) * g.degree(v);
        if (lhs > rhs)
            report.violations.push_back({v, d_same, pv * Rational(g.degree(v))});
    }
    return report;
}

VerifyReport verify_defective(const Graph& g, const Coloring& c, long long u) {
    check_sizes(g, c);
    if (u < 0)
        throw std::invalid_argument("verify_defective: u must be >= 0");
    VerifyReport report;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d_same = same_color_degree(g, c, v);
        if (d_same > u)
            report.violations.push_back({v, d_same, Rational(u)});
    }
    return report;
}

VerifyReport verify_unfriendly_partition(const Graph& g, const Coloring& c) {
    check_sizes(g, c);
    VerifyReport report;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d_same = same_color_degree(g, c, v);
        if (2LL * d_same > static_cast<long long>(g.degree(v)))
            report.violations.push_back({v, d_same, Rational(g.degree(v), 2)});
    }
    return report;
}

} // namespace kcolor
