#include "kcolor/oracle.hpp"

#include "kcolor/metrics.hpp"

namespace kcolor {

namespace detail {

std::uint64_t enumeration_budget(int n, int k, bool* exact) {
    *exact = true;
    std::uint64_t total = 1;
    const std::uint64_t cap = UINT64_MAX;
    for (int i = 0; i < n; ++i) {
        if (total > cap / static_cast<std::uint64_t>(k)) {
            *exact = false;
            return cap;
        }
        total *= static_cast<std::uint64_t>(k);
    }
    return total;
}

void check_budget(int n, int k, const OracleLimit& lim) {
    bool exact = true;
    std::uint64_t required = enumeration_budget(n, k, &exact);
    if (!exact || required > lim.max_enumeration)
        throw EnumerationLimitError(required, exact, lim.max_enumeration);
}

} // namespace detail

namespace {

bool is_integrated(const Graph& g, const Coloring& c, int k) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_k_secure(g, c, v, k))
            return false;
    return true;
}

} // namespace

IntegratedSearchResult exhaustive_integrated_search(const Graph& g, int k, const OracleLimit& lim) {
    if (k < 1)
        throw std::invalid_argument("exhaustive_integrated_search: k must be >= 1");
    IntegratedSearchResult result;
    for_each_coloring(g.vertex_count(), k, lim, [&](const Coloring& c) {
        if (!is_integrated(g, c, k))
            return;
        ++result.valid_count;
        if (!result.exists) {
            result.exists = true;
            result.witness = c;
        }
    });
    return result;
}

long long exact_max_cut(const Graph& g, int k, const OracleLimit& lim) {
    if (k < 1)
        throw std::invalid_argument("exact_max_cut: k must be >= 1");
    long long best = 0;
    for_each_coloring(g.vertex_count(), k, lim, [&](const Coloring& c) {
        long long cut = mixing_number(g, c);
        if (cut > best)
            best = cut;
    });
    return best;
}

MinSigmaResult min_sigma(const Graph& g, const WeightVector& p, const OracleLimit& lim) {
    MinSigmaResult result;
    bool first = true;
    for_each_coloring(g.vertex_count(), p.size(), lim, [&](const Coloring& c) {
        Rational value = sigma(g, c, p);
        if (first || value < result.min_sigma) {
            first = false;
            result.min_sigma = value;
            result.minimizer = c;
            result.minimizer_count = 1;
        } else if (value == result.min_sigma) {
            ++result.minimizer_count;
        }
    });
    return result;
}

} // namespace kcolor
