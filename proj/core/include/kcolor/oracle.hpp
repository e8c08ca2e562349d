#ifndef KCOLOR_ORACLE_HPP
#define KCOLOR_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "kcolor/coloring.hpp"
#include "kcolor/graph.hpp"
#include "kcolor/rational.hpp"

namespace kcolor {

/// Cap on the number of colorings a brute-force enumeration may visit.
struct OracleLimit {
    std::uint64_t max_enumeration = 10'000'000;
};

class EnumerationLimitError : public std::runtime_error {
public:
    EnumerationLimitError(std::uint64_t required, bool exact, std::uint64_t limit)
        : std::runtime_error("enumeration needs " + std::string(exact ? "" : "more than ") +
                             std::to_string(required) + " colorings, limit is " +
                             std::to_string(limit)),
          required_(required), exact_(exact), limit_(limit) {}

    /// Colorings the enumeration would visit; a lower bound when !exact().
    std::uint64_t required() const { return required_; }
    bool exact() const { return exact_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t required_;
    bool exact_;
    std::uint64_t limit_;
};

namespace detail {
/// k^n if it fits uint64, otherwise saturates and clears *exact.
std::uint64_t enumeration_budget(int n, int k, bool* exact);
void check_budget(int n, int k, const OracleLimit& lim);
} // namespace detail

/// Streams every k-coloring of n vertices in lexicographic order of the
/// assignment vector (vertex 0 most significant, colors ascending from the
/// all-1 coloring). The Coloring passed to fn reuses one buffer; copy it to
/// keep it. Throws EnumerationLimitError if k^n exceeds the limit.
template <typename F>
void for_each_coloring(int n, int k, const OracleLimit& lim, F&& fn) {
    if (n < 0 || k < 1)
        throw std::invalid_argument("for_each_coloring: need n >= 0 and k >= 1");
    detail::check_budget(n, k, lim);
    Coloring c{k, std::vector<int>(static_cast<std::size_t>(n), 1)};
    for (;;) {
        fn(static_cast<const Coloring&>(c));
        // odometer: last vertex runs fastest
        int pos = n - 1;
        while (pos >= 0 && c.colors[static_cast<std::size_t>(pos)] == k) {
            c.colors[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0)
            return;
        ++c.colors[static_cast<std::size_t>(pos)];
    }
}

struct IntegratedSearchResult {
    bool exists = false;
    std::optional<Coloring> witness; ///< lexicographically first valid coloring
    std::uint64_t valid_count = 0;
};

/// Decides existence by enumerating all k^n colorings.
IntegratedSearchResult exhaustive_integrated_search(const Graph& g, int k,
                                                    const OracleLimit& lim = {});

/// Exact maximum of cut_size over all k-part partitions (via all colorings).
long long exact_max_cut(const Graph& g, int k, const OracleLimit& lim = {});

struct MinSigmaResult {
    Rational min_sigma;
    Coloring minimizer; ///< lexicographically first
    std::uint64_t minimizer_count = 0;
};

/// Exact minimum of the potential sigma over all colorings.
MinSigmaResult min_sigma(const Graph& g, const WeightVector& p, const OracleLimit& lim = {});

} // namespace kcolor

#endif
