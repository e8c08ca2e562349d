#ifndef KCOLOR_GENERATORS_HPP
#define KCOLOR_GENERATORS_HPP

#include <cstdint>
#include <string_view>

#include "kcolor/graph.hpp"

namespace kcolor {

enum class Family {
    Complete, ///< K_n
    Cycle,    ///< C_n, requires n >= 3
    Path,     ///< P_n
    Star,     ///< K_{1,n}: one center plus n leaves (n+1 vertices)
    Petersen, ///< the Petersen graph; ignores n
};

/// Maps "complete", "cycle", "path", "star", "petersen" to Family.
/// Throws std::invalid_argument on anything else.
Family family_from_name(std::string_view name);

Graph gen_named(Family family, int n);

/// Erdős–Rényi G(n, p): each of the n(n-1)/2 vertex pairs, visited in
/// lexicographic order, is included independently with probability p.
/// Randomness comes from std::mt19937_64 seeded with `seed`, one draw per
/// pair mapped to [0,1) as (x >> 11) * 2^-53, so identical (n, p, seed)
/// produce identical edge sets on every platform.
Graph gen_gnp(int n, double p, std::uint64_t seed);

} // namespace kcolor

#endif
