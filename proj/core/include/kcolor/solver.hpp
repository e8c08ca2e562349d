#ifndef KCOLOR_SOLVER_HPP
#define KCOLOR_SOLVER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kcolor/coloring.hpp"
#include "kcolor/graph.hpp"
#include "kcolor/rational.hpp"

namespace kcolor {

enum class InitMode {
    UniformColor1, ///< every vertex starts with color 1
    SeededRandom,  ///< colors drawn per vertex from mt19937_64(seed)
};

struct SolveConfig {
    InitMode init = InitMode::UniformColor1;
    std::uint64_t seed = 0;
    /// Safety valve only: termination is guaranteed, so exceeding this
    /// signals a bug and raises StepLimitError with the partial trace.
    std::optional<std::uint64_t> max_steps;

    static SolveConfig uniform_init() { return {}; }
    static SolveConfig random_init(std::uint64_t seed) {
        return {InitMode::SeededRandom, seed, std::nullopt};
    }
};

/// One recoloring move, with the potential and mixing number on both sides
/// of the swap.
struct TraceStep {
    std::uint64_t step = 0; // 1-based
    int vertex = 0;
    int from_color = 0;
    int to_color = 0;
    Rational sigma_before;
    Rational sigma_after;
    long long mix_before = 0;
    long long mix_after = 0;
};

struct SolveTrace {
    Coloring initial_coloring;
    Coloring final_coloring;
    std::vector<TraceStep> steps;
};

struct SolveResult {
    Coloring coloring;
    SolveTrace trace;
};

class StepLimitError : public std::runtime_error {
public:
    StepLimitError(const std::string& message, SolveTrace partial)
        : std::runtime_error(message),
          trace_(std::make_shared<SolveTrace>(std::move(partial))) {}
    const SolveTrace& trace() const { return *trace_; }

private:
    std::shared_ptr<SolveTrace> trace_;
};

/// Local search for a coloring with d_{c(v)}(v) <= p_{c(v)} * d(v) at every
/// vertex. Repeatedly pops a vertex from a FIFO worklist (initialized with
/// all vertices in ascending id order); a vertex in violation is recolored
/// to the feasible color minimizing d_j(v)/p_j (ties to the lowest index),
/// which strictly decreases the potential sigma, and its neighbors are
/// re-enqueued. Deterministic for fixed (graph, weights, config).
SolveResult proportional_coloring(const Graph& g, const WeightVector& p,
                                  const SolveConfig& cfg = {});

/// Specialization to uniform weights p_i = 1/k: finds a coloring in which
/// every vertex has at most |N(v)|/k same-colored neighbors. Requires
/// k >= 2. Takes at most m recoloring steps because the mixing number
/// strictly increases with each one.
SolveResult integrated_coloring(const Graph& g, int k, const SolveConfig& cfg = {});

/// (k, u)-coloring: at most u same-colored neighbors per vertex. Requires
/// max_degree(g) <= k*(u+1) - 1, which makes any integrated k-coloring a
/// witness; throws std::invalid_argument naming both quantities otherwise.
Coloring defective_coloring(const Graph& g, int k, long long u);

/// Proper coloring with at most max_degree(g) + 1 colors, via an
/// integrated coloring with k = max_degree(g) + 1.
Coloring greedy_bound_proper_coloring(const Graph& g);

} // namespace kcolor

#endif
