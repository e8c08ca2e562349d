#include "kcolor/solver.hpp"

#include <deque>
#include <random>
#include <string>

#include "kcolor/metrics.hpp"

namespace kcolor {

namespace {

using int128 = __int128;

Coloring initial_coloring(const Graph& g, int k, const SolveConfig& cfg) {
    int n = g.vertex_count();
    if (cfg.init == InitMode::UniformColor1)
        return uniform_coloring(n, k, 1);
    std::mt19937_64 rng(cfg.seed);
    Coloring c{k, std::vector<int>(static_cast<std::size_t>(n))};
    for (int v = 0; v < n; ++v)
        c.colors[static_cast<std::size_t>(v)] = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
    return c;
}

// Incremental solver state: per-vertex per-color neighbor counts, global
// monochrome edge counts, and their sum. A recoloring touches O(degree)
// entries.
class SolverState {
public:
    SolverState(const Graph& g, const WeightVector& p, Coloring start)
        : g_(g), p_(p), k_(p.size()), c_(std::move(start)),
          dcount_(static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(k_), 0),
          b_(static_cast<std::size_t>(k_), 0) {
        for (int v = 0; v < g_.vertex_count(); ++v)
            for (int u : g_.neighbors(v))
                ++dcount_at(v, color_of(u));
        for (int v = 0; v < g_.vertex_count(); ++v)
            b_[static_cast<std::size_t>(color_of(v) - 1)] += dcount_at(v, color_of(v));
        for (long long& count : b_) {
            count /= 2; // each monochrome edge was seen from both endpoints
            mono_sum_ += count;
        }
    }

    int color_of(int v) const { return c_.colors[static_cast<std::size_t>(v)]; }
    long long mixing() const { return g_.edge_count() - mono_sum_; }

    Rational current_sigma() const {
        Rational total(0);
        for (int i = 1; i <= k_; ++i)
            total += Rational(b_[static_cast<std::size_t>(i - 1)]) / p_.weight(i);
        return total;
    }

    // d_{c(v)}(v) > p_{c(v)} * d(v), compared exactly.
    bool violates(int v) const {
        const Rational& pv = p_.weight(color_of(v));
        return static_cast<int128>(dcount_at(v, color_of(v))) * pv.den() >
               static_cast<int128>(pv.num()) * g_.degree(v);
    }

    // Feasible target minimizing d_j(v)/p_j; ties go to the lowest color
    // index. Feasible means d_j(v) < p_j * d(v) strictly; the pigeonhole
    // argument guarantees one exists whenever v violates.
    int pick_target(int v) const {
        int best = 0;
        for (int j = 1; j <= k_; ++j) {
            const Rational& pj = p_.weight(j);
            int128 lhs = static_cast<int128>(dcount_at(v, j)) * pj.den();
            if (lhs >= static_cast<int128>(pj.num()) * g_.degree(v))
                continue;
            if (best == 0 || score_less(v, j, best))
                best = j;
        }
        return best;
    }

    void recolor(int v, int to) {
        int from = color_of(v);
        b_[static_cast<std::size_t>(from - 1)] -= dcount_at(v, from);
        b_[static_cast<std::size_t>(to - 1)] += dcount_at(v, to);
        mono_sum_ += dcount_at(v, to) - dcount_at(v, from);
        for (int u : g_.neighbors(v)) {
            --dcount_at(u, from);
            ++dcount_at(u, to);
        }
        c_.colors[static_cast<std::size_t>(v)] = to;
    }

    const Coloring& coloring() const { return c_; }

private:
    long long& dcount_at(int v, int color) {
        return dcount_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) +
                       static_cast<std::size_t>(color - 1)];
    }
    long long dcount_at(int v, int color) const {
        return dcount_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) +
                       static_cast<std::size_t>(color - 1)];
    }

    // d_a(v)/p_a < d_b(v)/p_b; Rational keeps this exact and loud on overflow.
    bool score_less(int v, int a, int b) const {
        return Rational(dcount_at(v, a)) / p_.weight(a) <
               Rational(dcount_at(v, b)) / p_.weight(b);
    }

    const Graph& g_;
    const WeightVector& p_;
    int k_;
    Coloring c_;
    std::vector<long long> dcount_;
    std::vector<long long> b_;
    long long mono_sum_ = 0;
};

} // namespace

SolveResult proportional_coloring(const Graph& g, const WeightVector& p, const SolveConfig& cfg) {
    int n = g.vertex_count();
    SolverState state(g, p, initial_coloring(g, p.size(), cfg));

    SolveTrace trace;
    trace.initial_coloring = state.coloring();

    std::deque<int> queue;
    std::vector<char> queued(static_cast<std::size_t>(n), 1);
    for (int v = 0; v < n; ++v)
        queue.push_back(v);

    std::uint64_t steps = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        queued[static_cast<std::size_t>(v)] = 0;
        if (!state.violates(v))
            continue;
        if (cfg.max_steps && steps >= *cfg.max_steps) {
            trace.final_coloring = state.coloring();
            throw StepLimitError("step limit of " + std::to_string(*cfg.max_steps) +
                                     " exceeded; termination is guaranteed, so this is a bug",
                                 std::move(trace));
        }
        TraceStep rec;
        rec.step = ++steps;
        rec.vertex = v;
        rec.from_color = state.color_of(v);
        rec.sigma_before = state.current_sigma();
        rec.mix_before = state.mixing();

        int target = state.pick_target(v);
        if (target == 0)
            throw std::logic_error("no feasible recolor target for a violating vertex");
        state.recolor(v, target);

        rec.to_color = target;
        rec.sigma_after = state.current_sigma();
        rec.mix_after = state.mixing();
        trace.steps.push_back(std::move(rec));

        // The move left v strictly satisfied; only its neighbors can have
        // changed status.
        for (int u : g.neighbors(v)) {
            if (!queued[static_cast<std::size_t>(u)]) {
                queued[static_cast<std::size_t>(u)] = 1;
                queue.push_back(u);
            }
        }
    }

    trace.final_coloring = state.coloring();
    return SolveResult{state.coloring(), std::move(trace)};
}

SolveResult integrated_coloring(const Graph& g, int k, const SolveConfig& cfg) {
    if (k < 2)
        throw std::invalid_argument("integrated_coloring: k must be >= 2");
    return proportional_coloring(g, WeightVector::uniform(k), cfg);
}

Coloring defective_coloring(const Graph& g, int k, long long u) {
    if (k < 1)
        throw std::invalid_argument("defective_coloring: k must be >= 1");
    if (u < 0)
        throw std::invalid_argument("defective_coloring: u must be >= 0");
    int delta = max_degree(g);
    int128 bound = static_cast<int128>(k) * (static_cast<int128>(u) + 1) - 1;
    if (static_cast<int128>(delta) > bound)
        throw std::invalid_argument(
            "defective_coloring: max degree " + std::to_string(delta) + " exceeds k(u+1)-1 = " +
            std::to_string(static_cast<long long>(bound)) + "; no guarantee applies");
    if (k == 1)
        return uniform_coloring(g.vertex_count(), 1, 1);
    return integrated_coloring(g, k).coloring;
}

Coloring greedy_bound_proper_coloring(const Graph& g) {
    int delta = max_degree(g);
    if (delta == 0)
        return uniform_coloring(g.vertex_count(), 1, 1);
    return integrated_coloring(g, delta + 1).coloring;
}

} // namespace kcolor
