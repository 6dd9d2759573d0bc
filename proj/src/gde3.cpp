#include <algorithm>
#include <chrono>

#include "crane/moea.hpp"

namespace crane {

namespace {

using Rng = std::mt19937_64;
constexpr int kDims = 1;

// Removes the most crowded member of the overflowing front one at a time.
std::vector<Individual> truncate(std::vector<Individual> pop, std::size_t n) {
    std::vector<Individual> next;
    next.reserve(n);
    for (const auto& front : non_dominated_sort(pop)) {
        if (next.size() + front.size() <= n) {
            for (int i : front) next.push_back(pop[i]);
            continue;
        }
        std::vector<int> keep(front);
        while (next.size() + keep.size() > n) {
            crowding_distance(pop, keep);
            auto worst = std::min_element(keep.begin(), keep.end(),
                                          [&](int a, int b) { return pop[a].crowding < pop[b].crowding; });
            keep.erase(worst);
        }
        for (int i : keep) next.push_back(pop[i]);
        break;
    }
    return next;
}

}  // namespace

ParetoSet gde3_run(const ScalarProblem& prob, const AlgoConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = cfg.population;
    std::uint64_t gen = 0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<Individual> pop(n);
    {
        Rng rng = detail::generation_rng(cfg.seed, gen);
        for (auto& ind : pop) ind.x = prob.lower + (prob.upper - prob.lower) * unit(rng);
    }
    detail::evaluate_all(prob, pop, 0, cfg.threads);
    int evals = static_cast<int>(n);

    while (evals + static_cast<int>(n) <= cfg.max_evaluations) {
        Rng rng = detail::generation_rng(cfg.seed, ++gen);
        const std::size_t size = pop.size();
        std::vector<Individual> trials(size);
        for (std::size_t i = 0; i < size; ++i) {
            std::size_t r1, r2, r3;
            std::uniform_int_distribution<std::size_t> any(0, size - 1);
            do r1 = any(rng); while (r1 == i);
            do r2 = any(rng); while (r2 == i || r2 == r1);
            do r3 = any(rng); while (r3 == i || r3 == r1 || r3 == r2);
            const double mutant = de_mutant(pop[r1].x, pop[r2].x, pop[r3].x, cfg.F);
            // Binomial crossover over the decision vector; with one variable j_rand always selects it.
            const int j_rand = std::uniform_int_distribution<int>(0, kDims - 1)(rng);
            double u = pop[i].x;
            for (int j = 0; j < kDims; ++j)
                if (unit(rng) < cfg.CR || j == j_rand) u = mutant;
            trials[i].x = std::clamp(u, prob.lower, prob.upper);
        }
        detail::evaluate_all(prob, trials, 0, cfg.threads);
        evals += static_cast<int>(size);

        std::vector<Individual> next;
        next.reserve(2 * size);
        for (std::size_t i = 0; i < size; ++i) {
            const Individual& x = pop[i];
            const Individual& u = trials[i];
            if (constrained_dominates(x, u)) {
                next.push_back(x);
            } else if (constrained_dominates(u, x) || !x.feasible() || !u.feasible() ||
                       (u.objectives.f1 == x.objectives.f1 && u.objectives.f2 == x.objectives.f2)) {
                next.push_back(u);
            } else {
                next.push_back(x);
                next.push_back(u);
            }
        }
        pop = next.size() > n ? truncate(std::move(next), n) : std::move(next);
    }

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return detail::collect(std::move(pop), Algorithm::GDE3, cfg, evals, secs);
}

}  // namespace crane
