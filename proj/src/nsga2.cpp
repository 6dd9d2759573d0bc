#include <algorithm>
#include <chrono>
#include <cmath>

#include "crane/moea.hpp"

namespace crane {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

std::pair<double, double> sbx(double p1, double p2, double lo, double hi, const AlgoConfig& cfg, Rng& rng) {
    double c1 = p1, c2 = p2;
    if (uniform(rng) > cfg.crossover_prob) return {c1, c2};
    if (uniform(rng) > 0.5 || std::abs(p1 - p2) <= 1e-14) return {c1, c2};
    const double y1 = std::min(p1, p2), y2 = std::max(p1, p2);
    const double eta = cfg.crossover_eta;
    const double r = uniform(rng);
    auto spread = [&](double beta) {
        const double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
        return r <= 1.0 / alpha ? std::pow(r * alpha, 1.0 / (eta + 1.0))
                                : std::pow(1.0 / (2.0 - r * alpha), 1.0 / (eta + 1.0));
    };
    const double bq1 = spread(1.0 + 2.0 * (y1 - lo) / (y2 - y1));
    const double bq2 = spread(1.0 + 2.0 * (hi - y2) / (y2 - y1));
    c1 = std::clamp(0.5 * ((y1 + y2) - bq1 * (y2 - y1)), lo, hi);
    c2 = std::clamp(0.5 * ((y1 + y2) + bq2 * (y2 - y1)), lo, hi);
    if (uniform(rng) <= 0.5) std::swap(c1, c2);
    return {c1, c2};
}

double polynomial_mutation(double y, double lo, double hi, const AlgoConfig& cfg, Rng& rng) {
    if (uniform(rng) > cfg.mutation_prob || hi <= lo) return y;
    const double d1 = (y - lo) / (hi - lo), d2 = (hi - y) / (hi - lo);
    const double r = uniform(rng);
    const double p = 1.0 / (cfg.mutation_eta + 1.0);
    double dq;
    if (r <= 0.5) {
        const double v = 2.0 * r + (1.0 - 2.0 * r) * std::pow(1.0 - d1, cfg.mutation_eta + 1.0);
        dq = std::pow(v, p) - 1.0;
    } else {
        const double v = 2.0 * (1.0 - r) + 2.0 * (r - 0.5) * std::pow(1.0 - d2, cfg.mutation_eta + 1.0);
        dq = 1.0 - std::pow(v, p);
    }
    return std::clamp(y + dq * (hi - lo), lo, hi);
}

bool tournament_better(const Individual& a, const Individual& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.crowding > b.crowding;
}

void rank_and_crowd(std::vector<Individual>& pop) {
    for (const auto& f : non_dominated_sort(pop)) crowding_distance(pop, f);
}

}  // namespace

ParetoSet nsga2_run(const ScalarProblem& prob, const AlgoConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = cfg.population;
    std::uint64_t gen = 0;

    std::vector<Individual> pop(n);
    {
        Rng rng = detail::generation_rng(cfg.seed, gen);
        for (auto& ind : pop) ind.x = prob.lower + (prob.upper - prob.lower) * uniform(rng);
    }
    detail::evaluate_all(prob, pop, 0, cfg.threads);
    int evals = static_cast<int>(n);
    rank_and_crowd(pop);

    while (evals + static_cast<int>(n) <= cfg.max_evaluations) {
        Rng rng = detail::generation_rng(cfg.seed, ++gen);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        auto select = [&]() -> const Individual& {
            const Individual& a = pop[pick(rng)];
            const Individual& b = pop[pick(rng)];
            if (tournament_better(a, b)) return a;
            if (tournament_better(b, a)) return b;
            return uniform(rng) < 0.5 ? a : b;
        };
        std::vector<Individual> merged = pop;
        merged.reserve(2 * n);
        while (merged.size() < 2 * n) {
            const double p1 = select().x, p2 = select().x;
            auto [c1, c2] = sbx(p1, p2, prob.lower, prob.upper, cfg, rng);
            for (double c : {c1, c2}) {
                if (merged.size() == 2 * n) break;
                Individual child;
                child.x = polynomial_mutation(c, prob.lower, prob.upper, cfg, rng);
                merged.push_back(child);
            }
        }
        detail::evaluate_all(prob, merged, n, cfg.threads);
        evals += static_cast<int>(n);

        std::vector<Individual> next;
        next.reserve(n);
        for (const auto& front : non_dominated_sort(merged)) {
            crowding_distance(merged, front);
            if (next.size() + front.size() <= n) {
                for (int i : front) next.push_back(merged[i]);
                continue;
            }
            std::vector<int> tail(front);
            std::stable_sort(tail.begin(), tail.end(),
                             [&](int a, int b) { return merged[a].crowding > merged[b].crowding; });
            for (std::size_t k = 0; next.size() < n; ++k) next.push_back(merged[tail[k]]);
            break;
        }
        pop = std::move(next);
        rank_and_crowd(pop);
    }

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return detail::collect(std::move(pop), Algorithm::NSGA2, cfg, evals, secs);
}

}  // namespace crane
