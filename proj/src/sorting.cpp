#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "crane/errors.hpp"
#include "crane/moea.hpp"

namespace crane {

void AlgoConfig::validate() const {
    if (population < 4) throw ParameterError("population must be at least 4");
    if (max_evaluations < population) throw ParameterError("max_evaluations must be at least the population");
    if (crossover_prob < 0 || crossover_prob > 1 || mutation_prob < 0 || mutation_prob > 1 || CR < 0 || CR > 1)
        throw ParameterError("probabilities must lie in [0, 1]");
    if (crossover_eta < 0 || mutation_eta < 0) throw ParameterError("distribution indices must be non-negative");
    if (!(F > 0)) throw ParameterError("F must be positive");
    if (threads < 1) throw ParameterError("threads must be at least 1");
}

const char* to_string(Algorithm a) { return a == Algorithm::NSGA2 ? "nsga2" : "gde3"; }

Algorithm parse_algorithm(const std::string& name) {
    if (name == "nsga2") return Algorithm::NSGA2;
    if (name == "gde3") return Algorithm::GDE3;
    throw InputError("unknown algorithm '" + name + "'");
}

ScalarProblem to_scalar_problem(const MotopProblem& prob) {
    return {prob.t_lo, prob.t_hi, [prob](double t) {
                const Evaluation e = prob.evaluate(t);
                return Fitness{e.objectives, e.report.total_violation};
            }};
}

bool dominates(const Objectives& a, const Objectives& b) {
    return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

bool constrained_dominates(const Individual& a, const Individual& b) {
    if (a.feasible() != b.feasible()) return a.feasible();
    if (!a.feasible()) return a.violation < b.violation;
    return dominates(a.objectives, b.objectives);
}

std::vector<std::vector<int>> non_dominated_sort(std::vector<Individual>& pop) {
    const int n = static_cast<int>(pop.size());
    std::vector<std::vector<int>> dominated(n);
    std::vector<int> count(n, 0);
    std::vector<std::vector<int>> fronts(1);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (p == q) continue;
            if (constrained_dominates(pop[p], pop[q]))
                dominated[p].push_back(q);
            else if (constrained_dominates(pop[q], pop[p]))
                ++count[p];
        }
        if (count[p] == 0) {
            pop[p].rank = 1;
            fronts[0].push_back(p);
        }
    }
    for (std::size_t i = 0; !fronts[i].empty(); ++i) {
        std::vector<int> next;
        for (int p : fronts[i])
            for (int q : dominated[p])
                if (--count[q] == 0) {
                    pop[q].rank = static_cast<int>(i) + 2;
                    next.push_back(q);
                }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(next));
    }
    fronts.pop_back();
    return fronts;
}

void crowding_distance(std::vector<Individual>& pop, const std::vector<int>& front) {
    const std::size_t m = front.size();
    for (int i : front) pop[i].crowding = 0.0;
    if (m == 0) return;
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (m <= 2) {
        for (int i : front) pop[i].crowding = inf;
        return;
    }
    std::vector<int> order(front);
    for (int obj = 0; obj < 2; ++obj) {
        auto val = [&](int i) { return obj == 0 ? pop[i].objectives.f1 : pop[i].objectives.f2; };
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return val(a) < val(b); });
        const double range = val(order.back()) - val(order.front());
        pop[order.front()].crowding = inf;
        pop[order.back()].crowding = inf;
        if (range <= 0.0) continue;
        for (std::size_t k = 1; k + 1 < m; ++k)
            pop[order[k]].crowding += (val(order[k + 1]) - val(order[k - 1])) / range;
    }
}

namespace detail {

std::mt19937_64 generation_rng(std::uint64_t seed, std::uint64_t generation) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(generation), static_cast<std::uint32_t>(generation >> 32)};
    return std::mt19937_64(seq);
}

void evaluate_all(const ScalarProblem& prob, std::vector<Individual>& pop, std::size_t first, int threads) {
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const Fitness f = prob.evaluate(pop[i].x);
            pop[i].objectives = f.objectives;
            pop[i].violation = f.violation;
        }
    };
    const std::size_t n = pop.size() - first;
    if (threads <= 1 || n < 2) {
        work(first, pop.size());
        return;
    }
    const std::size_t chunk = (n + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (std::size_t lo = first; lo < pop.size(); lo += chunk) pool.emplace_back(work, lo, std::min(pop.size(), lo + chunk));
    for (auto& t : pool) t.join();
}

ParetoSet collect(std::vector<Individual> pop, Algorithm algo, const AlgoConfig& cfg, int evaluations,
                  double runtime_s) {
    ParetoSet out;
    out.algorithm = algo;
    out.seed = cfg.seed;
    out.evaluations = evaluations;
    out.runtime_s = runtime_s;
    std::vector<Individual> feasible;
    for (const auto& ind : pop)
        if (ind.feasible()) feasible.push_back(ind);
    if (feasible.empty()) {
        out.best_infeasible = *std::min_element(pop.begin(), pop.end(), [](const Individual& a, const Individual& b) {
            return a.violation < b.violation;
        });
        return out;
    }
    const auto fronts = non_dominated_sort(feasible);
    for (int i : fronts.front()) out.members.push_back(feasible[i]);
    std::sort(out.members.begin(), out.members.end(), [](const Individual& a, const Individual& b) {
        if (a.objectives.f1 != b.objectives.f1) return a.objectives.f1 < b.objectives.f1;
        return a.objectives.f2 < b.objectives.f2;
    });
    out.members.erase(std::unique(out.members.begin(), out.members.end(),
                                  [](const Individual& a, const Individual& b) {
                                      return a.objectives.f1 == b.objectives.f1 && a.objectives.f2 == b.objectives.f2;
                                  }),
                      out.members.end());
    std::vector<int> all(out.members.size());
    std::iota(all.begin(), all.end(), 0);
    crowding_distance(out.members, all);
    return out;
}

}  // namespace detail

ParetoSet run_moea(Algorithm algo, const ScalarProblem& prob, const AlgoConfig& cfg) {
    return algo == Algorithm::NSGA2 ? nsga2_run(prob, cfg) : gde3_run(prob, cfg);
}

}  // namespace crane
