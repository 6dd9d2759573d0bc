#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "crane/motop.hpp"

namespace crane {

struct Fitness {
    Objectives objectives;
    double violation = 0.0;
};

// Bounded scalar decision variable with a bi-objective, constrained fitness.
struct ScalarProblem {
    double lower = 0.0;
    double upper = 1.0;
    std::function<Fitness(double)> evaluate;
};

ScalarProblem to_scalar_problem(const MotopProblem& prob);

struct Individual {
    double x = 0.0;
    Objectives objectives;
    double violation = 0.0;
    int rank = 0;
    double crowding = 0.0;

    bool feasible() const { return violation == 0.0; }
};

struct AlgoConfig {
    int population = 100;
    int max_evaluations = 5000;
    std::uint64_t seed = 1;
    double crossover_prob = 0.9;
    double crossover_eta = 20.0;
    double mutation_prob = 0.5;
    double mutation_eta = 20.0;
    double CR = 0.9;
    double F = 0.5;
    int threads = 1;  // fitness evaluations within a generation

    void validate() const;
};

enum class Algorithm { NSGA2, GDE3 };

const char* to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

struct ParetoSet {
    // Feasible first-rank members, duplicates removed, ascending f1.
    std::vector<Individual> members;
    std::optional<Individual> best_infeasible;  // set when nothing feasible was found
    Algorithm algorithm = Algorithm::GDE3;
    std::uint64_t seed = 0;
    int evaluations = 0;
    double runtime_s = 0.0;

    bool empty() const { return members.empty(); }
};

bool dominates(const Objectives& a, const Objectives& b);
bool constrained_dominates(const Individual& a, const Individual& b);

// Assigns rank (1-based) and returns fronts as index lists.
std::vector<std::vector<int>> non_dominated_sort(std::vector<Individual>& pop);

// Assigns crowding to the members of one front.
void crowding_distance(std::vector<Individual>& pop, const std::vector<int>& front);

ParetoSet nsga2_run(const ScalarProblem& prob, const AlgoConfig& cfg);
ParetoSet gde3_run(const ScalarProblem& prob, const AlgoConfig& cfg);
ParetoSet run_moea(Algorithm algo, const ScalarProblem& prob, const AlgoConfig& cfg);

inline ParetoSet nsga2_run(const MotopProblem& p, const AlgoConfig& c) { return nsga2_run(to_scalar_problem(p), c); }
inline ParetoSet gde3_run(const MotopProblem& p, const AlgoConfig& c) { return gde3_run(to_scalar_problem(p), c); }
inline ParetoSet run_moea(Algorithm a, const MotopProblem& p, const AlgoConfig& c) {
    return run_moea(a, to_scalar_problem(p), c);
}

// GDE3 trial vector before crossover and bound repair.
inline double de_mutant(double x_r1, double x_r2, double x_r3, double F) { return x_r3 + F * (x_r1 - x_r2); }

namespace detail {

// Independent stream for one generation of one run: seed_seq over (seed, generation).
std::mt19937_64 generation_rng(std::uint64_t seed, std::uint64_t generation);

void evaluate_all(const ScalarProblem& prob, std::vector<Individual>& pop, std::size_t first, int threads);

ParetoSet collect(std::vector<Individual> pop, Algorithm algo, const AlgoConfig& cfg, int evaluations,
                  double runtime_s);

}  // namespace detail

}  // namespace crane
