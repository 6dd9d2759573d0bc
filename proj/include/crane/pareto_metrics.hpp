#pragma once

#include <cstddef>
#include <vector>

#include "crane/moea.hpp"

namespace crane {

struct FrontMetrics {
    double spacing = 0.0;
    double hyperarea = 0.0;
    double runtime_s = 0.0;
};

std::vector<Objectives> objectives_of(const ParetoSet& set);

// Standard deviation of nearest-neighbour Manhattan distances.
double spacing(const std::vector<Objectives>& front);
double spacing(const ParetoSet& set);

struct Normalization {
    Objectives ideal;
    Objectives nadir;
};

// Ideal and nadir over the union of the given fronts.
Normalization joint_normalization(const std::vector<std::vector<Objectives>>& fronts);

struct Hyperarea {
    double value = 0.0;
    int excluded = 0;  // points outside the reference box after normalization
};

Hyperarea hyperarea(const std::vector<Objectives>& front, const Normalization& norm,
                    Objectives reference = {1.0, 1.0});

struct FuzzyChoice {
    std::size_t index = 0;
    double mu_bar = 0.0;
};

// Mean linear membership; ties keep the smaller f1. Zero objective range gives membership 1.
FuzzyChoice fuzzy_select(const std::vector<Objectives>& front);
FuzzyChoice fuzzy_select(const ParetoSet& set);

}  // namespace crane
