#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crane/crane_model.hpp"
#include "crane/flatness.hpp"

namespace crane {

struct Objectives {
    double f1 = 0.0;  // duration, s
    double f2 = 0.0;  // normalized effort
};

struct ConstraintEntry {
    std::string name;
    double limit = 0.0;
    double attained = 0.0;
    double violation = 0.0;
    // Diagnostic entries are reported but do not count towards feasibility.
    bool operative = true;
};

struct ConstraintReport {
    std::vector<ConstraintEntry> entries;
    double total_violation = 0.0;

    bool feasible() const { return total_violation == 0.0; }
    const ConstraintEntry& at(const std::string& name) const;
    void add(std::string name, double limit, double attained, bool operative = true);
};

struct Evaluation {
    Objectives objectives;
    ConstraintReport report;
};

constexpr double kBoundsLow = 1e-3;

// Search interval for the duration: [1e-3, multiplier * |displacement| / v_min].
std::pair<double, double> decision_bounds(const OperationSpec& op, const CraneLimits& lim, double multiplier);

struct MotopProblem {
    OperationSpec op;
    CraneLimits limits;
    double t_lo = kBoundsLow;
    double t_hi = 10.0;
    RateForm rate_form = RateForm::Y;  // slew only
    int expansions = 0;                // times t_hi was doubled to reach a feasible duration

    // Builds bounds from the multiplier; when expand is set, doubles t_hi (up to 8 times)
    // while t_hi itself is infeasible.
    static MotopProblem make(const OperationSpec& op, const CraneLimits& lim, double multiplier = 1.0,
                             bool expand = true);

    Evaluation evaluate(double t) const;
};

Evaluation hoist_evaluate(double t_H, const MotopProblem& prob);
Evaluation trolley_evaluate(double t_T, const MotopProblem& prob);
Evaluation slew_evaluate(double t_S, const MotopProblem& prob);

// Shortest feasible duration within [lo, hi] by bisection (constraints shrink with duration).
// Returns a negative value when hi is infeasible.
double min_feasible_duration(const MotopProblem& prob, double lo, double hi, double tol = 1e-9);

// Flat-output segments for a slew of the given duration.
std::pair<PolySegment, PolySegment> slew_flat_segments(const OperationSpec& op, double T);

}  // namespace crane
