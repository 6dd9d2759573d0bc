#pragma once

#include <string>
#include <vector>

#include "crane/moea.hpp"
#include "crane/pareto_metrics.hpp"

namespace crane {

// Crane configuration: slew angle (rad), trolley radius (m), hoist cable length (m).
struct Waypoint {
    double theta = 0.0;
    double d_T = 0.0;
    double d_H = 0.0;
};

struct LiftPath {
    std::vector<Waypoint> waypoints;
    std::vector<OperationSpec> operations;

    int count(OperationKind k) const;
};

LiftPath parse_path(const std::vector<Waypoint>& waypoints);

// CSV with header "slew_deg,trolley_m,hoist_m".
std::vector<Waypoint> read_path_csv(const std::string& file);
std::vector<Waypoint> parse_path_csv(const std::string& text);

struct PlannerOptions {
    Algorithm algorithm = Algorithm::GDE3;
    AlgoConfig algo;
    double bounds_multiplier = 1.0;
    bool expand_bounds = true;
};

struct FullState {
    double t = 0.0;
    double theta = 0.0, theta_dot = 0.0, theta_ddot = 0.0;
    double d_T = 0.0, d_T_dot = 0.0, d_T_ddot = 0.0;
    double d_H = 0.0, d_H_dot = 0.0, d_H_ddot = 0.0;
    double alpha = 0.0, alpha_dot = 0.0, beta = 0.0, beta_dot = 0.0;
};

struct PlannedOperation {
    OperationSpec spec;
    Waypoint from, to;
    MotopProblem problem;
    ParetoSet pareto;
    double duration = 0.0;
    Objectives objectives;
    double mu_bar = 0.0;
    // Hoist: the actuator profile in primary. Trolley: the payload flat output in primary.
    // Slew: payload x in primary and y in secondary.
    PolySegment primary;
    PolySegment secondary;
    RateForm rate_form = RateForm::Y;
    double g = 9.8;

    // Full crane state at local time t in [0, duration]; exact waypoints at both ends.
    FullState state_at(double t) const;
};

PlannedOperation plan_operation(const OperationSpec& spec, const CraneLimits& lim, const PlannerOptions& opt);

// Materializes the trajectory of an operation for a given duration, without optimizing.
PlannedOperation fixed_operation(const OperationSpec& spec, const CraneLimits& lim, double duration,
                                 const PlannerOptions& opt = {});

struct LiftPlan {
    LiftPath path;
    std::vector<PlannedOperation> operations;
    std::vector<double> instants;  // t_0 = 0 .. t_n
    double t_plan = 0.0;

    double total() const { return instants.back(); }
    FullState state_at(double t) const;
};

// Operations are planned concurrently with per-operation seed = seed + index.
LiftPlan plan_lift(const LiftPath& path, const CraneLimits& lim, const PlannerOptions& opt);

// Uniform grid of step dt plus every operation boundary instant.
std::vector<FullState> sample_plan(const LiftPlan& plan, double dt);

}  // namespace crane
