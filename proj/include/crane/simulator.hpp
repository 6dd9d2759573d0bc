#pragma once

#include <array>
#include <functional>
#include <vector>

#include "crane/crane_model.hpp"
#include "crane/planner.hpp"

namespace crane {

struct SimResult {
    std::vector<double> time;
    std::vector<SwingState> states;
    double max_abs_alpha = 0.0;
    double max_abs_beta = 0.0;
    SwingState residual;
};

using SwingRhs = std::function<SwingDerivative(double t, const SwingState& s)>;

// Fixed-step classical RK4 from the initial state over [0, T]; the step is shrunk so the grid ends at T.
SimResult integrate_rk4(const SwingRhs& rhs, double T, double dt, SwingState initial = {});

SimResult simulate_trolley(const std::function<double(double)>& trolley_acc, double T, double D_H, double g,
                           double dt, SwingModel model);

// Jib motion as (theta, theta_dot, theta_ddot) at time t.
using JibMotion = std::function<std::array<double, 3>(double)>;

SimResult simulate_slew(const JibMotion& jib, double T, double D_T, double D_H, double g, double dt,
                        SwingModel model);

// Driven by a planned operation; hoist operations produce identically zero swing.
SimResult simulate_operation(const PlannedOperation& op, double dt, SwingModel model);

constexpr double kMaxSimStep = 0.01;

// Observed order from max-norm errors at successively halved steps (least-squares slope).
double observed_order(const std::vector<double>& dts, const std::vector<double>& errors);

// Order of the integrator on the trolley pendulum under a constant acceleration step, against
// the closed-form response at time T.
double step_forced_order(const std::vector<double>& dts, double a0, double D_H, double g, double T);

// Self-convergence order on a planned operation: differences of final states at successive steps.
double convergence_check(const PlannedOperation& op, const std::vector<double>& dts, SwingModel model);

}  // namespace crane
