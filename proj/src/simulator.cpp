#include "crane/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "crane/errors.hpp"

namespace crane {

namespace {

SwingState axpy(const SwingState& s, double h, const SwingDerivative& d) {
    return {s.alpha + h * d.alpha, s.alpha_dot + h * d.alpha_dot, s.beta + h * d.beta, s.beta_dot + h * d.beta_dot};
}

double state_distance(const SwingState& a, const SwingState& b) {
    return std::max({std::abs(a.alpha - b.alpha), std::abs(a.alpha_dot - b.alpha_dot), std::abs(a.beta - b.beta),
                     std::abs(a.beta_dot - b.beta_dot)});
}

void require_step(double dt) {
    if (!(dt > 0.0) || dt > kMaxSimStep * (1 + 1e-12))
        throw ParameterError("simulation step must be in (0, 0.01] s");
}

}  // namespace

SimResult integrate_rk4(const SwingRhs& rhs, double T, double dt, SwingState s) {
    if (!(T >= 0.0) || !(dt > 0.0)) throw ParameterError("integration span and step must be positive");
    const long n = std::max(1L, static_cast<long>(std::ceil(T / dt - 1e-9)));
    const double h = T / n;
    SimResult r;
    r.time.reserve(n + 1);
    r.states.reserve(n + 1);
    r.time.push_back(0.0);
    r.states.push_back(s);
    for (long i = 0; i < n; ++i) {
        const double t = i * h;
        const auto k1 = rhs(t, s);
        const auto k2 = rhs(t + h / 2, axpy(s, h / 2, k1));
        const auto k3 = rhs(t + h / 2, axpy(s, h / 2, k2));
        const auto k4 = rhs(i + 1 == n ? T : t + h, axpy(s, h, k3));
        s.alpha += h / 6 * (k1.alpha + 2 * k2.alpha + 2 * k3.alpha + k4.alpha);
        s.alpha_dot += h / 6 * (k1.alpha_dot + 2 * k2.alpha_dot + 2 * k3.alpha_dot + k4.alpha_dot);
        s.beta += h / 6 * (k1.beta + 2 * k2.beta + 2 * k3.beta + k4.beta);
        s.beta_dot += h / 6 * (k1.beta_dot + 2 * k2.beta_dot + 2 * k3.beta_dot + k4.beta_dot);
        r.time.push_back(i + 1 == n ? T : (i + 1) * h);
        r.states.push_back(s);
    }
    for (const auto& st : r.states) {
        r.max_abs_alpha = std::max(r.max_abs_alpha, std::abs(st.alpha));
        r.max_abs_beta = std::max(r.max_abs_beta, std::abs(st.beta));
    }
    r.residual = r.states.back();
    return r;
}

SimResult simulate_trolley(const std::function<double(double)>& acc, double T, double D_H, double g, double dt,
                           SwingModel model) {
    return integrate_rk4(
        [&](double t, const SwingState& s) { return trolley_swing_rhs(s, acc(t), D_H, g, model); }, T, dt);
}

SimResult simulate_slew(const JibMotion& jib, double T, double D_T, double D_H, double g, double dt,
                        SwingModel model) {
    return integrate_rk4(
        [&](double t, const SwingState& s) {
            const auto m = jib(t);
            return slew_swing_rhs(s, m[0], m[1], m[2], D_T, D_H, g, model);
        },
        T, dt);
}

SimResult simulate_operation(const PlannedOperation& op, double dt, SwingModel model) {
    require_step(dt);
    const double T = op.duration;
    switch (op.spec.kind) {
        case OperationKind::Hoist:
            return integrate_rk4([](double, const SwingState&) { return SwingDerivative{}; }, T, dt);
        case OperationKind::Trolley:
            return simulate_trolley([&](double t) { return op.state_at(std::min(t, T)).d_T_ddot; }, T, op.spec.D_H,
                                    op.g, dt, model);
        case OperationKind::Slew:
            return simulate_slew(
                [&](double t) {
                    const FullState s = op.state_at(std::min(t, T));
                    return std::array<double, 3>{s.theta, s.theta_dot, s.theta_ddot};
                },
                T, op.spec.D_T, op.spec.D_H, op.g, dt, model);
    }
    throw ParameterError("unknown operation kind");
}

double observed_order(const std::vector<double>& dts, const std::vector<double>& errors) {
    if (dts.size() != errors.size() || dts.size() < 2) throw ParameterError("need matching steps and errors");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(dts.size());
    for (std::size_t i = 0; i < dts.size(); ++i) {
        const double x = std::log(dts[i]), y = std::log(errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double step_forced_order(const std::vector<double>& dts, double a0, double D_H, double g, double T) {
    if (dts.size() < 3) throw ParameterError("need at least three steps");
    const double w = std::sqrt(g / D_H);
    const double exact = -(a0 / g) * (1.0 - std::cos(w * T));
    const double exact_rate = -(a0 / g) * w * std::sin(w * T);
    std::vector<double> errs;
    for (double dt : dts) {
        const auto r = simulate_trolley([a0](double) { return a0; }, T, D_H, g, dt, SwingModel::Simplified);
        errs.push_back(std::max(std::abs(r.residual.alpha - exact), std::abs(r.residual.alpha_dot - exact_rate)));
    }
    return observed_order(dts, errs);
}

double convergence_check(const PlannedOperation& op, const std::vector<double>& dts, SwingModel model) {
    if (dts.size() < 3) throw ParameterError("need at least three steps");
    std::vector<SwingState> finals;
    for (double dt : dts) finals.push_back(simulate_operation(op, dt, model).residual);
    std::vector<double> steps, diffs;
    for (std::size_t i = 0; i + 1 < finals.size(); ++i) {
        steps.push_back(dts[i]);
        diffs.push_back(state_distance(finals[i], finals[i + 1]));
    }
    return observed_order(steps, diffs);
}

}  // namespace crane
