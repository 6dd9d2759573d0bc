#include "crane/motop.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "crane/errors.hpp"

namespace crane {

namespace {

constexpr int kPanels = kPeakGrid - 1;
constexpr double kDegeneratePenalty = 1e12;

const PolySegment& unit_hoist() {
    static const PolySegment s = hoist_poly(0.0, 1.0, 1.0);
    return s;
}

const PolySegment& unit_flat() {
    static const PolySegment s = flat_poly_11(0.0, 1.0, 1.0);
    return s;
}

// Unit-shape derivatives in real time for a segment of duration T.
std::array<double, 6> shape_jet(const PolySegment& unit, double tau, double T, int max_order) {
    std::array<double, 6> j{};
    double scale = 1.0;
    for (int k = 0; k <= max_order; ++k) {
        j[k] = unit.eval_normalized(tau, k) / scale;
        scale *= T;
    }
    return j;
}

template <std::size_t N>
struct Sweep {
    std::array<double, N> peak{};
    double integral = 0.0;  // over real time
};

// One pass over the shared grid gives Simpson's integral of the integrand and the
// best sample of every quantity; each maximum is then refined by golden section.
template <std::size_t N, class Fn>
Sweep<N> sweep(Fn&& at, double T) {
    Sweep<N> out;
    std::array<int, N> best{};
    out.peak.fill(-std::numeric_limits<double>::infinity());
    double acc = 0.0;
    for (int i = 0; i <= kPanels; ++i) {
        const double tau = static_cast<double>(i) / kPanels;
        std::array<double, N> q;
        double w;
        at(tau, q, w);
        acc += (i == 0 || i == kPanels ? 1.0 : (i % 2 ? 4.0 : 2.0)) * w;
        for (std::size_t k = 0; k < N; ++k)
            if (q[k] > out.peak[k]) {
                out.peak[k] = q[k];
                best[k] = i;
            }
    }
    out.integral = acc * T / (3.0 * kPanels);
    for (std::size_t k = 0; k < N; ++k) {
        const double a = std::max(0, best[k] - 1) / static_cast<double>(kPanels);
        const double b = std::min(kPanels, best[k] + 1) / static_cast<double>(kPanels);
        const double refined = golden_max(
            [&](double tau) {
                std::array<double, N> q;
                double w;
                at(tau, q, w);
                return q[k];
            },
            a, b);
        out.peak[k] = std::max(out.peak[k], refined);
    }
    return out;
}

void require_duration(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw ParameterError("duration must be positive");
}

}  // namespace

const ConstraintEntry& ConstraintReport::at(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return e;
    throw ParameterError("no constraint named '" + name + "'");
}

void ConstraintReport::add(std::string name, double limit, double attained, bool operative) {
    const double v = std::max(0.0, attained - limit);
    entries.push_back({std::move(name), limit, attained, v, operative});
    if (operative) total_violation += v;
}

std::pair<double, double> decision_bounds(const OperationSpec& op, const CraneLimits& lim, double multiplier) {
    if (!(multiplier > 0.0)) throw ParameterError("bounds multiplier must be positive");
    const double d = std::abs(op.displacement());
    if (d == 0.0) throw ParameterError("zero-displacement operation has no decision interval");
    double vmin = lim.hoist_vel_min;
    if (op.kind == OperationKind::Trolley) vmin = lim.trolley_vel_min;
    if (op.kind == OperationKind::Slew) vmin = lim.slew_vel_min;
    return {kBoundsLow, std::max(multiplier * d / vmin, 2.0 * kBoundsLow)};
}

std::pair<PolySegment, PolySegment> slew_flat_segments(const OperationSpec& op, double T) {
    const auto b = slew_flat_boundaries(op.start, op.end, op.D_T);
    return {flat_poly_11(b.x_i, b.x_f, T), flat_poly_11(b.y_i, b.y_f, T)};
}

MotopProblem MotopProblem::make(const OperationSpec& op, const CraneLimits& lim, double multiplier, bool expand) {
    op.validate();
    lim.validate();
    MotopProblem p;
    p.op = op;
    p.limits = lim;
    std::tie(p.t_lo, p.t_hi) = decision_bounds(op, lim, multiplier);
    if (op.kind == OperationKind::Slew) {
        const auto [x, y] = slew_flat_segments(op, 1.0);
        p.rate_form = select_rate_form(x, y);
    }
    if (expand)
        while (p.expansions < 8 && !p.evaluate(p.t_hi).report.feasible()) {
            p.t_hi *= 2.0;
            ++p.expansions;
        }
    return p;
}

Evaluation MotopProblem::evaluate(double t) const {
    switch (op.kind) {
        case OperationKind::Hoist: return hoist_evaluate(t, *this);
        case OperationKind::Trolley: return trolley_evaluate(t, *this);
        case OperationKind::Slew: return slew_evaluate(t, *this);
    }
    throw ParameterError("unknown operation kind");
}

Evaluation hoist_evaluate(double T, const MotopProblem& prob) {
    require_duration(T);
    const auto& lim = prob.limits;
    const double delta = prob.op.displacement();
    const auto s = sweep<2>(
        [&](double tau, std::array<double, 2>& q, double& w) {
            const auto j = shape_jet(unit_hoist(), tau, T, 2);
            q = {std::abs(delta * j[1]), std::abs(delta * j[2])};
            w = delta * j[2] * delta * j[2];
        },
        T);
    Evaluation e;
    e.objectives = {T, s.integral / (lim.hoist_acc_max * lim.hoist_acc_max)};
    e.report.add("hoist_velocity", lim.hoist_vel_max, s.peak[0]);
    e.report.add("hoist_acceleration", lim.hoist_acc_max, s.peak[1]);
    return e;
}

Evaluation trolley_evaluate(double T, const MotopProblem& prob) {
    require_duration(T);
    const auto& lim = prob.limits;
    const double delta = prob.op.displacement();
    const double c = prob.op.D_H / lim.g;
    const auto s = sweep<4>(
        [&](double tau, std::array<double, 4>& q, double& w) {
            const auto j = shape_jet(unit_flat(), tau, T, 4);
            const double acc = delta * (j[2] + c * j[4]);
            q = {std::abs(delta * (j[1] + c * j[3])), std::abs(acc), std::abs(delta * j[2] / lim.g),
                 std::abs(delta * j[4])};
            w = acc * acc;
        },
        T);
    Evaluation e;
    e.objectives = {T, s.integral / (lim.trolley_acc_max * lim.trolley_acc_max)};
    e.report.add("trolley_velocity", lim.trolley_vel_max, s.peak[0]);
    e.report.add("trolley_acceleration", lim.trolley_acc_max, s.peak[1]);
    e.report.add("radial_swing", lim.alpha_max, s.peak[2]);
    e.report.add("trolley_acceleration_subadditive",
                 (lim.g / prob.op.D_H) * (lim.trolley_acc_max - lim.g * lim.alpha_max), s.peak[3], false);
    return e;
}

Evaluation slew_evaluate(double T, const MotopProblem& prob) {
    require_duration(T);
    const auto& lim = prob.limits;
    const auto& op = prob.op;
    const auto b = slew_flat_boundaries(op.start, op.end, op.D_T);
    const double dx = b.x_f - b.x_i, dy = b.y_f - b.y_i;
    const double c = op.D_H / lim.g;
    const double wbar2 = lim.slew_vel_max * lim.slew_vel_max;
    const RateForm form = prob.rate_form == RateForm::Auto ? RateForm::Y : prob.rate_form;

    Evaluation e;
    e.objectives.f1 = T;
    try {
        const auto s = sweep<9>(
            [&](double tau, std::array<double, 9>& q, double& w) {
                const auto j = shape_jet(unit_flat(), tau, T, 5);
                FlatJet jx, jy;
                for (int k = 0; k < 6; ++k) {
                    jx[k] = dx * j[k];
                    jy[k] = dy * j[k];
                }
                jx[0] += b.x_i;
                jy[0] += b.y_i;
                const SlewState st = slew_from_flat(jx, jy, op.D_T, op.D_H, lim.g, form);
                // Image point of the rate-form numerator coordinate (n) and denominator coordinate (d).
                const FlatJet& jn = form == RateForm::Y ? jx : jy;
                const FlatJet& jd = form == RateForm::Y ? jy : jx;
                const double n0 = jn[0] + c * jn[2], n1 = jn[1] + c * jn[3], n2 = jn[2] + c * jn[4];
                const double d0 = jd[0] + c * jd[2];
                const double x = jx[0], y = jy[0];
                q[0] = std::abs(st.theta_dot);
                q[1] = std::abs((n0 * wbar2 + n2) / d0);
                q[2] = st.alpha;
                q[3] = std::abs(st.beta);
                q[4] = std::abs(st.theta_ddot);
                q[5] = std::abs(st.alpha);
                q[6] = std::abs(x * x + y * y + c * (x * jx[2] + y * jy[2]));
                q[7] = std::abs((n0 / d0) * (n1 / d0) * (n1 / d0));
                q[8] = std::abs(n2 / d0);
                w = st.theta_ddot * st.theta_ddot;
            },
            T);
        e.objectives.f2 = s.integral / (lim.slew_acc_max * lim.slew_acc_max);
        e.report.add("slew_velocity", lim.slew_vel_max, s.peak[0]);
        e.report.add("slew_acceleration", lim.slew_acc_max, s.peak[1]);
        e.report.add("radial_swing", lim.alpha_max, s.peak[2]);
        e.report.add("tangential_swing", lim.beta_max, s.peak[3]);
        e.report.add("slew_acceleration_direct", lim.slew_acc_max, s.peak[4], false);
        e.report.add("radial_swing_abs", lim.alpha_max, s.peak[5], false);
        e.report.add("radial_swing_printed_bound", op.D_T * (op.D_H * lim.alpha_max - op.D_T), s.peak[6], false);
        e.report.add("slew_acceleration_sum", lim.slew_acc_max, s.peak[7] + s.peak[8], false);
    } catch (const DegenerateConfiguration&) {
        e.objectives.f2 = kDegeneratePenalty;
        e.report = {};
        e.report.add("degenerate_configuration", 0.0, kDegeneratePenalty);
    }
    return e;
}

double min_feasible_duration(const MotopProblem& prob, double lo, double hi, double tol) {
    if (!prob.evaluate(hi).report.feasible()) return -1.0;
    if (prob.evaluate(lo).report.feasible()) return lo;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (prob.evaluate(mid).report.feasible() ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace crane
