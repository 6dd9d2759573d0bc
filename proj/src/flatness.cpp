#include "crane/flatness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "crane/errors.hpp"

namespace crane {

namespace {
constexpr double kDegenerate = 1e-9;
}

FlatJet jet_at(const PolySegment& seg, double t) {
    FlatJet j{};
    const double tau = t / seg.duration;
    for (int k = 0; k < 6; ++k) j[k] = seg.eval_normalized(tau, k);
    return j;
}

TrolleyState trolley_from_flat(const FlatJet& j, double D_H, double g) {
    if (!(D_H > 0.0)) throw ParameterError("D_H must be positive");
    const double c = D_H / g;
    return {j[0] + c * j[2], j[1] + c * j[3], j[2] + c * j[4], -j[2] / g, -j[3] / g};
}

const char* to_string(RateForm f) {
    switch (f) {
        case RateForm::Auto: return "auto";
        case RateForm::Y: return "y";
        case RateForm::X: return "x";
    }
    return "?";
}

double image_radius_error(const FlatJet& jx, const FlatJet& jy, double D_T, double D_H, double g) {
    const double c = D_H / g;
    return std::abs(std::hypot(jx[0] + c * jx[2], jy[0] + c * jy[2]) - D_T) / D_T;
}

SlewState slew_from_flat(const FlatJet& jx, const FlatJet& jy, double D_T, double D_H, double g, RateForm form,
                         std::optional<double> radius_tol) {
    if (!(D_T > 0.0) || !(D_H > 0.0)) throw ParameterError("D_T and D_H must be positive");
    const double c = D_H / g;
    const double px = jx[0] + c * jx[2], px1 = jx[1] + c * jx[3], px2 = jx[2] + c * jx[4];
    const double py = jy[0] + c * jy[2], py1 = jy[1] + c * jy[3], py2 = jy[2] + c * jy[4];
    if (std::abs(px) < kDegenerate && std::abs(py) < kDegenerate)
        throw DegenerateConfiguration("trolley-image point at the slew axis");
    if (radius_tol && image_radius_error(jx, jy, D_T, D_H, g) > *radius_tol)
        throw InconsistentJet("flat outputs do not keep the trolley-image point at radius D_T");
    if (form == RateForm::Auto) form = std::abs(py) >= std::abs(px) ? RateForm::Y : RateForm::X;

    SlewState s;
    s.theta = std::atan2(py, px);
    if (form == RateForm::Y) {
        if (std::abs(py) < kDegenerate) throw DegenerateConfiguration("y image coordinate vanishes");
        const double r = px / py, w = px1 / py;
        s.theta_dot = -w;
        s.theta_ddot = -r * w * w - px2 / py;
    } else {
        if (std::abs(px) < kDegenerate) throw DegenerateConfiguration("x image coordinate vanishes");
        const double r = py / px, w = py1 / px;
        s.theta_dot = w;
        s.theta_ddot = py2 / px + r * w * w;
    }
    const double x = jx[0], y = jy[0];
    s.alpha = (x * x + y * y + c * (x * jx[2] + y * jy[2]) - D_T * D_T) / (D_H * D_T);
    s.beta = (y * jx[2] - x * jy[2]) / (g * D_T);
    s.alpha_dot = 2.0 * (x * jx[1] + y * jy[1]) / (D_H * D_T) +
                  (jx[1] * jx[2] + x * jx[3] + jy[1] * jy[2] + y * jy[3]) / (g * D_T);
    s.beta_dot = (jy[1] * jx[2] + y * jx[3] - jx[1] * jy[2] - x * jy[3]) / (g * D_T);
    return s;
}

SlewBoundaries slew_flat_boundaries(double theta_i, double theta_f, double D_T) {
    return {D_T * std::cos(theta_i), D_T * std::sin(theta_i), D_T * std::cos(theta_f), D_T * std::sin(theta_f)};
}

RateForm select_rate_form(const PolySegment& x, const PolySegment& y) {
    double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
    for (int i = 0; i < kPeakGrid; ++i) {
        const double tau = static_cast<double>(i) / (kPeakGrid - 1);
        min_x = std::min(min_x, std::abs(x.eval_normalized(tau, 0)));
        min_y = std::min(min_y, std::abs(y.eval_normalized(tau, 0)));
    }
    return min_y >= min_x ? RateForm::Y : RateForm::X;
}

}  // namespace crane
