#pragma once

#include <array>
#include <optional>

#include "crane/polytraj.hpp"

namespace crane {

// Value and derivatives 1..5 of one flat output at one instant.
using FlatJet = std::array<double, 6>;

FlatJet jet_at(const PolySegment& seg, double t);

struct TrolleyState {
    double d_T = 0.0;
    double d_T_dot = 0.0;
    double d_T_ddot = 0.0;
    double alpha = 0.0;
    double alpha_dot = 0.0;
};

struct SlewState {
    double theta = 0.0;
    double theta_dot = 0.0;
    double theta_ddot = 0.0;
    double alpha = 0.0;
    double alpha_dot = 0.0;
    double beta = 0.0;
    double beta_dot = 0.0;
};

TrolleyState trolley_from_flat(const FlatJet& jet, double D_H, double g);

// Which image coordinate divides the slew-rate expressions.
// Y: rates from the x coordinate over y. X: rates from y over x. Auto: larger |denominator| per instant.
enum class RateForm { Auto, Y, X };

const char* to_string(RateForm f);

SlewState slew_from_flat(const FlatJet& jx, const FlatJet& jy, double D_T, double D_H, double g,
                         RateForm form = RateForm::Auto, std::optional<double> radius_tol = std::nullopt);

// Relative deviation of the trolley-image point's norm from D_T.
double image_radius_error(const FlatJet& jx, const FlatJet& jy, double D_T, double D_H, double g);

struct SlewBoundaries {
    double x_i, y_i, x_f, y_f;
};

SlewBoundaries slew_flat_boundaries(double theta_i, double theta_f, double D_T);

// Fixed per-operation form: the payload coordinate that stays farther from zero over the motion.
// Depends only on the path shape, so it does not change with the duration.
RateForm select_rate_form(const PolySegment& x, const PolySegment& y);

}  // namespace crane
