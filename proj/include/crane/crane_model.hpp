#pragma once

#include <numbers>
#include <string>

#include <json.hpp>

namespace crane {

constexpr double kPi = std::numbers::pi;
constexpr double deg2rad(double d) { return d * kPi / 180.0; }
constexpr double rad2deg(double r) { return r * 180.0 / kPi; }

// Velocities in m/s or rad/s, accelerations in m/s^2 or rad/s^2, angles in rad.
struct CraneLimits {
    double hoist_vel_min = 0.1;
    double hoist_vel_max = 0.3;
    double hoist_acc_max = 0.2;
    double trolley_vel_min = 0.05;
    double trolley_vel_max = 0.25;
    double trolley_acc_max = 0.2;
    double slew_vel_min = deg2rad(3.0);
    double slew_vel_max = deg2rad(10.0);
    double slew_acc_max = deg2rad(10.0);
    double alpha_max = deg2rad(2.5);
    double beta_max = deg2rad(2.5);
    double g = 9.8;

    void validate() const;
};

CraneLimits limits_from_json(const nlohmann::json& doc);
nlohmann::json limits_to_json(const CraneLimits& lim);
CraneLimits load_limits(const std::string& path);

enum class OperationKind { Hoist, Trolley, Slew };

const char* to_string(OperationKind k);

struct OperationSpec {
    OperationKind kind = OperationKind::Hoist;
    double start = 0.0;  // d_H, d_T in m or theta_S in rad
    double end = 0.0;
    double D_H = 0.0;  // cable length, trolley and slew only
    double D_T = 0.0;  // trolley radius, slew only

    static OperationSpec hoist(double from, double to);
    static OperationSpec trolley(double from, double to, double D_H);
    static OperationSpec slew(double from, double to, double D_T, double D_H);

    double displacement() const { return end - start; }
    void validate() const;
};

struct SwingState {
    double alpha = 0.0;
    double alpha_dot = 0.0;
    double beta = 0.0;
    double beta_dot = 0.0;
};

// Same layout as SwingState: (alpha', alpha'', beta', beta'').
using SwingDerivative = SwingState;

enum class SwingModel { Simplified, Full };

SwingDerivative trolley_swing_rhs(const SwingState& s, double trolley_acc, double D_H, double g,
                                  SwingModel model);

SwingDerivative slew_swing_rhs(const SwingState& s, double theta, double theta_dot, double theta_ddot,
                               double D_T, double D_H, double g, SwingModel model);

}  // namespace crane
