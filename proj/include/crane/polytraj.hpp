#pragma once

#include <functional>
#include <vector>

namespace crane {

// Polynomial in normalized time tau = t / T with coefficients of tau^r.
struct PolySegment {
    std::vector<double> coeffs;
    double duration = 1.0;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double start_value() const { return coeffs.front(); }
    double end_value() const;

    // Derivative of the given order (0..5) at time t in [0, T].
    double eval(double t, int order = 0) const;
    // Same, without range checks, in normalized time.
    double eval_normalized(double tau, int order) const;
};

PolySegment hoist_poly(double from, double to, double T);
PolySegment flat_poly_11(double from, double to, double T);
PolySegment constant_poly(double value, double T);

// Converts Bernstein control points of degree n to the power basis.
PolySegment from_bernstein(const std::vector<double>& control_points, double T);

constexpr int kPeakGrid = 1001;

// Golden-section search for a local maximum of f on [a, b].
double golden_max(const std::function<double(double)>& f, double a, double b);

// Max of |f| over [0, T]: uniform grid then golden-section refinement around the best sample.
double peak_abs(const std::function<double(double)>& f, double T, int grid = kPeakGrid);

double peak_abs_derivative(const PolySegment& seg, int order);

}  // namespace crane
