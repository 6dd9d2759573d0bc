#include "crane/polytraj.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "crane/errors.hpp"

namespace crane {

namespace {

constexpr double kHoistShape[] = {35.0, -84.0, 70.0, -20.0};
constexpr double kFlatShape[] = {462.0, -1980.0, 3465.0, -3080.0, 1386.0, -252.0};

void require_duration(double T) {
    if (!(T > 0.0) || !std::isfinite(T)) throw ParameterError("segment duration must be positive");
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

double PolySegment::end_value() const {
    double s = 0.0;
    for (double c : coeffs) s += c;
    return s;
}

double PolySegment::eval_normalized(double tau, int order) const {
    const int n = degree();
    double acc = 0.0;
    for (int r = n; r >= order; --r) {
        double falling = 1.0;
        for (int j = 0; j < order; ++j) falling *= r - j;
        acc = acc * tau + falling * coeffs[r];
    }
    return acc / std::pow(duration, order);
}

double PolySegment::eval(double t, int order) const {
    if (order < 0 || order > 5) throw ParameterError("derivative order must be in 0..5");
    if (!(t >= 0.0 && t <= duration)) throw ParameterError("time " + std::to_string(t) + " outside segment");
    return eval_normalized(t / duration, order);
}

PolySegment hoist_poly(double from, double to, double T) {
    require_duration(T);
    PolySegment s{std::vector<double>(8, 0.0), T};
    s.coeffs[0] = from;
    for (int i = 0; i < 4; ++i) s.coeffs[4 + i] = kHoistShape[i] * (to - from);
    return s;
}

PolySegment flat_poly_11(double from, double to, double T) {
    require_duration(T);
    PolySegment s{std::vector<double>(12, 0.0), T};
    s.coeffs[0] = from;
    for (int i = 0; i < 6; ++i) s.coeffs[6 + i] = kFlatShape[i] * (to - from);
    return s;
}

PolySegment constant_poly(double value, double T) {
    require_duration(T);
    return {std::vector<double>{value}, T};
}

PolySegment from_bernstein(const std::vector<double>& cp, double T) {
    require_duration(T);
    if (cp.empty()) throw ParameterError("no control points");
    const int n = static_cast<int>(cp.size()) - 1;
    PolySegment s{std::vector<double>(cp.size(), 0.0), T};
    for (int r = 0; r <= n; ++r) {
        double sum = 0.0;
        for (int i = 0; i <= r; ++i) sum += ((r - i) % 2 ? -1.0 : 1.0) * binomial(r, i) * cp[i];
        s.coeffs[r] = binomial(n, r) * sum;
    }
    return s;
}

double golden_max(const std::function<double(double)>& f, double a, double b) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    const double tol = 1e-12 * std::max(1.0, std::abs(b));
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 60 && b - a > tol; ++it) {
        if (f1 > f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return std::max(f1, f2);
}

double peak_abs(const std::function<double(double)>& f, double T, int grid) {
    if (grid < 2) throw ParameterError("peak grid needs at least two samples");
    const double h = T / (grid - 1);
    int best = 0;
    double best_val = -1.0;
    for (int i = 0; i < grid; ++i) {
        const double v = std::abs(f(i * h));
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    const double a = std::max(0.0, (best - 1) * h);
    const double b = std::min(T, (best + 1) * h);
    return std::max(best_val, golden_max([&](double t) { return std::abs(f(t)); }, a, b));
}

double peak_abs_derivative(const PolySegment& seg, int order) {
    if (order < 1 || order > 4) throw ParameterError("peak derivative order must be in 1..4");
    return peak_abs([&](double t) { return seg.eval_normalized(t / seg.duration, order); }, seg.duration);
}

}  // namespace crane
