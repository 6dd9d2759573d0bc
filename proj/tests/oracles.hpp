#pragma once

// Independent reference computations used to freeze expected values in tests.
// None of these call into the library's numerical routines.

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

// Composite Simpson rule with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

inline double dense_max_abs(const std::function<double(double)>& f, double a, double b, int n) {
    double m = 0.0;
    for (int i = 0; i <= n; ++i) m = std::max(m, std::abs(f(a + (b - a) * i / n)));
    return m;
}

// Power-basis polynomial with explicit derivative coefficients.
inline double poly_derivative(const std::vector<double>& c, double x, int order) {
    double s = 0.0;
    for (std::size_t r = order; r < c.size(); ++r) {
        double k = 1.0;
        for (int j = 0; j < order; ++j) k *= static_cast<double>(r - j);
        s += k * c[r] * std::pow(x, static_cast<double>(r - order));
    }
    return s;
}

struct Point {
    double f1, f2, violation;
};

inline bool dominates(const Point& a, const Point& b) {
    const bool fa = a.violation == 0.0, fb = b.violation == 0.0;
    if (fa != fb) return fa;
    if (!fa) return a.violation < b.violation;
    return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

// Peels fronts by repeated pairwise scans, O(n^3).
inline std::vector<int> brute_force_ranks(const std::vector<Point>& pts) {
    const std::size_t n = pts.size();
    std::vector<int> rank(n, 0);
    std::size_t assigned = 0;
    for (int level = 1; assigned < n; ++level) {
        std::vector<std::size_t> current;
        for (std::size_t i = 0; i < n; ++i) {
            if (rank[i]) continue;
            bool dominated = false;
            for (std::size_t j = 0; j < n && !dominated; ++j)
                if (j != i && !rank[j] && dominates(pts[j], pts[i])) dominated = true;
            if (!dominated) current.push_back(i);
        }
        for (auto i : current) rank[i] = level;
        assigned += current.size();
    }
    return rank;
}

// Fraction of the unit square reference box dominated by the points, by sampling.
inline double monte_carlo_area(const std::vector<std::array<double, 2>>& pts, int samples, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int hit = 0;
    for (int s = 0; s < samples; ++s) {
        const double x = u(rng), y = u(rng);
        for (const auto& p : pts)
            if (p[0] <= x && p[1] <= y) {
                ++hit;
                break;
            }
    }
    return static_cast<double>(hit) / samples;
}

// Classical RK4 for y'' = f(t, y, y'), returning (y, y') at T.
inline std::array<double, 2> rk4_second_order(const std::function<double(double, double, double)>& f, double T,
                                              double dt) {
    const int n = static_cast<int>(std::ceil(T / dt - 1e-9));
    const double h = T / n;
    double y = 0.0, v = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = i * h;
        const double k1y = v, k1v = f(t, y, v);
        const double k2y = v + h / 2 * k1v, k2v = f(t + h / 2, y + h / 2 * k1y, v + h / 2 * k1v);
        const double k3y = v + h / 2 * k2v, k3v = f(t + h / 2, y + h / 2 * k2y, v + h / 2 * k2v);
        const double k4y = v + h * k3v, k4v = f(t + h, y + h * k3y, v + h * k3v);
        y += h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
        v += h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
    }
    return {y, v};
}

// Classical RK4 for a first-order system from a zero initial state, returning the state at T.
template <std::size_t N>
std::array<double, N> rk4_system(const std::function<std::array<double, N>(double, const std::array<double, N>&)>& f,
                                 double T, double dt) {
    const int n = static_cast<int>(std::ceil(T / dt - 1e-9));
    const double h = T / n;
    std::array<double, N> y{};
    auto axpy = [](const std::array<double, N>& a, double s, const std::array<double, N>& b) {
        std::array<double, N> r;
        for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + s * b[i];
        return r;
    };
    for (int i = 0; i < n; ++i) {
        const double t = i * h;
        const auto k1 = f(t, y);
        const auto k2 = f(t + h / 2, axpy(y, h / 2, k1));
        const auto k3 = f(t + h / 2, axpy(y, h / 2, k2));
        const auto k4 = f(t + h, axpy(y, h, k3));
        for (std::size_t j = 0; j < N; ++j) y[j] += h / 6 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
    }
    return y;
}

}  // namespace oracle
