#include <doctest.h>

#include <cmath>

#include "crane/crane_model.hpp"
#include "crane/errors.hpp"
#include "crane/flatness.hpp"
#include "oracles.hpp"

using namespace crane;

namespace {

constexpr double g = 9.8;

FlatJet rest(double v) { return {v, 0, 0, 0, 0, 0}; }

struct SlewPath {
    PolySegment x, y;
    double D_T, D_H;
};

SlewPath make_path(double th_i, double th_f, double D_T, double D_H, double T) {
    const auto b = slew_flat_boundaries(deg2rad(th_i), deg2rad(th_f), D_T);
    return {flat_poly_11(b.x_i, b.x_f, T), flat_poly_11(b.y_i, b.y_f, T), D_T, D_H};
}

SlewState at(const SlewPath& p, double t, RateForm f = RateForm::Auto) {
    return slew_from_flat(jet_at(p.x, t), jet_at(p.y, t), p.D_T, p.D_H, g, f);
}

}  // namespace

TEST_CASE("trolley map examples") {
    const auto r = trolley_from_flat(rest(1.7), 5, g);
    CHECK(r.d_T == 1.7);
    CHECK(r.d_T_dot == 0.0);
    CHECK(r.alpha == 0.0);
    CHECK(trolley_from_flat({0, 0, 0.49, 0, 0, 0}, 5, g).alpha == doctest::Approx(-0.05).epsilon(1e-14));
    CHECK(trolley_from_flat({2, 0, 0.098, 0, 0, 0}, 5, g).d_T == doctest::Approx(2.05).epsilon(1e-14));
    const auto full = trolley_from_flat({1, 2, 3, 4, 5, 6}, 4.9, g);
    CHECK(full.d_T_dot == doctest::Approx(2 + 0.5 * 4));
    CHECK(full.d_T_ddot == doctest::Approx(3 + 0.5 * 5));
    CHECK(full.alpha_dot == doctest::Approx(-4 / g));
    CHECK_THROWS_AS(trolley_from_flat(rest(1), 0, g), ParameterError);
}

TEST_CASE("trolley round trip through the simplified pendulum") {
    const double D_H = 5, T = 6.47;
    const auto dL = flat_poly_11(2.0, 2.5, T);
    auto rhs = [&](double t, double a, double) {
        const double acc = trolley_from_flat(jet_at(dL, t), D_H, g).d_T_ddot;
        return -(acc + g * a) / D_H;
    };
    for (double t : {0.7, 2.0, 3.3, 5.1, T}) {
        const auto sim = oracle::rk4_second_order(rhs, t, 1e-3);
        CHECK(std::abs(sim[0] - (-dL.eval(t, 2) / g)) < 1e-6);
    }
}

TEST_CASE("slew map at rest") {
    const auto s = slew_from_flat(rest(2.5 * std::cos(0.3)), rest(2.5 * std::sin(0.3)), 2.5, 5, g);
    CHECK(s.theta == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(s.theta_dot == 0.0);
    CHECK(std::abs(s.alpha) < 1e-14);
    CHECK(s.beta == 0.0);
    const auto s60 = slew_from_flat(rest(1.25), rest(2.165063509461097), 2.5, 5, g);
    CHECK(rad2deg(s60.theta) == doctest::Approx(60.0).epsilon(1e-12));
}

TEST_CASE("slew boundary coordinates") {
    const auto a = slew_flat_boundaries(0, kPi / 2, 1);
    CHECK(a.x_i == 1.0);
    CHECK(a.y_i == 0.0);
    CHECK(std::abs(a.x_f) < 1e-16);
    CHECK(a.y_f == 1.0);
    // Reference digits computed independently with arbitrary-precision arithmetic.
    const auto b = slew_flat_boundaries(deg2rad(50), deg2rad(80), 2.5);
    CHECK(b.x_i == doctest::Approx(1.6069690242163481).epsilon(1e-14));
    CHECK(b.y_i == doctest::Approx(1.9151111077974450).epsilon(1e-14));
    CHECK(b.x_f == doctest::Approx(0.43412044416732576).epsilon(1e-14));
    CHECK(b.y_f == doctest::Approx(2.4620193825305203).epsilon(1e-14));
    const auto c = slew_flat_boundaries(0.4, 0.4, 3);
    CHECK(c.x_i == c.x_f);
    CHECK(c.y_i == c.y_f);
}

TEST_CASE("uniform rotation with a consistent jet") {
    const double D_T = 2.5, D_H = 5, w = 0.2, c = D_H / g;
    const double R = D_T / (1 - c * w * w);
    auto jets = [&](double t) {
        FlatJet x{}, y{};
        for (int k = 0; k < 6; ++k) {
            const double ph = w * t + k * kPi / 2;
            x[k] = R * std::pow(w, k) * std::cos(ph);
            y[k] = R * std::pow(w, k) * std::sin(ph);
        }
        return std::make_pair(x, y);
    };
    for (double t : {0.5, 3.0, 6.0}) {
        const auto [x, y] = jets(t);
        CHECK(image_radius_error(x, y, D_T, D_H, g) < 1e-14);
        const auto sy = slew_from_flat(x, y, D_T, D_H, g, RateForm::Y, 1e-6);
        const auto sx = slew_from_flat(x, y, D_T, D_H, g, RateForm::X, 1e-6);
        for (const auto& s : {sy, sx}) {
            CHECK(s.theta == doctest::Approx(w * t).epsilon(1e-12));
            CHECK(s.theta_dot == doctest::Approx(w).epsilon(1e-12));
            CHECK(std::abs(s.theta_ddot) < 1e-12);
            CHECK(s.alpha == doctest::Approx(D_T * w * w / (g - D_H * w * w)).epsilon(1e-12));
            CHECK(std::abs(s.beta) < 1e-14);
            CHECK(std::abs(s.alpha_dot) < 1e-13);
            CHECK(std::abs(s.beta_dot) < 1e-13);
        }
    }
}

TEST_CASE("rate derivatives match central differences") {
    const auto p = make_path(50, 80, 2.5, 5, 6.9);
    const double h = 1e-5;
    for (double t : {0.4, 1.7, 3.45, 5.0, 6.5}) {
        const auto s = at(p, t), lo = at(p, t - h), hi = at(p, t + h);
        CHECK(std::abs(s.alpha_dot - (hi.alpha - lo.alpha) / (2 * h)) < 1e-6);
        CHECK(std::abs(s.beta_dot - (hi.beta - lo.beta) / (2 * h)) < 1e-6);
    }
    const auto q = make_path(83, 66, 1.5, 3, 4.0);
    for (double t : {0.4, 2.0, 3.6}) {
        const auto s = at(q, t), lo = at(q, t - h), hi = at(q, t + h);
        CHECK(std::abs(s.alpha_dot - (hi.alpha - lo.alpha) / (2 * h)) < 1e-6);
        CHECK(std::abs(s.beta_dot - (hi.beta - lo.beta) / (2 * h)) < 1e-6);
    }
}

TEST_CASE("both rate forms agree on a consistent slew") {
    // Along the polynomial path the image point is not exactly on the circle,
    // so the forms only differ by that inconsistency. On the circle they coincide.
    const auto p = make_path(50, 80, 2.5, 5, 6.9);
    for (double t : {0.0, 6.9}) {
        const auto a = at(p, t, RateForm::Y), b = at(p, t, RateForm::X);
        CHECK(a.theta_dot == doctest::Approx(b.theta_dot));
    }
}

TEST_CASE("endpoint exactness") {
    for (const auto& p : {make_path(50, 80, 2.5, 5, 6.9), make_path(66, 7, 2.3, 3.9, 19.0)}) {
        const double T = p.x.duration;
        for (double t : {0.0, T}) {
            const auto s = at(p, t);
            CHECK(std::abs(s.theta_dot) < 1e-9);
            CHECK(std::abs(s.theta_ddot) < 1e-9);
            CHECK(std::abs(s.alpha) < 1e-9);
            CHECK(std::abs(s.alpha_dot) < 1e-9);
            CHECK(std::abs(s.beta) < 1e-9);
            CHECK(std::abs(s.beta_dot) < 1e-9);
        }
    }
}

TEST_CASE("two-argument angle reproduces the image point and the principal branch") {
    const auto p = make_path(50, 80, 2.5, 5, 6.9);
    const double c = 5 / g;
    for (int i = 0; i <= 20; ++i) {
        const double t = 6.9 * i / 20;
        const auto jx = jet_at(p.x, t), jy = jet_at(p.y, t);
        const double px = jx[0] + c * jx[2], py = jy[0] + c * jy[2];
        const double r = std::hypot(px, py);
        const auto s = at(p, t);
        CHECK(std::abs(r * std::cos(s.theta) - px) < 1e-9);
        CHECK(std::abs(r * std::sin(s.theta) - py) < 1e-9);
        CHECK(s.theta == doctest::Approx(std::acos(px / r)).epsilon(1e-10));
        CHECK(s.theta == doctest::Approx(std::asin(py / r)).epsilon(1e-10));
    }
    const auto back = slew_from_flat(rest(-1), rest(-1), std::sqrt(2.0), 5, g);
    CHECK(back.theta == doctest::Approx(-3 * kPi / 4));
}

TEST_CASE("slew round trip on a uniformly rotating consistent jet") {
    const double D_T = 0.5, D_H = 0.4, w = 0.6, c = D_H / g;
    const double R = D_T / (1 - c * w * w);
    const double a_ss = D_T * w * w / (g - D_H * w * w);
    auto state = [&](double t) {
        FlatJet x{}, y{};
        for (int k = 0; k < 6; ++k) {
            x[k] = R * std::pow(w, k) * std::cos(w * t + k * kPi / 2);
            y[k] = R * std::pow(w, k) * std::sin(w * t + k * kPi / 2);
        }
        return slew_from_flat(x, y, D_T, D_H, g, RateForm::Auto, 1e-9);
    };
    // Integrates the deviation from the steady swing so the oracle can start from zero.
    auto rhs = [&](double t, const std::array<double, 4>& s) -> std::array<double, 4> {
        const auto m = state(t);
        const SwingState st{s[0] + a_ss, s[1], s[2], s[3]};
        const auto d = slew_swing_rhs(st, m.theta, m.theta_dot, m.theta_ddot, D_T, D_H, g, SwingModel::Simplified);
        return {d.alpha, d.alpha_dot, d.beta, d.beta_dot};
    };
    for (double t : {1.0, 4.0}) {
        const auto sim = oracle::rk4_system<4>(rhs, t, 1e-3);
        const auto flat = state(t);
        CHECK(std::abs(sim[0] + a_ss - flat.alpha) < 1e-4);
        CHECK(std::abs(sim[2] - flat.beta) < 1e-4);
    }
}

TEST_CASE("slew round trip through the simplified pendulum at desk scale" * doctest::test_suite("chord_limited")) {
    const double D_T = 0.5, D_H = 0.4, T = 4.0;
    const auto p = make_path(40, 70, D_T, D_H, T);
    auto rhs = [&](double t, const std::array<double, 4>& s) -> std::array<double, 4> {
        const auto m = at(p, t);
        const SwingState st{s[0], s[1], s[2], s[3]};
        const auto d = slew_swing_rhs(st, m.theta, m.theta_dot, m.theta_ddot, D_T, D_H, g, SwingModel::Simplified);
        return {d.alpha, d.alpha_dot, d.beta, d.beta_dot};
    };
    for (double t : {0.8, 1.6, 2.0, 3.1, T}) {
        const auto sim = oracle::rk4_system<4>(rhs, t, 1e-3);
        const auto flat = at(p, t);
        CHECK(std::abs(sim[0] - flat.alpha) < 1e-4);
        CHECK(std::abs(sim[2] - flat.beta) < 1e-4);
    }
}

TEST_CASE("rate form selection depends on the path only") {
    const auto a = make_path(50, 80, 2.5, 5, 6.9);
    CHECK(select_rate_form(a.x, a.y) == RateForm::Y);
    const auto b = make_path(66, 7, 2.5, 5, 19.0);
    CHECK(select_rate_form(b.x, b.y) == RateForm::X);
    const auto b2 = make_path(66, 7, 2.5, 5, 40.0);
    CHECK(select_rate_form(b2.x, b2.y) == RateForm::X);
}

TEST_CASE("slew map errors") {
    CHECK_THROWS_AS(slew_from_flat(rest(0), rest(0), 1, 1, g), DegenerateConfiguration);
    CHECK_THROWS_AS(slew_from_flat(rest(1), rest(0), 1, 1, g, RateForm::Y), DegenerateConfiguration);
    CHECK_THROWS_AS(slew_from_flat(rest(0), rest(1), 1, 1, g, RateForm::X), DegenerateConfiguration);
    CHECK_NOTHROW(slew_from_flat(rest(1), rest(0), 1, 1, g));
    CHECK_THROWS_AS(slew_from_flat(rest(2), rest(0), 1, 1, g, RateForm::Auto, 1e-6), InconsistentJet);
    CHECK_NOTHROW(slew_from_flat(rest(1), rest(0), 1, 1, g, RateForm::Auto, 1e-6));
    CHECK_THROWS_AS(slew_from_flat(rest(1), rest(0), 0, 1, g), ParameterError);
    CHECK_THROWS_AS(slew_from_flat(rest(1), rest(0), 1, -1, g), ParameterError);
}
