#include <doctest.h>

#include <cmath>
#include <random>

#include "crane/errors.hpp"
#include "crane/motop.hpp"
#include "oracles.hpp"

using namespace crane;

namespace {

const CraneLimits lim{};
const auto hoist_op = OperationSpec::hoist(5, 4);
const auto trolley_op = OperationSpec::trolley(2, 2.5, 5);
const auto slew_op = OperationSpec::slew(deg2rad(50), deg2rad(80), 2.5, 5);

// Effort of an 11th-degree trolley move by direct quadrature of the explicit polynomial.
double trolley_effort_oracle(double T) {
    const auto s = flat_poly_11(2, 2.5, T);
    const double c = 5 / lim.g;
    auto acc = [&](double t) {
        const double tau = t / T;
        return oracle::poly_derivative(s.coeffs, tau, 2) / (T * T) +
               c * oracle::poly_derivative(s.coeffs, tau, 4) / std::pow(T, 4);
    };
    return oracle::simpson([&](double t) { return acc(t) * acc(t); }, 0, T, 20000) /
           (lim.trolley_acc_max * lim.trolley_acc_max);
}

// Slew effort written out from the image point with the y coordinate as denominator.
double slew_effort_oracle(double T) {
    const double D_T = 2.5, c = 5 / lim.g;
    const double xi = D_T * std::cos(deg2rad(50)), yi = D_T * std::sin(deg2rad(50));
    const double xf = D_T * std::cos(deg2rad(80)), yf = D_T * std::sin(deg2rad(80));
    const auto u = flat_poly_11(0, 1, 1).coeffs;
    auto d = [&](double t, int k) { return oracle::poly_derivative(u, t / T, k) / std::pow(T, k); };
    auto acc = [&](double t) {
        const double px = xi + (xf - xi) * (d(t, 0) + c * d(t, 2));
        const double px1 = (xf - xi) * (d(t, 1) + c * d(t, 3));
        const double px2 = (xf - xi) * (d(t, 2) + c * d(t, 4));
        const double py = yi + (yf - yi) * (d(t, 0) + c * d(t, 2));
        return -(px / py) * (px1 / py) * (px1 / py) - px2 / py;
    };
    return oracle::simpson([&](double t) { return acc(t) * acc(t); }, 0, T, 20000) /
           (lim.slew_acc_max * lim.slew_acc_max);
}

MotopProblem problem(const OperationSpec& op) { return MotopProblem::make(op, lim, 1.0, false); }

}  // namespace

TEST_CASE("decision bounds") {
    CHECK(decision_bounds(OperationSpec::hoist(5, 4), lim, 1).second == doctest::Approx(10));
    CHECK(decision_bounds(OperationSpec::hoist(5, 4), lim, 1).first == kBoundsLow);
    CHECK(decision_bounds(slew_op, lim, 1).second == doctest::Approx(10));
    CHECK(decision_bounds(trolley_op, lim, 1).second == doctest::Approx(10));
    const auto long_slew = OperationSpec::slew(deg2rad(66), deg2rad(7), 2.3, 3.9);
    CHECK(decision_bounds(long_slew, lim, 2).second == doctest::Approx(39.3333).epsilon(1e-4));
    CHECK_THROWS_AS(decision_bounds(OperationSpec::hoist(3, 3), lim, 1), ParameterError);
    CHECK_THROWS_AS(decision_bounds(hoist_op, lim, 0), ParameterError);
}

TEST_CASE("hoist examples") {
    const auto p = problem(hoist_op);
    const auto e10 = p.evaluate(10);
    CHECK(e10.objectives.f1 == 10.0);
    CHECK(e10.objectives.f2 == doctest::Approx(280.0 / 11.0 / 40.0).epsilon(1e-9));
    CHECK(e10.report.feasible());
    const auto e729 = p.evaluate(7.29);
    CHECK(e729.objectives.f2 == doctest::Approx(1.64).epsilon(5e-3));
    CHECK(e729.report.at("hoist_velocity").attained == doctest::Approx(2.1875 / 7.29).epsilon(1e-10));
    const auto e7 = p.evaluate(7.0);
    CHECK(e7.report.at("hoist_velocity").violation == doctest::Approx(0.0125).epsilon(1e-9));
    CHECK(e7.report.total_violation == doctest::Approx(0.0125).epsilon(1e-9));
    CHECK_FALSE(e7.report.feasible());
}

TEST_CASE("hoist effort closed form and scaling") {
    const auto p = problem(OperationSpec::hoist(2, 5.5));
    for (double T : {4.0, 8.0, 13.7, 27.4}) {
        const double closed = 280.0 / 11.0 * 3.5 * 3.5 / (lim.hoist_acc_max * lim.hoist_acc_max * T * T * T);
        CHECK(p.evaluate(T).objectives.f2 == doctest::Approx(closed).epsilon(1e-9));
    }
    CHECK(p.evaluate(13.7).objectives.f2 / p.evaluate(27.4).objectives.f2 == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("hoist minimum feasible duration from the velocity bound") {
    const auto p = problem(hoist_op);
    CHECK(min_feasible_duration(p, p.t_lo, p.t_hi) == doctest::Approx(2.1875 / 0.3).epsilon(1e-8));
}

TEST_CASE("trolley examples") {
    const auto p = problem(trolley_op);
    const auto e10 = p.evaluate(10);
    CHECK(e10.objectives.f2 == doctest::Approx(trolley_effort_oracle(10)).epsilon(1e-9));
    CHECK(e10.objectives.f2 == doctest::Approx(0.15).epsilon(0.03));
    CHECK(e10.report.feasible());
    const auto e = p.evaluate(5.26);
    CHECK(e.objectives.f2 == doctest::Approx(trolley_effort_oracle(5.26)).epsilon(1e-9));
    CHECK(e.objectives.f2 == doctest::Approx(1.71).epsilon(0.01));
    const double tmin = min_feasible_duration(p, p.t_lo, p.t_hi);
    CHECK(tmin == doctest::Approx(5.26).epsilon(2e-3));
    CHECK_FALSE(p.evaluate(tmin * 0.99).report.feasible());
    CHECK(p.evaluate(10).report.at("trolley_acceleration_subadditive").operative == false);
}

TEST_CASE("slew examples") {
    const auto p = problem(slew_op);
    CHECK(p.rate_form == RateForm::Y);
    const auto e10 = p.evaluate(10);
    CHECK(e10.objectives.f2 == doctest::Approx(slew_effort_oracle(10)).epsilon(1e-9));
    CHECK(e10.objectives.f2 == doctest::Approx(0.21).epsilon(0.02));
    CHECK(e10.report.feasible());
    const auto e = p.evaluate(5.74);
    CHECK(e.objectives.f2 == doctest::Approx(slew_effort_oracle(5.74)).epsilon(1e-9));
    CHECK(e.objectives.f2 == doctest::Approx(1.34).epsilon(0.01));
    CHECK(min_feasible_duration(p, p.t_lo, p.t_hi) == doctest::Approx(5.74).epsilon(2e-3));
}

TEST_CASE("printed radial bound is negative and stays diagnostic") {
    const auto p = problem(slew_op);
    const auto e = p.evaluate(10);
    const auto& printed = e.report.at("radial_swing_printed_bound");
    CHECK(printed.limit < 0.0);
    CHECK(printed.violation > 0.0);
    CHECK_FALSE(printed.operative);
    CHECK(e.report.feasible());
    for (const char* name : {"slew_acceleration_direct", "radial_swing_abs", "slew_acceleration_sum"})
        CHECK_FALSE(e.report.at(name).operative);
    CHECK(e.report.at("slew_acceleration_sum").attained >= e.report.at("slew_acceleration_direct").attained - 1e-15);
}

TEST_CASE("zero displacement costs nothing") {
    for (const auto& op : {OperationSpec::hoist(3, 3), OperationSpec::trolley(2, 2, 5),
                           OperationSpec::slew(0.4, 0.4, 2, 4)}) {
        MotopProblem p;
        p.op = op;
        p.limits = lim;
        const auto e = p.evaluate(4.0);
        CHECK(e.objectives.f2 == doctest::Approx(0.0).epsilon(1e-20));
        CHECK(e.report.feasible());
        for (const auto& c : e.report.entries) {
            if (!c.operative) continue;
            CHECK(c.violation == 0.0);
            if (c.name.find("velocity") != std::string::npos) CHECK(c.attained < 1e-12);
        }
    }
}

TEST_CASE("effort and constraints shrink with duration") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dur(3.0, 30.0);
    for (const auto& op : {hoist_op, trolley_op, slew_op, OperationSpec::slew(deg2rad(66), deg2rad(7), 2.3, 3.9)}) {
        const auto p = problem(op);
        for (int trial = 0; trial < 15; ++trial) {
            double a = dur(rng), b = dur(rng);
            if (a > b) std::swap(a, b);
            if (b - a < 1e-3) continue;
            const auto ea = p.evaluate(a), eb = p.evaluate(b);
            CHECK(eb.objectives.f2 < ea.objectives.f2);
            for (std::size_t k = 0; k < ea.report.entries.size(); ++k) {
                if (!ea.report.entries[k].operative) continue;
                CHECK(eb.report.entries[k].attained <= ea.report.entries[k].attained + 1e-12);
            }
        }
    }
}

TEST_CASE("infeasible upper bound expands") {
    const auto op = OperationSpec::slew(deg2rad(66), deg2rad(7), 2.3, 3.9);
    const auto fixed = MotopProblem::make(op, lim, 1.0, false);
    const auto grown = MotopProblem::make(op, lim, 1.0, true);
    CHECK(fixed.expansions == 0);
    CHECK(grown.t_hi >= fixed.t_hi);
    CHECK(grown.evaluate(grown.t_hi).report.feasible());
    CHECK(grown.t_hi == doctest::Approx(fixed.t_hi * std::pow(2.0, grown.expansions)));
}

TEST_CASE("evaluation errors") {
    const auto p = problem(hoist_op);
    CHECK_THROWS_AS(p.evaluate(0.0), ParameterError);
    CHECK_THROWS_AS(p.evaluate(-1.0), ParameterError);
    CHECK_THROWS_AS(p.evaluate(std::nan("")), ParameterError);
    CHECK_THROWS_AS(p.evaluate(1.0).report.at("nope"), ParameterError);
}
