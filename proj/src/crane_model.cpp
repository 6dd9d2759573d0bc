#include "crane/crane_model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "crane/errors.hpp"

namespace crane {

namespace {

struct LimitKey {
    const char* stem;
    double CraneLimits::*field;
    bool angular;
    const char* si_suffix;
    const char* deg_suffix;
};

constexpr LimitKey kLimitKeys[] = {
    {"hoist_vel_min", &CraneLimits::hoist_vel_min, false, "_mps", nullptr},
    {"hoist_vel_max", &CraneLimits::hoist_vel_max, false, "_mps", nullptr},
    {"hoist_acc_max", &CraneLimits::hoist_acc_max, false, "_mps2", nullptr},
    {"trolley_vel_min", &CraneLimits::trolley_vel_min, false, "_mps", nullptr},
    {"trolley_vel_max", &CraneLimits::trolley_vel_max, false, "_mps", nullptr},
    {"trolley_acc_max", &CraneLimits::trolley_acc_max, false, "_mps2", nullptr},
    {"slew_vel_min", &CraneLimits::slew_vel_min, true, "_radps", "_degps"},
    {"slew_vel_max", &CraneLimits::slew_vel_max, true, "_radps", "_degps"},
    {"slew_acc_max", &CraneLimits::slew_acc_max, true, "_radps2", "_degps2"},
    {"alpha_max", &CraneLimits::alpha_max, true, "_rad", "_deg"},
    {"beta_max", &CraneLimits::beta_max, true, "_rad", "_deg"},
    {"g", &CraneLimits::g, false, "_mps2", nullptr},
};

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError(std::string(name) + " must be positive and finite");
}

}  // namespace

void CraneLimits::validate() const {
    for (const auto& k : kLimitKeys) require_positive(this->*k.field, k.stem);
    if (hoist_vel_min >= hoist_vel_max) throw ParameterError("hoist_vel_min must be below hoist_vel_max");
    if (trolley_vel_min >= trolley_vel_max) throw ParameterError("trolley_vel_min must be below trolley_vel_max");
    if (slew_vel_min >= slew_vel_max) throw ParameterError("slew_vel_min must be below slew_vel_max");
    if (alpha_max >= kPi / 2 || beta_max >= kPi / 2) throw ParameterError("swing limits must be below pi/2");
}

CraneLimits limits_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw InputError("limits document must be a JSON object");
    CraneLimits lim;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& key = it.key();
        bool matched = false;
        for (const auto& k : kLimitKeys) {
            const std::string stem = k.stem;
            if (key.rfind(stem, 0) != 0) continue;
            const std::string suffix = key.substr(stem.size());
            double scale = 0.0;
            if (suffix == k.si_suffix)
                scale = 1.0;
            else if (k.deg_suffix && suffix == k.deg_suffix)
                scale = kPi / 180.0;
            else
                continue;
            if (!it.value().is_number()) throw InputError("limit '" + key + "' must be a number");
            lim.*k.field = it.value().get<double>() * scale;
            matched = true;
            break;
        }
        if (!matched) throw InputError("unknown limits key '" + key + "'");
    }
    lim.validate();
    return lim;
}

nlohmann::json limits_to_json(const CraneLimits& lim) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& k : kLimitKeys) {
        if (k.deg_suffix)
            out[std::string(k.stem) + k.deg_suffix] = rad2deg(lim.*k.field);
        else
            out[std::string(k.stem) + k.si_suffix] = lim.*k.field;
    }
    return out;
}

CraneLimits load_limits(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open limits file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("limits file '" + path + "': " + e.what());
    }
    return limits_from_json(doc);
}

const char* to_string(OperationKind k) {
    switch (k) {
        case OperationKind::Hoist: return "hoist";
        case OperationKind::Trolley: return "trolley";
        case OperationKind::Slew: return "slew";
    }
    return "?";
}

OperationSpec OperationSpec::hoist(double from, double to) {
    return {OperationKind::Hoist, from, to, 0.0, 0.0};
}

OperationSpec OperationSpec::trolley(double from, double to, double D_H) {
    return {OperationKind::Trolley, from, to, D_H, 0.0};
}

OperationSpec OperationSpec::slew(double from, double to, double D_T, double D_H) {
    return {OperationKind::Slew, from, to, D_H, D_T};
}

void OperationSpec::validate() const {
    if (!std::isfinite(start) || !std::isfinite(end)) throw ParameterError("operation boundaries must be finite");
    if (kind != OperationKind::Hoist) require_positive(D_H, "D_H");
    if (kind == OperationKind::Slew) require_positive(D_T, "D_T");
}

SwingDerivative trolley_swing_rhs(const SwingState& s, double trolley_acc, double D_H, double g,
                                  SwingModel model) {
    if (!(D_H > 0.0)) throw ParameterError("D_H must be positive");
    double acc;
    if (model == SwingModel::Simplified) {
        acc = -(trolley_acc + g * s.alpha) / D_H;
    } else {
        if (std::abs(s.alpha) >= kPi / 2) throw DomainError("radial swing left (-pi/2, pi/2)");
        acc = -(trolley_acc * std::cos(s.alpha) + g * std::sin(s.alpha)) / D_H;
    }
    return {s.alpha_dot, acc, 0.0, 0.0};
}

SwingDerivative slew_swing_rhs(const SwingState& s, double /*theta*/, double w, double wd, double D_T,
                               double D_H, double g, SwingModel model) {
    if (!(D_H > 0.0) || !(D_T > 0.0)) throw ParameterError("D_T and D_H must be positive");
    const double a = s.alpha, ad = s.alpha_dot, b = s.beta, bd = s.beta_dot;
    if (model == SwingModel::Simplified) {
        const double add = (D_H * wd * b + 2 * D_H * bd * w + D_H * w * w * a + D_T * w * w - g * a) / D_H;
        const double bdd = -((D_T + D_H * a) * wd - D_H * w * w * b + 2 * D_H * w * ad + g * b) / D_H;
        return {ad, add, bd, bdd};
    }
    if (std::abs(a) >= kPi / 2 || std::abs(b) >= kPi / 2) throw DomainError("swing angle left (-pi/2, pi/2)");
    const double sa = std::sin(a), ca = std::cos(a), sb = std::sin(b), cb = std::cos(b);
    // Each equation is explicit in one second derivative.
    const double add = (D_H * wd * sb * ca + 2 * D_H * ad * bd * sb + 2 * D_H * bd * w * cb * ca +
                        D_H * w * w * cb * sa * ca + D_T * w * w * ca - g * sa) /
                       (D_H * cb);
    const double bdd = -((D_T * cb + D_H * sa) * wd + D_H * ad * ad * sb * cb - D_H * w * w * sb * cb * ca * ca +
                         2 * D_H * w * ad * cb * cb * ca + D_T * w * w * sb * sa + g * sb * ca) /
                       D_H;
    return {ad, add, bd, bdd};
}

}  // namespace crane
