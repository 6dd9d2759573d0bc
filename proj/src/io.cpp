#include "crane/io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "crane/errors.hpp"

namespace crane {

std::string format_number(double v) {
    if (v == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::vector<std::string> state_columns() {
    return {"t_s",         "theta_rad",      "theta_dot_radps",   "theta_ddot_radps2", "d_T_m",
            "d_T_dot_mps", "d_T_ddot_mps2",  "d_H_m",             "d_H_dot_mps",       "d_H_ddot_mps2",
            "alpha_rad",   "alpha_dot_radps", "beta_rad",         "beta_dot_radps",    "theta_deg",
            "theta_dot_degps", "theta_ddot_degps2", "alpha_deg", "alpha_dot_degps", "beta_deg",
            "beta_dot_degps"};
}

std::vector<std::string> state_cells(const FullState& s) {
    std::vector<std::string> c;
    for (double v : {s.t, s.theta, s.theta_dot, s.theta_ddot, s.d_T, s.d_T_dot, s.d_T_ddot, s.d_H, s.d_H_dot,
                     s.d_H_ddot, s.alpha, s.alpha_dot, s.beta, s.beta_dot})
        c.push_back(format_number(v));
    for (double v : {s.theta, s.theta_dot, s.theta_ddot, s.alpha, s.alpha_dot, s.beta, s.beta_dot})
        c.push_back(format_number(rad2deg(v)));
    return c;
}

namespace {

std::string join(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
    }
    return out;
}

nlohmann::json constraints_json(const ConstraintReport& r) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : r.entries)
        arr.push_back({{"name", c.name},
                       {"limit", c.limit},
                       {"attained", c.attained},
                       {"violation", c.violation},
                       {"operative", c.operative}});
    return arr;
}

double number_at(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) throw InputError(std::string("plan field '") + key + "' missing");
    return j.at(key).get<double>();
}

}  // namespace

std::string trajectory_csv(const std::vector<FullState>& rows, bool timestamp) {
    std::string out;
    if (timestamp) out += "# generated " + utc_timestamp() + "\n";
    out += join(state_columns()) + "\n";
    for (const auto& r : rows) out += join(state_cells(r)) + "\n";
    return out;
}

nlohmann::json plan_to_json(const LiftPlan& plan, const CraneLimits& lim, const PlannerOptions& opt,
                            bool timestamp) {
    nlohmann::json doc;
    doc["schema"] = kPlanSchemaId;
    if (timestamp) doc["generated"] = utc_timestamp();
    doc["algorithm"] = to_string(opt.algorithm);
    doc["seed"] = opt.algo.seed;
    doc["population"] = opt.algo.population;
    doc["max_evaluations"] = opt.algo.max_evaluations;
    doc["bounds_multiplier"] = opt.bounds_multiplier;
    doc["limits"] = limits_to_json(lim);
    nlohmann::json wps = nlohmann::json::array();
    for (const auto& w : plan.path.waypoints)
        wps.push_back({{"slew_deg", rad2deg(w.theta)}, {"trolley_m", w.d_T}, {"hoist_m", w.d_H}});
    doc["waypoints"] = wps;
    nlohmann::json ops = nlohmann::json::array();
    for (std::size_t k = 0; k < plan.operations.size(); ++k) {
        const auto& op = plan.operations[k];
        const bool slew = op.spec.kind == OperationKind::Slew;
        nlohmann::json o;
        o["index"] = k + 1;
        o["kind"] = to_string(op.spec.kind);
        o["unit"] = slew ? "rad" : "m";
        o["start"] = op.spec.start;
        o["end"] = op.spec.end;
        if (op.spec.kind != OperationKind::Hoist) o["D_H_m"] = op.spec.D_H;
        if (slew) {
            o["D_T_m"] = op.spec.D_T;
            o["start_deg"] = rad2deg(op.spec.start);
            o["end_deg"] = rad2deg(op.spec.end);
            o["rate_form"] = to_string(op.rate_form);
        }
        o["duration_s"] = op.duration;
        o["t_start_s"] = plan.instants[k];
        o["t_end_s"] = plan.instants[k + 1];
        o["f1_s"] = op.objectives.f1;
        o["f2"] = op.objectives.f2;
        o["mu_bar"] = op.mu_bar;
        o["bounds_s"] = {op.problem.t_lo, op.problem.t_hi};
        o["bounds_expansions"] = op.problem.expansions;
        o["pareto_size"] = op.pareto.members.size();
        o["evaluations"] = op.pareto.evaluations;
        o["runtime_s"] = op.pareto.runtime_s;
        o["constraints"] = constraints_json(op.problem.evaluate(op.duration).report);
        ops.push_back(o);
    }
    doc["operations"] = ops;
    doc["time_instants_s"] = plan.instants;
    doc["total_time_s"] = plan.total();
    doc["t_plan_s"] = plan.t_plan;
    return doc;
}

LiftPlan plan_from_json(const nlohmann::json& doc, const CraneLimits& lim) {
    if (!doc.is_object() || doc.value("schema", "") != kPlanSchemaId) throw InputError("not a crane lift plan document");
    if (!doc.contains("waypoints") || !doc["waypoints"].is_array()) throw InputError("plan has no waypoints");
    std::vector<Waypoint> wps;
    for (const auto& w : doc["waypoints"])
        wps.push_back({deg2rad(number_at(w, "slew_deg")), number_at(w, "trolley_m"), number_at(w, "hoist_m")});
    LiftPlan plan;
    plan.path = parse_path(wps);
    const auto& ops = doc.at("operations");
    if (!ops.is_array() || ops.size() != plan.path.operations.size())
        throw InputError("plan operations do not match its waypoints");
    PlannerOptions opt;
    opt.bounds_multiplier = doc.value("bounds_multiplier", 1.0);
    plan.instants.push_back(0.0);
    for (std::size_t k = 0; k < ops.size(); ++k) {
        PlannedOperation op = fixed_operation(plan.path.operations[k], lim, number_at(ops[k], "duration_s"), opt);
        op.from = wps[k];
        op.to = wps[k + 1];
        if (ops[k].contains("mu_bar")) op.mu_bar = ops[k]["mu_bar"].get<double>();
        if (ops[k].contains("rate_form")) {
            const std::string f = ops[k]["rate_form"].get<std::string>();
            op.rate_form = f == "x" ? RateForm::X : f == "auto" ? RateForm::Auto : RateForm::Y;
        }
        plan.instants.push_back(plan.instants.back() + op.duration);
        plan.operations.push_back(std::move(op));
    }
    plan.t_plan = doc.value("t_plan_s", 0.0);
    return plan;
}

std::string front_csv(const ParetoSet& set, bool timestamp) {
    std::string out;
    if (timestamp) out += "# generated " + utc_timestamp() + "\n";
    out += "duration_s,f1_s,f2,violation,feasible,selected\n";
    if (set.empty()) {
        if (set.best_infeasible) {
            const auto& b = *set.best_infeasible;
            out += join({format_number(b.x), format_number(b.objectives.f1), format_number(b.objectives.f2),
                         format_number(b.violation), "0", "0"}) +
                   "\n";
        }
        return out;
    }
    const std::size_t pick = fuzzy_select(set).index;
    for (std::size_t i = 0; i < set.members.size(); ++i) {
        const auto& m = set.members[i];
        out += join({format_number(m.x), format_number(m.objectives.f1), format_number(m.objectives.f2),
                     format_number(m.violation), "1", i == pick ? "1" : "0"}) +
               "\n";
    }
    return out;
}

void write_text(const std::string& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw InputError("cannot write '" + file + "'");
    out << text;
}

nlohmann::json read_json(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open '" + file + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("'" + file + "': " + e.what());
    }
}

std::string improvement_pct(double better, double worse) {
    char buf[32];
    const double pct = worse != 0.0 ? 100.0 * std::abs(worse - better) / std::abs(worse) : 0.0;
    std::snprintf(buf, sizeof buf, "+%.2f%%", pct);
    return buf;
}

OperationSpec parse_operation(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(p);
    auto num = [&](std::size_t i) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(parts.at(i), &used);
        } catch (const std::exception&) {
            throw InputError("bad operation '" + text + "'");
        }
        if (used != parts[i].size()) throw InputError("bad operation '" + text + "'");
        return v;
    };
    if (parts.size() == 3 && parts[0] == "hoist") return OperationSpec::hoist(num(1), num(2));
    if (parts.size() == 4 && parts[0] == "trolley") return OperationSpec::trolley(num(1), num(2), num(3));
    if (parts.size() == 5 && parts[0] == "slew")
        return OperationSpec::slew(deg2rad(num(1)), deg2rad(num(2)), num(3), num(4));
    throw InputError("operation must be hoist:FROM:TO, trolley:FROM:TO:D_H or slew:FROM_DEG:TO_DEG:D_T:D_H");
}

}  // namespace crane
