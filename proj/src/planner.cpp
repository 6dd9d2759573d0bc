#include "crane/planner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

#include "crane/errors.hpp"

namespace crane {

namespace {

constexpr double kSame = 1e-12;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

double parse_number(const std::string& field, int line) {
    const std::string f = trim(field);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(f, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (f.empty() || used != f.size() || !std::isfinite(v))
        throw InputError("path line " + std::to_string(line) + ": bad number '" + f + "'");
    return v;
}

// Nearest representative of angle a to the reference angle.
double unwrap_near(double a, double ref) { return ref + std::remainder(a - ref, 2.0 * kPi); }

}  // namespace

int LiftPath::count(OperationKind k) const {
    return static_cast<int>(std::count_if(operations.begin(), operations.end(),
                                          [k](const OperationSpec& o) { return o.kind == k; }));
}

LiftPath parse_path(const std::vector<Waypoint>& wps) {
    if (wps.size() < 2) throw MalformedPath("a lifting path needs at least two waypoints");
    LiftPath path;
    path.waypoints = wps;
    for (std::size_t j = 0; j < wps.size(); ++j) {
        const auto& w = wps[j];
        if (!(w.d_T > 0.0) || !(w.d_H > 0.0) || !std::isfinite(w.theta))
            throw MalformedPath("waypoint " + std::to_string(j) + " needs positive trolley and hoist values");
    }
    for (std::size_t j = 1; j < wps.size(); ++j) {
        const auto &a = wps[j - 1], &b = wps[j];
        const bool ds = std::abs(b.theta - a.theta) > kSame;
        const bool dt = std::abs(b.d_T - a.d_T) > kSame;
        const bool dh = std::abs(b.d_H - a.d_H) > kSame;
        const int changed = ds + dt + dh;
        if (changed != 1)
            throw MalformedPath("waypoints " + std::to_string(j - 1) + " and " + std::to_string(j) + " change " +
                                std::to_string(changed) + " coordinates; exactly one is required");
        if (dh)
            path.operations.push_back(OperationSpec::hoist(a.d_H, b.d_H));
        else if (dt)
            path.operations.push_back(OperationSpec::trolley(a.d_T, b.d_T, a.d_H));
        else
            path.operations.push_back(OperationSpec::slew(a.theta, b.theta, a.d_T, a.d_H));
    }
    return path;
}

std::vector<Waypoint> parse_path_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    std::vector<Waypoint> out;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header) {
            std::string compact;
            for (char ch : t)
                if (ch != ' ' && ch != '\t') compact += ch;
            if (compact != "slew_deg,trolley_m,hoist_m")
                throw InputError("path header must be 'slew_deg,trolley_m,hoist_m'");
            header = true;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(t);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        if (fields.size() != 3) throw InputError("path line " + std::to_string(lineno) + ": expected 3 fields");
        out.push_back({deg2rad(parse_number(fields[0], lineno)), parse_number(fields[1], lineno),
                       parse_number(fields[2], lineno)});
    }
    if (!header) throw InputError("path file is empty");
    return out;
}

std::vector<Waypoint> read_path_csv(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open path file '" + file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_path_csv(buf.str());
}

FullState PlannedOperation::state_at(double t) const {
    if (!(t >= 0.0 && t <= duration)) throw ParameterError("time outside operation");
    FullState s;
    s.t = t;
    const Waypoint& w = t == duration ? to : from;
    s.theta = w.theta;
    s.d_T = w.d_T;
    s.d_H = w.d_H;
    if (t == 0.0 || t == duration) return s;
    switch (spec.kind) {
        case OperationKind::Hoist:
            s.d_H = primary.eval(t, 0);
            s.d_H_dot = primary.eval(t, 1);
            s.d_H_ddot = primary.eval(t, 2);
            break;
        case OperationKind::Trolley: {
            const TrolleyState ts = trolley_from_flat(jet_at(primary, t), spec.D_H, g);
            s.d_T = ts.d_T;
            s.d_T_dot = ts.d_T_dot;
            s.d_T_ddot = ts.d_T_ddot;
            s.alpha = ts.alpha;
            s.alpha_dot = ts.alpha_dot;
            break;
        }
        case OperationKind::Slew: {
            const SlewState ss = slew_from_flat(jet_at(primary, t), jet_at(secondary, t), spec.D_T, spec.D_H, g,
                                                rate_form);
            s.theta = unwrap_near(ss.theta, from.theta);
            s.theta_dot = ss.theta_dot;
            s.theta_ddot = ss.theta_ddot;
            s.alpha = ss.alpha;
            s.alpha_dot = ss.alpha_dot;
            s.beta = ss.beta;
            s.beta_dot = ss.beta_dot;
            break;
        }
    }
    return s;
}

namespace {

Waypoint endpoint(const OperationSpec& spec, double value, const Waypoint* base) {
    Waypoint w = base ? *base : Waypoint{0.0, spec.D_T, spec.D_H};
    if (spec.kind == OperationKind::Hoist) w.d_H = value;
    if (spec.kind == OperationKind::Trolley) w.d_T = value;
    if (spec.kind == OperationKind::Slew) w.theta = value;
    return w;
}

void materialize(PlannedOperation& p, double T) {
    p.duration = T;
    const auto& spec = p.spec;
    if (spec.kind == OperationKind::Hoist) {
        p.primary = hoist_poly(spec.start, spec.end, T);
    } else if (spec.kind == OperationKind::Trolley) {
        p.primary = flat_poly_11(spec.start, spec.end, T);
    } else {
        std::tie(p.primary, p.secondary) = slew_flat_segments(spec, T);
        p.rate_form = p.problem.rate_form;
    }
    p.objectives = p.problem.evaluate(T).objectives;
}

PlannedOperation prepare(const OperationSpec& spec, const CraneLimits& lim, const PlannerOptions& opt) {
    PlannedOperation p;
    p.spec = spec;
    p.g = lim.g;
    p.problem = MotopProblem::make(spec, lim, opt.bounds_multiplier, opt.expand_bounds);
    p.from = endpoint(spec, spec.start, nullptr);
    p.to = endpoint(spec, spec.end, nullptr);
    return p;
}

std::string describe(const Evaluation& e) {
    std::ostringstream os;
    for (const auto& c : e.report.entries)
        if (c.operative && c.violation > 0) os << c.name << " attained " << c.attained << " > " << c.limit << "; ";
    return os.str();
}

}  // namespace

PlannedOperation plan_operation(const OperationSpec& spec, const CraneLimits& lim, const PlannerOptions& opt) {
    PlannedOperation p = prepare(spec, lim, opt);
    p.pareto = run_moea(opt.algorithm, p.problem, opt.algo);
    if (p.pareto.empty()) {
        const Individual& best = *p.pareto.best_infeasible;
        throw InfeasibleOperation(std::string("no feasible duration for ") + to_string(spec.kind) + " operation", -1,
                                  best.violation,
                                  "best duration " + std::to_string(best.x) + " s: " + describe(p.problem.evaluate(best.x)));
    }
    const FuzzyChoice pick = fuzzy_select(p.pareto);
    p.mu_bar = pick.mu_bar;
    materialize(p, p.pareto.members[pick.index].x);
    return p;
}

PlannedOperation fixed_operation(const OperationSpec& spec, const CraneLimits& lim, double duration,
                                 const PlannerOptions& opt) {
    PlannedOperation p = prepare(spec, lim, opt);
    materialize(p, duration);
    return p;
}

FullState LiftPlan::state_at(double t) const {
    if (operations.empty()) throw ParameterError("empty plan");
    const double end = total();
    if (!(t >= 0.0 && t <= end)) throw ParameterError("time outside plan");
    auto it = std::upper_bound(instants.begin(), instants.end(), t);
    std::size_t k = it == instants.begin() ? 0 : static_cast<std::size_t>(it - instants.begin()) - 1;
    if (k >= operations.size()) k = operations.size() - 1;
    const auto& op = operations[k];
    const double local = t == instants[k + 1] ? op.duration : std::clamp(t - instants[k], 0.0, op.duration);
    FullState s = op.state_at(local);
    s.t = t;
    return s;
}

LiftPlan plan_lift(const LiftPath& path, const CraneLimits& lim, const PlannerOptions& opt) {
    if (path.operations.empty()) throw MalformedPath("path has no operations");
    std::vector<std::future<PlannedOperation>> jobs;
    for (std::size_t k = 0; k < path.operations.size(); ++k) {
        PlannerOptions local = opt;
        local.algo.seed = opt.algo.seed + k;
        jobs.push_back(std::async(std::launch::async, [spec = path.operations[k], lim, local] {
            return plan_operation(spec, lim, local);
        }));
    }
    LiftPlan plan;
    plan.path = path;
    plan.instants.push_back(0.0);
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        PlannedOperation op;
        try {
            op = jobs[k].get();
        } catch (const InfeasibleOperation& e) {
            for (std::size_t r = k + 1; r < jobs.size(); ++r) jobs[r].wait();
            throw InfeasibleOperation(std::string(e.what()) + " (operation " + std::to_string(k + 1) + ")",
                                      static_cast<int>(k), e.min_violation, e.diagnostics);
        }
        op.from = path.waypoints[k];
        op.to = path.waypoints[k + 1];
        plan.t_plan = std::max(plan.t_plan, op.pareto.runtime_s);
        plan.instants.push_back(plan.instants.back() + op.duration);
        plan.operations.push_back(std::move(op));
    }
    return plan;
}

std::vector<FullState> sample_plan(const LiftPlan& plan, double dt) {
    if (!(dt > 0.0)) throw ParameterError("sample step must be positive");
    std::vector<double> times;
    const double end = plan.total();
    const auto steps = static_cast<long long>(std::floor(end / dt + 1e-9));
    for (long long i = 0; i <= steps; ++i) times.push_back(i * dt);
    times.insert(times.end(), plan.instants.begin(), plan.instants.end());
    std::sort(times.begin(), times.end());
    std::vector<double> merged;
    for (double t : times) {
        if (t > end) continue;
        if (!merged.empty() && std::abs(t - merged.back()) < 1e-9) {
            // Prefer the exact instant over a grid point that lands within rounding of it.
            if (std::binary_search(plan.instants.begin(), plan.instants.end(), t)) merged.back() = t;
            continue;
        }
        merged.push_back(t);
    }
    std::vector<FullState> rows;
    rows.reserve(merged.size());
    for (double t : merged) rows.push_back(plan.state_at(t));
    return rows;
}

}  // namespace crane
