#include "crane/commands.hpp"

#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>

#include "crane/errors.hpp"
#include "crane/io.hpp"
#include "crane/simulator.hpp"

namespace crane {

namespace {

CraneLimits limits_of(const RunConfig& cfg) {
    return cfg.limits_file.empty() ? CraneLimits{} : load_limits(cfg.limits_file);
}

PlannerOptions options_of(const RunConfig& cfg) {
    PlannerOptions o;
    o.algorithm = cfg.algorithm;
    o.algo = cfg.algo;
    o.bounds_multiplier = cfg.bounds_multiplier;
    return o;
}

std::string out_file(const RunConfig& cfg, const char* name) {
    std::filesystem::create_directories(cfg.out_dir);
    return (std::filesystem::path(cfg.out_dir) / name).string();
}

LiftPath path_of(const RunConfig& cfg) {
    if (cfg.path_file.empty()) throw InputError("--path is required");
    return parse_path(read_path_csv(cfg.path_file));
}

std::string describe(const OperationSpec& op) {
    std::ostringstream os;
    os << to_string(op.kind) << ' ';
    if (op.kind == OperationKind::Slew)
        os << format_number(rad2deg(op.start)) << "->" << format_number(rad2deg(op.end)) << " deg";
    else
        os << format_number(op.start) << "->" << format_number(op.end) << " m";
    return os.str();
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const InfeasibleOperation& e) {
        err << "infeasible: " << e.what() << "; " << e.diagnostics << '\n';
        return kExitInfeasible;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const MalformedPath& e) {
        err << "malformed path: " << e.what() << '\n';
        return kExitInput;
    } catch (const ParameterError& e) {
        err << "invalid parameter: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    }
}

struct RunStats {
    double runtime = 0.0, spacing = 0.0, hyperarea = 0.0;
    std::size_t size = 0;
};

nlohmann::json stats_json(const std::vector<RunStats>& runs, std::uint64_t seed0) {
    nlohmann::json j, arr = nlohmann::json::array();
    double rt = 0, sp = 0, ha = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        rt += runs[r].runtime;
        sp += runs[r].spacing;
        ha += runs[r].hyperarea;
        arr.push_back({{"seed", seed0 + r},
                       {"runtime_s", runs[r].runtime},
                       {"spacing", runs[r].spacing},
                       {"hyperarea", runs[r].hyperarea},
                       {"front_size", runs[r].size}});
    }
    const double n = static_cast<double>(runs.size());
    j["runtime_mean_s"] = rt / n;
    j["spacing_mean"] = sp / n;
    j["hyperarea_mean"] = ha / n;
    j["runs"] = arr;
    return j;
}

}  // namespace

int cmd_plan(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
    return guarded(err, [&] {
        const CraneLimits lim = limits_of(cfg);
        const LiftPath path = path_of(cfg);
        const PlannerOptions opt = options_of(cfg);
        const LiftPlan plan = plan_lift(path, lim, opt);
        const double dt = cfg.dt.value_or(0.01);
        write_text(out_file(cfg, "plan.json"), plan_to_json(plan, lim, opt, cfg.timestamp).dump(2) + "\n");
        write_text(out_file(cfg, "trajectory.csv"), trajectory_csv(sample_plan(plan, dt), cfg.timestamp));
        for (std::size_t k = 0; k < plan.operations.size(); ++k) {
            const auto& op = plan.operations[k];
            log << k + 1 << ' ' << describe(op.spec) << ": " << format_number(op.duration) << " s, effort "
                << format_number(op.objectives.f2) << ", mu " << format_number(op.mu_bar) << '\n';
        }
        log << "total " << format_number(plan.total()) << " s, planning time " << format_number(plan.t_plan)
            << " s\n";
        return kExitOk;
    });
}

int cmd_pareto(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
    return guarded(err, [&] {
        const CraneLimits lim = limits_of(cfg);
        OperationSpec spec;
        if (!cfg.operation.empty()) {
            spec = parse_operation(cfg.operation);
        } else {
            const LiftPath path = path_of(cfg);
            if (cfg.op_index < 1 || cfg.op_index > static_cast<int>(path.operations.size()))
                throw InputError("--op must select an operation between 1 and " +
                                 std::to_string(path.operations.size()));
            spec = path.operations[cfg.op_index - 1];
        }
        const MotopProblem prob = MotopProblem::make(spec, lim, cfg.bounds_multiplier);
        const ParetoSet set = run_moea(cfg.algorithm, prob, cfg.algo);
        write_text(out_file(cfg, "front.csv"), front_csv(set, cfg.timestamp));
        if (set.empty()) {
            err << "infeasible: no feasible duration for " << describe(spec) << "; minimum violation "
                << format_number(set.best_infeasible->violation) << " at " << format_number(set.best_infeasible->x)
                << " s\n";
            return kExitInfeasible;
        }
        const auto pick = fuzzy_select(set);
        const auto& m = set.members;
        log << describe(spec) << ": " << m.size() << " solutions, extremes (" << format_number(m.front().x) << ", "
            << format_number(m.front().objectives.f2) << ") (" << format_number(m.back().x) << ", "
            << format_number(m.back().objectives.f2) << "), selected (" << format_number(m[pick.index].x) << ", "
            << format_number(m[pick.index].objectives.f2) << ") mu " << format_number(pick.mu_bar) << '\n';
        return kExitOk;
    });
}

int cmd_compare_moea(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
    return guarded(err, [&] {
        if (cfg.repeats < 1) throw ParameterError("--repeats must be at least 1");
        const CraneLimits lim = limits_of(cfg);
        std::vector<OperationSpec> ops;
        if (cfg.path_file.empty())
            ops = {OperationSpec::hoist(5, 4), OperationSpec::trolley(2, 2.5, 5),
                   OperationSpec::slew(deg2rad(50), deg2rad(80), 2.5, 5)};
        else
            ops = path_of(cfg).operations;

        nlohmann::json doc;
        doc["repeats"] = cfg.repeats;
        doc["seed"] = cfg.algo.seed;
        doc["population"] = cfg.algo.population;
        doc["max_evaluations"] = cfg.algo.max_evaluations;
        doc["hyperarea_normalization"] = "joint ideal/nadir of both fronts per repeat, reference (1,1)";
        std::string csv = "operation,metric,nsga2,gde3,better,improvement\n";
        int wins = 0, comparisons = 0;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& spec : ops) {
            const MotopProblem prob = MotopProblem::make(spec, lim, cfg.bounds_multiplier);
            std::vector<RunStats> ns(cfg.repeats), gd(cfg.repeats);
            int op_wins = 0;
            for (int r = 0; r < cfg.repeats; ++r) {
                AlgoConfig a = cfg.algo;
                a.seed = cfg.algo.seed + r;
                const ParetoSet n = nsga2_run(prob, a), g = gde3_run(prob, a);
                const auto fn = objectives_of(n), fg = objectives_of(g);
                const Normalization norm = joint_normalization({fn, fg});
                const double nan = std::numeric_limits<double>::quiet_NaN();
                ns[r] = {n.runtime_s, fn.size() >= 2 ? spacing(fn) : nan, hyperarea(fn, norm).value, fn.size()};
                gd[r] = {g.runtime_s, fg.size() >= 2 ? spacing(fg) : nan, hyperarea(fg, norm).value, fg.size()};
                if (gd[r].spacing < ns[r].spacing) ++op_wins;
                ++comparisons;
            }
            wins += op_wins;
            nlohmann::json o;
            o["operation"] = describe(spec);
            o["nsga2"] = stats_json(ns, cfg.algo.seed);
            o["gde3"] = stats_json(gd, cfg.algo.seed);
            o["spacing_wins_gde3"] = op_wins;
            nlohmann::json table;
            const char* keys[] = {"runtime_mean_s", "spacing_mean", "hyperarea_mean"};
            const char* names[] = {"runtime_s", "spacing", "hyperarea"};
            for (int m = 0; m < 3; ++m) {
                const double vn = o["nsga2"][keys[m]], vg = o["gde3"][keys[m]];
                const bool higher_better = m == 2;
                const bool gde3_better = higher_better ? vg > vn : vg < vn;
                const std::string pct = gde3_better ? improvement_pct(vg, vn) : improvement_pct(vn, vg);
                const std::string cn = format_number(vn) + (gde3_better ? "" : " (" + pct + ")");
                const std::string cg = format_number(vg) + (gde3_better ? " (" + pct + ")" : "");
                table[names[m]] = {{"nsga2", cn}, {"gde3", cg}, {"better", gde3_better ? "gde3" : "nsga2"}};
                csv += describe(spec) + "," + names[m] + "," + format_number(vn) + "," + format_number(vg) + "," +
                       (gde3_better ? "gde3" : "nsga2") + "," + pct + "\n";
            }
            o["table"] = table;
            arr.push_back(o);
            log << describe(spec) << ": S " << table["spacing"]["nsga2"].get<std::string>() << " vs "
                << table["spacing"]["gde3"].get<std::string>() << ", HA "
                << table["hyperarea"]["nsga2"].get<std::string>() << " vs "
                << table["hyperarea"]["gde3"].get<std::string>() << '\n';
        }
        doc["operations"] = arr;
        doc["spacing_wins_gde3"] = wins;
        doc["comparisons"] = comparisons;
        write_text(out_file(cfg, "metrics.json"), doc.dump(2) + "\n");
        write_text(out_file(cfg, "metrics.csv"), csv);
        log << "GDE3 spacing lower in " << wins << "/" << comparisons << " runs\n";
        return kExitOk;
    });
}

int cmd_simulate(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
    return guarded(err, [&] {
        const CraneLimits lim = limits_of(cfg);
        LiftPlan plan;
        if (!cfg.plan_file.empty())
            plan = plan_from_json(read_json(cfg.plan_file), lim);
        else
            plan = plan_lift(path_of(cfg), lim, options_of(cfg));
        const double dt = cfg.dt.value_or(1e-3);

        std::string csv;
        if (cfg.timestamp) csv += "# generated " + utc_timestamp() + "\n";
        std::vector<std::string> cols = state_columns();
        for (const char* c : {"sim_alpha_rad", "sim_alpha_dot_radps", "sim_beta_rad", "sim_beta_dot_radps",
                              "sim_alpha_deg", "sim_beta_deg"})
            cols.push_back(c);
        for (std::size_t i = 0; i < cols.size(); ++i) csv += (i ? "," : "") + cols[i];
        csv += "\n";

        nlohmann::json summary;
        summary["model"] = cfg.model == SwingModel::Full ? "full" : "simplified";
        summary["dt_s"] = dt;
        nlohmann::json arr = nlohmann::json::array();
        double max_a = 0, max_b = 0;
        bool failed = false;
        for (std::size_t k = 0; k < plan.operations.size(); ++k) {
            const auto& op = plan.operations[k];
            nlohmann::json o{{"index", k + 1}, {"kind", to_string(op.spec.kind)}, {"duration_s", op.duration}};
            SimResult r;
            try {
                r = simulate_operation(op, dt, cfg.model);
            } catch (const DomainError& e) {
                o["error"] = e.what();
                failed = true;
                arr.push_back(o);
                continue;
            }
            const std::size_t stride = std::max<std::size_t>(1, std::lround(0.01 / (op.duration / (r.time.size() - 1))));
            double flat_gap = 0.0;
            for (std::size_t i = 0; i < r.time.size(); ++i) {
                FullState s = op.state_at(r.time[i]);
                flat_gap = std::max({flat_gap, std::abs(s.alpha - r.states[i].alpha), std::abs(s.beta - r.states[i].beta)});
                const bool last = i + 1 == r.time.size();
                if ((k > 0 && i == 0) || (i % stride != 0 && !last)) continue;
                s.t = plan.instants[k] + r.time[i];
                if (last) s.t = plan.instants[k + 1];
                auto cells = state_cells(s);
                const auto& w = r.states[i];
                for (double v : {w.alpha, w.alpha_dot, w.beta, w.beta_dot, rad2deg(w.alpha), rad2deg(w.beta)})
                    cells.push_back(format_number(v));
                for (std::size_t c = 0; c < cells.size(); ++c) csv += (c ? "," : "") + cells[c];
                csv += "\n";
            }
            max_a = std::max(max_a, r.max_abs_alpha);
            max_b = std::max(max_b, r.max_abs_beta);
            o["max_abs_alpha_deg"] = rad2deg(r.max_abs_alpha);
            o["max_abs_beta_deg"] = rad2deg(r.max_abs_beta);
            o["residual"] = {{"alpha_rad", r.residual.alpha},
                             {"alpha_dot_radps", r.residual.alpha_dot},
                             {"beta_rad", r.residual.beta},
                             {"beta_dot_radps", r.residual.beta_dot}};
            o["flat_vs_sim_max_rad"] = flat_gap;
            arr.push_back(o);
            log << k + 1 << ' ' << describe(op.spec) << ": max |alpha| " << format_number(rad2deg(r.max_abs_alpha))
                << " deg, max |beta| " << format_number(rad2deg(r.max_abs_beta)) << " deg, residual alpha "
                << format_number(r.residual.alpha) << " rad\n";
        }
        summary["operations"] = arr;
        summary["max_abs_alpha_deg"] = rad2deg(max_a);
        summary["max_abs_beta_deg"] = rad2deg(max_b);
        write_text(out_file(cfg, "sim.csv"), csv);
        write_text(out_file(cfg, "summary.json"), summary.dump(2) + "\n");
        if (failed) {
            err << "numeric error: swing left the admissible range in at least one operation\n";
            return kExitNumeric;
        }
        return kExitOk;
    });
}

}  // namespace crane
