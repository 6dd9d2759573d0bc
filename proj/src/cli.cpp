#include <CLI11.hpp>

#include "crane/commands.hpp"

namespace crane {

int run_cli(int argc, const char* const* argv, std::ostream& log, std::ostream& err) {
    CLI::App app{"Anti-swing tower crane trajectory planner"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string algo = "gde3", model = "full";
    double dt = 0.0;
    std::uint64_t seed = cfg.algo.seed;
    bool no_timestamp = false;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--limits", cfg.limits_file, "crane limits JSON");
        sub->add_option("--algo", algo, "nsga2 or gde3")->check(CLI::IsMember({"nsga2", "gde3"}));
        sub->add_option("--seed", seed, "master seed");
        sub->add_option("--pop", cfg.algo.population, "population size");
        sub->add_option("--max-evals", cfg.algo.max_evaluations, "evaluation budget per run");
        sub->add_option("--bounds-multiplier", cfg.bounds_multiplier, "upper duration bound factor");
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_flag("--no-timestamp", no_timestamp, "omit the timestamp line from outputs");
    };
    auto* plan = app.add_subcommand("plan", "plan a lifting path");
    common(plan);
    plan->add_option("--path", cfg.path_file, "path CSV")->required();
    plan->add_option("--dt", dt, "sampling step, s");

    auto* pareto = app.add_subcommand("pareto", "Pareto front of one operation");
    common(pareto);
    pareto->add_option("--path", cfg.path_file, "path CSV");
    pareto->add_option("--op", cfg.op_index, "1-based operation index in the path");
    pareto->add_option("--operation", cfg.operation, "inline operation, e.g. hoist:5:4 or slew:50:80:2.5:5");

    auto* compare = app.add_subcommand("compare-moea", "compare NSGA-II and GDE3");
    common(compare);
    compare->add_option("--path", cfg.path_file, "path CSV (default: the three benchmark operations)");
    compare->add_option("--repeats", cfg.repeats, "seeded repeats per operation");

    auto* simulate = app.add_subcommand("simulate", "simulate payload swing");
    common(simulate);
    simulate->add_option("--plan", cfg.plan_file, "plan JSON");
    simulate->add_option("--path", cfg.path_file, "path CSV, planned first");
    simulate->add_option("--dt", dt, "integration step, s");
    simulate->add_option("--model", model, "simplified or full")->check(CLI::IsMember({"simplified", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        log << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitInput;
    }
    cfg.algorithm = parse_algorithm(algo);
    cfg.model = model == "simplified" ? SwingModel::Simplified : SwingModel::Full;
    cfg.algo.seed = seed;
    cfg.timestamp = !no_timestamp;
    if (dt != 0.0) cfg.dt = dt;

    if (plan->parsed()) return cmd_plan(cfg, log, err);
    if (pareto->parsed()) {
        if (cfg.operation.empty() && (cfg.path_file.empty() || cfg.op_index == 0)) {
            err << "pareto needs --operation or --path with --op\n";
            return kExitInput;
        }
        return cmd_pareto(cfg, log, err);
    }
    if (compare->parsed()) return cmd_compare_moea(cfg, log, err);
    if (cfg.plan_file.empty() && cfg.path_file.empty()) {
        err << "simulate needs --plan or --path\n";
        return kExitInput;
    }
    return cmd_simulate(cfg, log, err);
}

}  // namespace crane
