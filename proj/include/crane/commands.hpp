#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "crane/moea.hpp"
#include "crane/planner.hpp"

namespace crane {

enum ExitCode : int { kExitOk = 0, kExitInfeasible = 2, kExitInput = 3, kExitNumeric = 4 };

struct RunConfig {
    std::string limits_file;  // empty: built-in defaults
    std::string path_file;
    std::string plan_file;
    std::string out_dir = ".";
    Algorithm algorithm = Algorithm::GDE3;
    AlgoConfig algo;
    double bounds_multiplier = 1.0;
    std::optional<double> dt;  // plan: sample step (0.01); simulate: integration step (0.001)
    int repeats = 10;
    SwingModel model = SwingModel::Full;
    bool timestamp = true;
    int op_index = 0;  // 1-based, pareto only
    std::string operation;  // inline operation, pareto only
};

// Each command writes its files into out_dir and returns an exit code; errors are mapped
// to codes and reported on err.
int cmd_plan(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_pareto(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_compare_moea(const RunConfig& cfg, std::ostream& log, std::ostream& err);
int cmd_simulate(const RunConfig& cfg, std::ostream& log, std::ostream& err);

// CLI entry used by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& log, std::ostream& err);

}  // namespace crane
