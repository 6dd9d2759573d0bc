#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "crane/planner.hpp"
#include "crane/simulator.hpp"

namespace crane {

constexpr const char* kPlanSchemaId = "crane-lift-plan/1";

std::string format_number(double v);
std::string utc_timestamp();

// Column names of a sampled full-state row: SI columns first, then the degree set.
std::vector<std::string> state_columns();
std::vector<std::string> state_cells(const FullState& s);

std::string trajectory_csv(const std::vector<FullState>& rows, bool timestamp);

nlohmann::json plan_to_json(const LiftPlan& plan, const CraneLimits& lim, const PlannerOptions& opt,
                            bool timestamp);

// Rebuilds a plan from its JSON form (waypoints and durations); no optimization is run.
LiftPlan plan_from_json(const nlohmann::json& doc, const CraneLimits& lim);

std::string front_csv(const ParetoSet& set, bool timestamp);

void write_text(const std::string& file, const std::string& text);
nlohmann::json read_json(const std::string& file);

// "+12.34%" style relative improvement of the better value over the worse one.
std::string improvement_pct(double better, double worse);

OperationSpec parse_operation(const std::string& text);

}  // namespace crane
