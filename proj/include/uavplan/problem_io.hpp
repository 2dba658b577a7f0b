#pragma once

#include <string>

#include "uavplan/problem.hpp"

namespace uavplan {

inline constexpr const char* kProblemFormat = "uavplan-problem/1";
inline constexpr const char* kTrajectoryFormat = "uavplan-trajectory/1";
inline constexpr const char* kReportFormat = "uavplan-report/1";

std::string serialize_problem(const DeliveryProblem& problem);
DeliveryProblem parse_problem(const std::string& text);
DeliveryProblem load_problem(const std::string& path);
void save_problem(const DeliveryProblem& problem, const std::string& path);

// `problem_name` is recorded for reference only; parsing does not check it.
std::string serialize_trajectory(const Trajectory& trajectory, const std::string& problem_name = {});
Trajectory parse_trajectory(const std::string& text);
Trajectory load_trajectory(const std::string& path);
void save_trajectory(const Trajectory& trajectory, const std::string& path,
                     const std::string& problem_name = {});

std::string serialize_report(const FlightReport& report);
FlightReport parse_report(const std::string& text);

}  // namespace uavplan
