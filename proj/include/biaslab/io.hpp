#pragma once

#include <iosfwd>

#include <json.hpp>

#include "biaslab/analysis.hpp"
#include "biaslab/taskgraph.hpp"

namespace biaslab::io {

using json = nlohmann::json;

// Schema tags. All machine-read numbers in these files are integers or
// "p/q" strings; decimal floats never appear in a parsed field.
inline constexpr const char* kInstanceSchema = "biaslab/instance/v1";
inline constexpr const char* kDagSchema = "biaslab/dag/v1";
inline constexpr const char* kTraceSchema = "biaslab/trace/v1";
inline constexpr const char* kReportSchema = "biaslab/report/v1";
inline constexpr const char* kWalkSchema = "biaslab/walk/v1";

json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j);

json dag_to_json(const WeightedDag& dag);
WeightedDag dag_from_json(const json& j);

json trace_to_json(const AgentTrace& trace);
AgentTrace trace_from_json(const json& j);

json report_to_json(const BoundReport& report, const AgentTrace& trace);
BoundReport report_from_json(const json& j);

json walk_to_json(const WalkResult& walk, const Bias& bias);

std::string trace_digest(const AgentTrace& trace);

/// Flat bound rows: one line per bound per trace under the header
/// trace_id,beta,alpha,objective,steps,cost,opt,ratio,bound,lhs,rhs,holds
void write_csv_header(std::ostream& out);
void write_csv_rows(std::ostream& out, const AgentTrace& trace, const BoundReport& report);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace biaslab::io
