#pragma once

// Report emission: trace listings, utility tables, cohort tables, DOT graphs.

#include "dproc/process_model.hpp"
#include "dproc/trace_enumeration.hpp"
#include "dproc/utility_ranking.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace dproc {

enum class ReportFormat { table, csv, jsonl };

std::optional<ReportFormat> report_format_from_string(std::string_view s);

/// Fixed-point with `decimals` digits, e.g. 0.982869.
std::string format_fixed(double value, int decimals = 6);

/// "1st", "2nd", "3rd", "4th", "11th", ...
std::string ordinal(int n);

void write_traces(std::ostream &os, const TraceSet &traces, ReportFormat format);
void write_count(std::ostream &os, const std::string &process_name, std::uint64_t count,
                 ReportFormat format);

/// Per stakeholder: valid(D), S(D), u_S(D) and rank for every process.
void write_utilities(std::ostream &os, const UtilityTable &table, ReportFormat format);

/// Collective H and rank per process, then one H row per stakeholder subset
/// with its minimizing process.
void write_cohorts(std::ostream &os, const UtilityTable &table, ReportFormat format);

/// Graphviz digraph: one node per activity, one labelled edge per
/// (subject, object) pair; mustexist marks its node.
std::string export_dot(const DeclarativeProcess &process);

} // namespace dproc
