#pragma once

// Stakeholder utilities, distances from the ideal utility vector, and
// process rankings per stakeholder, collectively and per cohort.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dproc {

class AnalysisError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// log(1 + favourable) / log(1 + valid). Natural log; the base cancels.
/// Throws AnalysisError for valid == 0 or favourable outside [0, valid].
double utility(std::uint64_t favourable, std::uint64_t valid);

/// The exponent u with (1 + favourable) = (1 + valid)^u. Same value as
/// utility(); named for benchmarking reports. Unlike utility() it does not
/// require favourable <= valid.
double implied_exponent(std::uint64_t favourable, std::uint64_t valid);

/// Inverse of implied_exponent: (1 + valid)^u - 1, unrounded.
double favourable_for_exponent(double u, std::uint64_t valid);

/// Euclidean distance of the utility vector from the all-ones vector.
double h_distance(std::span<const double> utilities);

struct UtilityRecord {
    std::string process_name;
    std::string stakeholder_name;
    std::uint64_t valid_count = 0;
    std::uint64_t favourable_count = 0;
    double utility = 0.0;
};

UtilityRecord make_record(std::string process, std::string stakeholder, std::uint64_t favourable,
                          std::uint64_t valid);

struct RankedProcess {
    std::string process_name;
    double score = 0.0; // utility or H, depending on the ranking
    int rank = 0;       // 1 = best
    bool tied = false;  // equal score to a neighbour; order then follows declaration
};

struct StakeholderRanking {
    std::string stakeholder_name;
    std::vector<RankedProcess> ranking; // best first
};

/// Process x stakeholder utility matrix. Process and stakeholder order is
/// the order of first appearance in the records.
class UtilityTable {
  public:
    explicit UtilityTable(std::vector<UtilityRecord> records);

    const std::vector<std::string> &processes() const { return processes_; }
    const std::vector<std::string> &stakeholders() const { return stakeholders_; }
    const std::vector<UtilityRecord> &records() const { return records_; }
    const UtilityRecord &at(std::size_t process, std::size_t stakeholder) const;

  private:
    std::vector<UtilityRecord> records_;
    std::vector<std::string> processes_;
    std::vector<std::string> stakeholders_;
    std::vector<std::size_t> index_; // process-major
};

/// Per stakeholder, processes by descending utility.
std::vector<StakeholderRanking> rank_processes(const UtilityTable &table);

/// Processes by ascending H over all stakeholders.
std::vector<RankedProcess> rank_collective(const UtilityTable &table);

struct CohortRow {
    std::vector<std::string> subset;
    std::vector<double> h_values; // one per process, table order
    std::string argmin_process;
    bool tied = false;
};

/// One row per non-empty stakeholder subset, ordered by size, then
/// lexicographically by stakeholder declaration index.
std::vector<CohortRow> cohort_analysis(const UtilityTable &table);

} // namespace dproc
