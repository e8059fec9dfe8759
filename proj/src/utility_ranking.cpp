#include "dproc/utility_ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dproc {

double implied_exponent(std::uint64_t favourable, std::uint64_t valid) {
    if (valid == 0)
        throw AnalysisError("utility is undefined for a process with no valid traces");
    return std::log1p(static_cast<double>(favourable)) / std::log1p(static_cast<double>(valid));
}

double utility(std::uint64_t favourable, std::uint64_t valid) {
    if (favourable > valid)
        throw AnalysisError("favourable count " + std::to_string(favourable) +
                            " exceeds valid count " + std::to_string(valid));
    return implied_exponent(favourable, valid);
}

double favourable_for_exponent(double u, std::uint64_t valid) {
    return std::expm1(u * std::log1p(static_cast<double>(valid)));
}

double h_distance(std::span<const double> utilities) {
    if (utilities.empty())
        throw AnalysisError("H distance needs at least one utility");
    double sum = 0.0;
    for (double u : utilities)
        sum += (1.0 - u) * (1.0 - u);
    return std::sqrt(sum);
}

UtilityRecord make_record(std::string process, std::string stakeholder, std::uint64_t favourable,
                          std::uint64_t valid) {
    return {std::move(process), std::move(stakeholder), valid, favourable, utility(favourable, valid)};
}

namespace {

std::size_t index_of(std::vector<std::string> &names, const std::string &name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end())
        return static_cast<std::size_t>(it - names.begin());
    names.push_back(name);
    return names.size() - 1;
}

/// Stable sort of declaration indices by score; ties keep declaration order.
std::vector<RankedProcess> rank_by(const std::vector<std::string> &names,
                                   const std::vector<double> &scores, bool descending) {
    std::vector<std::size_t> order(names.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return descending ? scores[a] > scores[b] : scores[a] < scores[b];
    });
    std::vector<RankedProcess> out;
    for (std::size_t i = 0; i < order.size(); ++i)
        out.push_back({names[order[i]], scores[order[i]], static_cast<int>(i + 1), false});
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].score == out[i - 1].score)
            out[i].tied = out[i - 1].tied = true;
    return out;
}

} // namespace

UtilityTable::UtilityTable(std::vector<UtilityRecord> records) : records_(std::move(records)) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (const auto &r : records_)
        cells.emplace_back(index_of(processes_, r.process_name),
                           index_of(stakeholders_, r.stakeholder_name));
    const std::size_t none = records_.size();
    index_.assign(processes_.size() * stakeholders_.size(), none);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto &slot = index_[cells[i].first * stakeholders_.size() + cells[i].second];
        if (slot != none)
            throw AnalysisError("duplicate record for process '" + records_[i].process_name +
                                "' and stakeholder '" + records_[i].stakeholder_name + "'");
        slot = i;
    }
    for (std::size_t p = 0; p < processes_.size(); ++p)
        for (std::size_t s = 0; s < stakeholders_.size(); ++s)
            if (index_[p * stakeholders_.size() + s] == none)
                throw AnalysisError("no record for process '" + processes_[p] +
                                    "' and stakeholder '" + stakeholders_[s] + "'");
}

const UtilityRecord &UtilityTable::at(std::size_t process, std::size_t stakeholder) const {
    return records_[index_.at(process * stakeholders_.size() + stakeholder)];
}

std::vector<StakeholderRanking> rank_processes(const UtilityTable &table) {
    std::vector<StakeholderRanking> out;
    for (std::size_t s = 0; s < table.stakeholders().size(); ++s) {
        std::vector<double> scores;
        for (std::size_t p = 0; p < table.processes().size(); ++p)
            scores.push_back(table.at(p, s).utility);
        out.push_back({table.stakeholders()[s], rank_by(table.processes(), scores, true)});
    }
    return out;
}

namespace {

std::vector<double> h_per_process(const UtilityTable &table, const std::vector<std::size_t> &subset) {
    std::vector<double> out;
    std::vector<double> us(subset.size());
    for (std::size_t p = 0; p < table.processes().size(); ++p) {
        for (std::size_t i = 0; i < subset.size(); ++i)
            us[i] = table.at(p, subset[i]).utility;
        out.push_back(h_distance(us));
    }
    return out;
}

} // namespace

std::vector<RankedProcess> rank_collective(const UtilityTable &table) {
    std::vector<std::size_t> all(table.stakeholders().size());
    std::iota(all.begin(), all.end(), 0);
    return rank_by(table.processes(), h_per_process(table, all), false);
}

std::vector<CohortRow> cohort_analysis(const UtilityTable &table) {
    const std::size_t k = table.stakeholders().size();
    if (k == 0 || table.processes().empty())
        throw AnalysisError("cohort analysis needs at least one process and one stakeholder");
    if (k >= 63)
        throw AnalysisError("too many stakeholders for a full cohort analysis");

    std::vector<std::vector<std::size_t>> subsets;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1U)
                s.push_back(i);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto &a, const auto &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    std::vector<CohortRow> rows;
    for (const auto &subset : subsets) {
        CohortRow row;
        for (std::size_t i : subset)
            row.subset.push_back(table.stakeholders()[i]);
        row.h_values = h_per_process(table, subset);
        auto best = rank_by(table.processes(), row.h_values, false);
        row.argmin_process = best.front().process_name;
        row.tied = best.front().tied;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace dproc
