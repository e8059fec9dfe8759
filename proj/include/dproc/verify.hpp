#pragma once

// Verification harness: golden-table reproduction for the bundled models,
// seeded oracle campaigns pitting pruned against brute-force enumeration,
// and the unconstrained trace count.

#include "dproc/process_model.hpp"

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace dproc {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // expected vs actual, or a note
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool passed() const;
    void add(std::string name, bool passed, std::string detail = {});
    void write(std::ostream &os) const;
};

/// Reference values for one bundled model. Counts are exact; utilities and
/// H values are six-decimal figures.
struct GoldenCase {
    std::string model;
    std::uint64_t valid = 0;
    std::vector<std::uint64_t> favourable; // S1, S2, S3
    std::vector<double> utility;           // S1, S2, S3
    std::vector<int> rank;                 // per stakeholder, 1 = best
    double h = 0.0;
    int collective_rank = 0;
};

std::vector<GoldenCase> golden_cases();

inline constexpr double golden_tolerance = 1e-6;

VerificationReport run_golden_suite();

/// Random process over 1..n with n in [3, 6] and 0 to 8 constraints. A
/// non-empty case `index` leads with a constraint of kind index % 6, so every
/// kind appears across a campaign.
DeclarativeProcess random_process(std::mt19937_64 &rng, std::size_t index);

VerificationReport run_oracle_campaign(std::uint64_t seed, int cases);

/// Sum over k of n!/(n-k)!, cross-checked by enumeration for n <= 8.
/// Throws AnalysisError above `cap` or if the two routes disagree.
std::uint64_t unconstrained_count(unsigned n, unsigned cap = 20);

/// Commonly quoted count for ten unconstrained activities. It is one more
/// than the partial-permutation sum and is reported, never asserted.
inline constexpr std::uint64_t quoted_unconstrained_count_10 = 9'864'102;

} // namespace dproc
