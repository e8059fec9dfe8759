#pragma once

// Exhaustive enumeration of the valid traces of a declarative process.

#include "dproc/ltl_semantics.hpp"
#include "dproc/process_model.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dproc {

/// Valid traces of one process in canonical order (length, then lexicographic).
struct TraceSet {
    std::string process_name;
    std::vector<Trace> traces;

    std::size_t count() const { return traces.size(); }
    bool contains(const Trace &t) const;

    friend bool operator==(const TraceSet &, const TraceSet &) = default;
};

class CapExceeded : public std::runtime_error {
  public:
    CapExceeded(std::size_t alphabet_size, std::size_t cap);
    std::size_t cap() const { return cap_; }

  private:
    std::size_t cap_;
};

inline constexpr std::size_t default_bruteforce_cap = 10;

struct EnumerationOptions {
    /// Worker count for splitting the search by first activity. 0 picks the
    /// hardware concurrency.
    unsigned threads = 1;
};

/// Generates every sequence of distinct alphabet activities and keeps those
/// satisfying all constraints. Refuses alphabets larger than `cap`.
TraceSet enumerate_bruteforce(const DeclarativeProcess &process,
                              std::size_t cap = default_bruteforce_cap);

/// Depth-first search over prefixes, cutting any branch on which some
/// constraint is permanently violated. Output equals enumerate_bruteforce.
TraceSet enumerate_pruned(const DeclarativeProcess &process, const EnumerationOptions &options = {});

/// Number of valid traces, without materializing them.
std::uint64_t count_valid(const DeclarativeProcess &process, const EnumerationOptions &options = {});

/// Streams every valid trace to `visit` in search order (not canonical order).
/// The span is only valid for the duration of the call.
void for_each_valid(const DeclarativeProcess &process,
                    const std::function<void(std::span<const ActivityId>)> &visit);

void sort_canonical(std::vector<Trace> &traces);

/// Number of sequences of distinct elements drawn from n, i.e. the sum over
/// k of n!/(n-k)!.
std::uint64_t partial_permutation_count(unsigned n);

} // namespace dproc
