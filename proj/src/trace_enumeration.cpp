#include "dproc/trace_enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

namespace dproc {

bool TraceSet::contains(const Trace &t) const {
    return std::binary_search(traces.begin(), traces.end(), t, CanonicalTraceOrder{});
}

CapExceeded::CapExceeded(std::size_t alphabet_size, std::size_t cap)
    : std::runtime_error("alphabet of " + std::to_string(alphabet_size) +
                         " activities exceeds the brute-force cap of " + std::to_string(cap)),
      cap_(cap) {}

void sort_canonical(std::vector<Trace> &traces) {
    std::sort(traces.begin(), traces.end(), CanonicalTraceOrder{});
}

std::uint64_t partial_permutation_count(unsigned n) {
    // sum_{k} n!/(n-k)! via Horner: 1 + n(1 + (n-1)(1 + ...)).
    std::uint64_t total = 1;
    for (unsigned m = 1; m <= n; ++m)
        total = 1 + m * total;
    return total;
}

namespace {

class PrefixSearch {
  public:
    PrefixSearch(const DeclarativeProcess &process, bool prune)
        : process_(process), ids_(process.alphabet().ids()), used_(process.alphabet().max_id() + 1),
          prune_(prune) {
        prefix_.reserve(ids_.size());
    }

    template <typename Visit> void run_from_root(Visit &&visit) {
        if (satisfies_all(occ_, process_.constraints()))
            visit(std::span<const ActivityId>(prefix_));
    }

    /// Explores every prefix starting with `first`.
    template <typename Visit> void run_branch(ActivityId first, Visit &&visit) {
        if (extend(first))
            descend(visit);
        retract(first);
    }

    const std::vector<ActivityId> &ids() const { return ids_; }

  private:
    bool extend(ActivityId a) {
        prefix_.push_back(a);
        used_[a] = true;
        occ_.push(a);
        if (!prune_)
            return true;
        for (const auto &c : process_.constraints())
            if (safety_status(occ_, c, process_.alphabet()) == SafetyStatus::permanently_violated)
                return false;
        return true;
    }

    void retract(ActivityId a) {
        occ_.pop(a);
        used_[a] = false;
        prefix_.pop_back();
    }

    template <typename Visit> void descend(Visit &visit) {
        if (satisfies_all(occ_, process_.constraints()))
            visit(std::span<const ActivityId>(prefix_));
        for (ActivityId a : ids_) {
            if (used_[a])
                continue;
            if (extend(a))
                descend(visit);
            retract(a);
        }
    }

    const DeclarativeProcess &process_;
    std::vector<ActivityId> ids_;
    std::vector<char> used_;
    std::vector<ActivityId> prefix_;
    Occurrences occ_;
    bool prune_;
};

unsigned resolve_threads(unsigned requested) {
    if (requested == 0)
        requested = std::max(1u, std::thread::hardware_concurrency());
    return requested;
}

/// Runs one branch per first activity across workers; `work` fills that
/// branch's accumulator. Results come back in branch order.
template <typename State, typename Work>
std::vector<State> run_branches(const DeclarativeProcess &process, bool prune, unsigned threads,
                                Work work) {
    const auto ids = process.alphabet().ids();
    std::vector<State> results(ids.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        PrefixSearch search(process, prune);
        for (std::size_t i = next++; i < ids.size(); i = next++)
            work(search, ids[i], results[i]);
    };
    const unsigned n = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(ids.size(), 1));
    std::vector<std::future<void>> pending;
    for (unsigned t = 1; t < n; ++t)
        pending.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto &f : pending)
        f.get();
    return results;
}

TraceSet collect(const DeclarativeProcess &process, bool prune, unsigned threads) {
    TraceSet out{process.name(), {}};
    auto record = [](std::vector<Trace> &sink) {
        return [&sink](std::span<const ActivityId> t) {
            sink.emplace_back(std::vector<ActivityId>(t.begin(), t.end()));
        };
    };
    PrefixSearch root(process, prune);
    root.run_from_root(record(out.traces));
    auto branches = run_branches<std::vector<Trace>>(
        process, prune, threads,
        [&](PrefixSearch &search, ActivityId first, std::vector<Trace> &sink) {
            search.run_branch(first, record(sink));
        });
    for (auto &b : branches)
        std::move(b.begin(), b.end(), std::back_inserter(out.traces));
    sort_canonical(out.traces);
    return out;
}

} // namespace

TraceSet enumerate_bruteforce(const DeclarativeProcess &process, std::size_t cap) {
    if (process.alphabet().size() > cap)
        throw CapExceeded(process.alphabet().size(), cap);
    return collect(process, false, 1);
}

TraceSet enumerate_pruned(const DeclarativeProcess &process, const EnumerationOptions &options) {
    return collect(process, true, options.threads);
}

std::uint64_t count_valid(const DeclarativeProcess &process, const EnumerationOptions &options) {
    std::uint64_t total = 0;
    PrefixSearch root(process, true);
    root.run_from_root([&](std::span<const ActivityId>) { ++total; });
    auto branches = run_branches<std::uint64_t>(
        process, true, options.threads, [](PrefixSearch &search, ActivityId first, std::uint64_t &n) {
            search.run_branch(first, [&n](std::span<const ActivityId>) { ++n; });
        });
    for (auto n : branches)
        total += n;
    return total;
}

void for_each_valid(const DeclarativeProcess &process,
                    const std::function<void(std::span<const ActivityId>)> &visit) {
    PrefixSearch search(process, true);
    search.run_from_root(visit);
    for (ActivityId a : search.ids())
        search.run_branch(a, visit);
}

} // namespace dproc
