#pragma once

// Finite-trace semantics of the constraint templates, plus the safety test
// used to prune prefix search.

#include "dproc/process_model.hpp"

#include <vector>

namespace dproc {

/// Position lookup for one trace: id -> index of its occurrence, or absent.
/// Ids outside the trace (including ids outside any alphabet) read as absent.
class Occurrences {
  public:
    static constexpr int absent = -1;

    Occurrences() = default;
    explicit Occurrences(const Trace &trace);

    int at(ActivityId a) const {
        return a < positions_.size() ? positions_[a] : absent;
    }
    bool occurs(ActivityId a) const { return at(a) != absent; }
    int length() const { return length_; }

    // Incremental use by prefix search. push() requires a unused.
    void push(ActivityId a);
    void pop(ActivityId a);

  private:
    std::vector<int> positions_;
    int length_ = 0;
};

enum class SafetyStatus { not_yet_violated, permanently_violated };

bool satisfies(const Occurrences &occ, const Constraint &c);
bool satisfies(const Trace &trace, const Constraint &c);

bool satisfies_all(const Occurrences &occ, std::span<const Constraint> constraints);
bool satisfies_all(const Trace &trace, std::span<const Constraint> constraints);

/// permanently_violated iff no extension of the trace by unused alphabet
/// activities (including the empty extension) satisfies c.
SafetyStatus safety_status(const Occurrences &occ, const Constraint &c, const Alphabet &alphabet);
SafetyStatus safety_status(const Trace &trace, const Constraint &c, const Alphabet &alphabet);

} // namespace dproc
