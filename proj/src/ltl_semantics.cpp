#include "dproc/ltl_semantics.hpp"

#include <algorithm>

namespace dproc {

Occurrences::Occurrences(const Trace &trace) {
    for (ActivityId a : trace.entries())
        push(a);
}

void Occurrences::push(ActivityId a) {
    if (a >= positions_.size())
        positions_.resize(a + 1, absent);
    positions_[a] = length_++;
}

void Occurrences::pop(ActivityId a) {
    positions_[a] = absent;
    --length_;
}

namespace {

bool holds_prec(const Occurrences &occ, ActivityId a, ActivityId b) {
    const int pb = occ.at(b);
    if (pb == Occurrences::absent)
        return true;
    const int pa = occ.at(a);
    return pa != Occurrences::absent && pa < pb;
}

bool holds_resp(const Occurrences &occ, ActivityId a, ActivityId b) {
    const int pa = occ.at(a);
    return pa == Occurrences::absent || occ.at(b) > pa;
}

bool holds_weakresp(const Occurrences &occ, ActivityId a, ActivityId b) {
    const int pa = occ.at(a);
    const int pb = occ.at(b);
    return pa == Occurrences::absent || pb == Occurrences::absent || pb > pa;
}

} // namespace

bool satisfies(const Occurrences &occ, const Constraint &c) {
    const ActivityId a = c.subject();
    switch (c.kind()) {
    case ConstraintKind::prec:
        return holds_prec(occ, a, c.object());
    case ConstraintKind::resp:
        return holds_resp(occ, a, c.object());
    case ConstraintKind::succ:
        return holds_prec(occ, a, c.object()) && holds_resp(occ, a, c.object());
    case ConstraintKind::weakresp:
        return holds_weakresp(occ, a, c.object());
    case ConstraintKind::orresp: {
        const int pa = occ.at(a);
        if (pa == Occurrences::absent)
            return true;
        return std::any_of(c.objects().begin(), c.objects().end(),
                           [&](ActivityId b) { return occ.at(b) > pa; });
    }
    case ConstraintKind::mustexist:
        return occ.occurs(a);
    }
    return false;
}

bool satisfies(const Trace &trace, const Constraint &c) { return satisfies(Occurrences(trace), c); }

bool satisfies_all(const Occurrences &occ, std::span<const Constraint> constraints) {
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](const Constraint &c) { return satisfies(occ, c); });
}

bool satisfies_all(const Trace &trace, std::span<const Constraint> constraints) {
    return satisfies_all(Occurrences(trace), constraints);
}

SafetyStatus safety_status(const Occurrences &occ, const Constraint &c, const Alphabet &alphabet) {
    const ActivityId a = c.subject();
    const int pa = occ.at(a);
    // A responder can still be appended after a iff it is unused and available.
    auto can_follow = [&](ActivityId b) {
        const int pb = occ.at(b);
        return pb > pa || (pb == Occurrences::absent && alphabet.contains(b));
    };
    bool violated = false;
    switch (c.kind()) {
    case ConstraintKind::prec:
        violated = !holds_prec(occ, a, c.object());
        break;
    case ConstraintKind::succ:
        // With the precedence half intact, the response half only fails if
        // the responder is unavailable.
        violated = !holds_prec(occ, a, c.object()) ||
                   (pa != Occurrences::absent && !can_follow(c.object()));
        break;
    case ConstraintKind::weakresp:
        violated = !holds_weakresp(occ, a, c.object());
        break;
    case ConstraintKind::resp:
        violated = pa != Occurrences::absent && !can_follow(c.object());
        break;
    case ConstraintKind::orresp:
        violated = pa != Occurrences::absent &&
                   std::none_of(c.objects().begin(), c.objects().end(), can_follow);
        break;
    case ConstraintKind::mustexist:
        violated = pa == Occurrences::absent && !alphabet.contains(a);
        break;
    }
    return violated ? SafetyStatus::permanently_violated : SafetyStatus::not_yet_violated;
}

SafetyStatus safety_status(const Trace &trace, const Constraint &c, const Alphabet &alphabet) {
    return safety_status(Occurrences(trace), c, alphabet);
}

} // namespace dproc
