#include "dproc/process_model.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <unordered_set>

namespace dproc {

Alphabet::Alphabet(std::vector<Activity> activities) : activities_(std::move(activities)) {
    std::unordered_set<ActivityId> seen;
    for (const auto &a : activities_) {
        if (!seen.insert(a.id).second)
            throw ModelError("duplicate activity id " + std::to_string(a.id));
        if (a.label && a.label->empty())
            throw ModelError("activity " + std::to_string(a.id) + " has an empty label");
    }
}

Alphabet Alphabet::range(ActivityId first, ActivityId last) {
    std::vector<Activity> acts;
    for (ActivityId id = first; id <= last; ++id)
        acts.push_back({id, std::nullopt});
    return Alphabet(std::move(acts));
}

const Activity *Alphabet::find(ActivityId id) const {
    auto it = std::find_if(activities_.begin(), activities_.end(),
                           [id](const Activity &a) { return a.id == id; });
    return it == activities_.end() ? nullptr : &*it;
}

bool Alphabet::contains(ActivityId id) const { return find(id) != nullptr; }

std::vector<ActivityId> Alphabet::ids() const {
    std::vector<ActivityId> out;
    out.reserve(activities_.size());
    for (const auto &a : activities_)
        out.push_back(a.id);
    return out;
}

ActivityId Alphabet::max_id() const {
    ActivityId m = 0;
    for (const auto &a : activities_)
        m = std::max(m, a.id);
    return m;
}

bool Trace::contains(ActivityId a) const {
    return std::find(entries_.begin(), entries_.end(), a) != entries_.end();
}

std::optional<std::size_t> Trace::position_of(ActivityId a) const {
    auto it = std::find(entries_.begin(), entries_.end(), a);
    if (it == entries_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - entries_.begin());
}

std::string Trace::to_string() const {
    if (entries_.empty())
        return "ε";
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i)
        os << (i ? ", " : "") << entries_[i];
    os << ')';
    return os.str();
}

namespace {

constexpr std::array<std::string_view, 6> kind_names = {"prec",     "resp",   "succ",
                                                         "weakresp", "orresp", "mustexist"};

} // namespace

std::string_view to_string(ConstraintKind kind) { return kind_names[static_cast<std::size_t>(kind)]; }

std::optional<ConstraintKind> constraint_kind_from_string(std::string_view name) {
    for (std::size_t i = 0; i < kind_names.size(); ++i)
        if (kind_names[i] == name)
            return static_cast<ConstraintKind>(i);
    return std::nullopt;
}

Constraint::Constraint(ConstraintKind kind, ActivityId subject, std::vector<ActivityId> objects)
    : kind_(kind), subject_(subject), objects_(std::move(objects)) {
    switch (kind_) {
    case ConstraintKind::mustexist:
        if (!objects_.empty())
            throw ModelError("mustexist takes exactly one activity");
        break;
    case ConstraintKind::orresp:
        if (objects_.empty())
            throw ModelError("orresp needs at least one responder");
        break;
    default:
        if (objects_.size() != 1)
            throw ModelError(std::string(dproc::to_string(kind_)) + " takes exactly two activities");
    }
    for (std::size_t i = 0; i < objects_.size(); ++i) {
        if (objects_[i] == subject_)
            throw ModelError("reflexive constraint " + to_string());
        for (std::size_t j = 0; j < i; ++j)
            if (objects_[i] == objects_[j])
                throw ModelError("repeated responder in " + to_string());
    }
}

std::vector<ActivityId> Constraint::activities() const {
    std::vector<ActivityId> out{subject_};
    out.insert(out.end(), objects_.begin(), objects_.end());
    return out;
}

std::string Constraint::to_string() const {
    std::ostringstream os;
    os << dproc::to_string(kind_) << '(' << subject_;
    if (kind_ == ConstraintKind::orresp) {
        os << ",(";
        for (std::size_t i = 0; i < objects_.size(); ++i)
            os << (i ? "," : "") << objects_[i];
        os << ')';
    } else if (!objects_.empty()) {
        os << ',' << objects_.front();
    }
    os << ')';
    return os.str();
}

DeclarativeProcess::DeclarativeProcess(std::string name, Alphabet alphabet,
                                       std::vector<Constraint> constraints)
    : name_(std::move(name)), alphabet_(std::move(alphabet)) {
    for (auto &c : constraints) {
        for (ActivityId a : c.activities())
            if (!alphabet_.contains(a))
                throw ModelError("constraint " + c.to_string() + " references activity " +
                                 std::to_string(a) + " which is not in the alphabet");
        if (std::find(constraints_.begin(), constraints_.end(), c) == constraints_.end())
            constraints_.push_back(std::move(c));
    }
}

bool validate_trace_shape(const Trace &trace, const Alphabet &alphabet) {
    std::unordered_set<ActivityId> seen;
    for (ActivityId a : trace.entries())
        if (!alphabet.contains(a) || !seen.insert(a).second)
            return false;
    return true;
}

} // namespace dproc
