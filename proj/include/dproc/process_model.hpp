#pragma once

// Core domain types: activities, traces, constraints and declarative processes.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dproc {

using ActivityId = std::uint32_t;

/// Raised when a model fails structural validation.
class ModelError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Activity {
    ActivityId id = 0;
    std::optional<std::string> label;

    friend bool operator==(const Activity &, const Activity &) = default;
};

/// Ordered activity vocabulary of a process. Ids are unique; labels, when
/// present, are non-empty.
class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Activity> activities);

    /// Unlabelled alphabet {first, ..., last}.
    static Alphabet range(ActivityId first, ActivityId last);

    bool contains(ActivityId id) const;
    const Activity *find(ActivityId id) const;
    std::size_t size() const { return activities_.size(); }
    bool empty() const { return activities_.empty(); }
    const std::vector<Activity> &activities() const { return activities_; }
    std::vector<ActivityId> ids() const;
    ActivityId max_id() const;

    friend bool operator==(const Alphabet &, const Alphabet &) = default;

  private:
    std::vector<Activity> activities_;
};

/// A finite execution record: activity ids in order of occurrence.
class Trace {
  public:
    Trace() = default;
    Trace(std::initializer_list<ActivityId> entries) : entries_(entries) {}
    explicit Trace(std::vector<ActivityId> entries) : entries_(std::move(entries)) {}

    std::span<const ActivityId> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    ActivityId operator[](std::size_t i) const { return entries_[i]; }

    bool contains(ActivityId a) const;
    std::optional<std::size_t> position_of(ActivityId a) const;

    /// "ε" for the empty trace, otherwise "(1, 2, 3)".
    std::string to_string() const;

    friend bool operator==(const Trace &, const Trace &) = default;
    friend auto operator<=>(const Trace &, const Trace &) = default;

  private:
    std::vector<ActivityId> entries_;
};

/// Length first, then lexicographic by id. This is the order used for every
/// emitted trace listing.
struct CanonicalTraceOrder {
    bool operator()(const Trace &a, const Trace &b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

enum class ConstraintKind { prec, resp, succ, weakresp, orresp, mustexist };

std::string_view to_string(ConstraintKind kind);
std::optional<ConstraintKind> constraint_kind_from_string(std::string_view name);

/// A temporal template instance. prec/resp/succ/weakresp take exactly one
/// object, orresp at least one, mustexist none. Reflexive instances are
/// rejected.
class Constraint {
  public:
    Constraint(ConstraintKind kind, ActivityId subject, std::vector<ActivityId> objects = {});

    static Constraint prec(ActivityId a, ActivityId b) { return {ConstraintKind::prec, a, {b}}; }
    static Constraint resp(ActivityId a, ActivityId b) { return {ConstraintKind::resp, a, {b}}; }
    static Constraint succ(ActivityId a, ActivityId b) { return {ConstraintKind::succ, a, {b}}; }
    static Constraint weakresp(ActivityId a, ActivityId b) { return {ConstraintKind::weakresp, a, {b}}; }
    static Constraint orresp(ActivityId a, std::vector<ActivityId> bs) {
        return {ConstraintKind::orresp, a, std::move(bs)};
    }
    static Constraint mustexist(ActivityId a) { return {ConstraintKind::mustexist, a, {}}; }

    ConstraintKind kind() const { return kind_; }
    ActivityId subject() const { return subject_; }
    const std::vector<ActivityId> &objects() const { return objects_; }
    /// Single object of a binary template.
    ActivityId object() const { return objects_.front(); }

    /// Every activity mentioned, subject first.
    std::vector<ActivityId> activities() const;

    /// Compact notation, e.g. "orresp(5,(6,7))".
    std::string to_string() const;

    friend bool operator==(const Constraint &, const Constraint &) = default;
    friend auto operator<=>(const Constraint &, const Constraint &) = default;

  private:
    ConstraintKind kind_;
    ActivityId subject_;
    std::vector<ActivityId> objects_;
};

/// A pairing of an alphabet with a set of constraints over it. Constraints
/// keep their declaration order; exact duplicates collapse to one.
class DeclarativeProcess {
  public:
    DeclarativeProcess(std::string name, Alphabet alphabet, std::vector<Constraint> constraints);

    const std::string &name() const { return name_; }
    const Alphabet &alphabet() const { return alphabet_; }
    const std::vector<Constraint> &constraints() const { return constraints_; }

    friend bool operator==(const DeclarativeProcess &, const DeclarativeProcess &) = default;

  private:
    std::string name_;
    Alphabet alphabet_;
    std::vector<Constraint> constraints_;
};

inline DeclarativeProcess new_process(std::string name, Alphabet alphabet,
                                      std::vector<Constraint> constraints) {
    return DeclarativeProcess(std::move(name), std::move(alphabet), std::move(constraints));
}

/// True iff entries are pairwise distinct and all belong to the alphabet.
/// Constraint satisfaction is not checked.
bool validate_trace_shape(const Trace &trace, const Alphabet &alphabet);

} // namespace dproc
