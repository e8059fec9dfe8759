#pragma once

// Stakeholder favourability predicates: boolean combinations of temporal atoms.

#include "dproc/ltl_semantics.hpp"
#include "dproc/process_model.hpp"
#include "dproc/trace_enumeration.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dproc {

/// Boolean expression tree over constraint atoms. `contains(a)` is stored as
/// the atom mustexist(a). Atoms may name activities outside any particular
/// alphabet; such activities simply never occur.
class PreferenceExpr {
  public:
    enum class Op { atom, all_of, any_of, negate };

    static PreferenceExpr atom(Constraint c);
    static PreferenceExpr contains(ActivityId a) { return atom(Constraint::mustexist(a)); }
    /// Conjunction; a single child is returned unchanged.
    static PreferenceExpr all_of(std::vector<PreferenceExpr> children);
    /// Disjunction; a single child is returned unchanged.
    static PreferenceExpr any_of(std::vector<PreferenceExpr> children);
    static PreferenceExpr negate(PreferenceExpr child);

    Op op() const { return op_; }
    /// Only meaningful for Op::atom.
    const Constraint &constraint() const { return atoms_.front(); }
    const std::vector<PreferenceExpr> &children() const { return children_; }

    bool evaluate(const Occurrences &occ) const;
    bool evaluate(const Trace &trace) const { return evaluate(Occurrences(trace)); }

    friend bool operator==(const PreferenceExpr &, const PreferenceExpr &) = default;

  private:
    PreferenceExpr(Op op, std::vector<Constraint> atoms, std::vector<PreferenceExpr> children)
        : op_(op), atoms_(std::move(atoms)), children_(std::move(children)) {}

    Op op_;
    std::vector<Constraint> atoms_; // exactly one entry for atoms, otherwise empty
    std::vector<PreferenceExpr> children_;
};

struct Stakeholder {
    std::string name;
    PreferenceExpr expr;

    friend bool operator==(const Stakeholder &, const Stakeholder &) = default;
};

/// S(τ) in {0, 1}.
int judge(const Stakeholder &stakeholder, const Trace &trace);
int judge(const Stakeholder &stakeholder, const Occurrences &occ);

/// S(D): number of traces in the set judged favourable.
std::uint64_t count_favourable(const Stakeholder &stakeholder, const TraceSet &traces);

} // namespace dproc
