#include "dproc/stakeholder_prefs.hpp"

#include <algorithm>

namespace dproc {

PreferenceExpr PreferenceExpr::atom(Constraint c) { return PreferenceExpr(Op::atom, {std::move(c)}, {}); }

PreferenceExpr PreferenceExpr::all_of(std::vector<PreferenceExpr> children) {
    if (children.empty())
        throw ModelError("conjunction needs at least one operand");
    if (children.size() == 1)
        return std::move(children.front());
    return PreferenceExpr(Op::all_of, {}, std::move(children));
}

PreferenceExpr PreferenceExpr::any_of(std::vector<PreferenceExpr> children) {
    if (children.empty())
        throw ModelError("disjunction needs at least one operand");
    if (children.size() == 1)
        return std::move(children.front());
    return PreferenceExpr(Op::any_of, {}, std::move(children));
}

PreferenceExpr PreferenceExpr::negate(PreferenceExpr child) {
    std::vector<PreferenceExpr> children;
    children.push_back(std::move(child));
    return PreferenceExpr(Op::negate, {}, std::move(children));
}

bool PreferenceExpr::evaluate(const Occurrences &occ) const {
    auto eval = [&occ](const PreferenceExpr &e) { return e.evaluate(occ); };
    switch (op_) {
    case Op::atom:
        return satisfies(occ, atoms_.front());
    case Op::all_of:
        return std::all_of(children_.begin(), children_.end(), eval);
    case Op::any_of:
        return std::any_of(children_.begin(), children_.end(), eval);
    case Op::negate:
        return !children_.front().evaluate(occ);
    }
    return false;
}

int judge(const Stakeholder &stakeholder, const Occurrences &occ) {
    return stakeholder.expr.evaluate(occ) ? 1 : 0;
}

int judge(const Stakeholder &stakeholder, const Trace &trace) {
    return judge(stakeholder, Occurrences(trace));
}

std::uint64_t count_favourable(const Stakeholder &stakeholder, const TraceSet &traces) {
    std::uint64_t n = 0;
    for (const auto &t : traces.traces)
        n += static_cast<std::uint64_t>(judge(stakeholder, t));
    return n;
}

} // namespace dproc
