#include "dproc/model_library.hpp"

#include <algorithm>

namespace dproc {

namespace {

using C = Constraint;
using E = PreferenceExpr;

std::vector<Activity> event_summary() {
    return {
        {1, "A disaster strikes"},
        {2, "The state identifies the disaster"},
        {3, "A damage assessment is made"},
        {4, "Government officials review the damage and determine its extent and impact"},
        {5, "Governor decides if the state has enough resources to respond"},
        {6, "State disaster response occurs"},
        {7, "Major disaster declaration request for federal assistance is submitted"},
        {8, "The president reviews the request"},
        {9, "A disaster is declared by the president"},
        {10, "FEMA supports the disaster response with funding, supplies and personnel"},
    };
}

Activity audit_activity() {
    return {11, "Independent audit of damage impact and resources required is contracted"};
}

std::vector<Constraint> fdap_constraints() {
    return {C::prec(1, 2),  C::prec(1, 9),  C::succ(2, 3),         C::succ(3, 4),
            C::prec(4, 5),  C::prec(5, 6),  C::prec(5, 7),         C::orresp(5, {6, 7}),
            C::succ(7, 8),  C::weakresp(8, 9), C::succ(9, 10)};
}

std::vector<Constraint> replace(std::vector<Constraint> cs, const Constraint &from, Constraint to) {
    auto it = std::find(cs.begin(), cs.end(), from);
    *it = std::move(to);
    return cs;
}

std::vector<Stakeholder> ten_activity_stakeholders() {
    return {stakeholders::lightweight(), stakeholders::strong(false), stakeholders::reasonable(false)};
}

Alphabet with_audit() {
    auto acts = event_summary();
    acts.push_back(audit_activity());
    return Alphabet(std::move(acts));
}

} // namespace

NamedModel fdap() {
    return {DeclarativeProcess("FDAP", Alphabet(event_summary()), fdap_constraints()),
            ten_activity_stakeholders()};
}

NamedModel fdap_m1() {
    return {DeclarativeProcess("FDAP-M1", Alphabet(event_summary()),
                               replace(fdap_constraints(), C::prec(1, 9), C::prec(8, 9))),
            ten_activity_stakeholders()};
}

DeclarativeProcess fdap_m2_without_audit_ordering() {
    auto cs = fdap_constraints();
    cs.push_back(C::resp(4, 11));
    cs.push_back(C::prec(11, 8));
    return DeclarativeProcess("FDAP-M2", with_audit(), std::move(cs));
}

NamedModel fdap_m2() {
    auto cs = fdap_constraints();
    cs.push_back(C::resp(4, 11));
    cs.push_back(C::prec(11, 8));
    cs.push_back(C::prec(1, 11));
    return {DeclarativeProcess("FDAP-M2", with_audit(), std::move(cs)),
            {stakeholders::lightweight(), stakeholders::strong(true), stakeholders::reasonable(true)}};
}

NamedModel fdap_m3() {
    return {DeclarativeProcess("FDAP-M3", Alphabet(event_summary()),
                               replace(fdap_constraints(), C::prec(4, 5), C::prec(1, 5))),
            ten_activity_stakeholders()};
}

std::vector<NamedModel> fdap_models() { return {fdap(), fdap_m1(), fdap_m2(), fdap_m3()}; }

namespace stakeholders {

Stakeholder lightweight() {
    return {"S1", E::any_of({E::contains(4), E::contains(5), E::contains(8), E::contains(11)})};
}

Stakeholder lightweight_without_audit() {
    return {"S1", E::any_of({E::contains(4), E::contains(5), E::contains(8)})};
}

Stakeholder strong(bool with_audit) {
    std::vector<E> all{E::contains(4), E::contains(5), E::contains(8)};
    if (with_audit)
        all.push_back(E::contains(11));
    return {"S2", E::all_of(std::move(all))};
}

Stakeholder reasonable(bool with_audit) {
    // x happens, and after a review by 4 or 5.
    auto reviewed_before = [](ActivityId x) {
        return E::all_of({E::contains(x), E::any_of({E::atom(C::prec(4, x)), E::atom(C::prec(5, x))})});
    };
    std::vector<E> cases{reviewed_before(6), reviewed_before(7)};
    if (with_audit)
        cases.push_back(reviewed_before(11));
    return {"S3", E::any_of(std::move(cases))};
}

} // namespace stakeholders

} // namespace dproc
