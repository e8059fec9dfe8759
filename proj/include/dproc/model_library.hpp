#pragma once

// The Federal Disaster Assistance policy model, its three modifications, and
// the three transparency stakeholders.
//
//   FDAP     prec(1,2) prec(1,9) succ(2,3) succ(3,4) prec(4,5) prec(5,6)
//            prec(5,7) orresp(5,(6,7)) succ(7,8) weakresp(8,9) succ(9,10)
//   FDAP-M1  prec(1,9) replaced by prec(8,9)
//   FDAP-M2  adds activity 11 (independent audit) with resp(4,11),
//            prec(11,8) and prec(1,11)
//   FDAP-M3  prec(4,5) replaced by prec(1,5)

#include "dproc/process_model.hpp"
#include "dproc/stakeholder_prefs.hpp"

#include <vector>

namespace dproc {

struct NamedModel {
    DeclarativeProcess process;
    std::vector<Stakeholder> stakeholders;
};

NamedModel fdap();
NamedModel fdap_m1();
NamedModel fdap_m2();
NamedModel fdap_m3();

/// FDAP-M2 with only resp(4,11) and prec(11,8) added. Without prec(1,11) the
/// audit may be contracted before the disaster, which admits three extra
/// traces: (11), (11, 1) and (11, 1, 9, 10).
DeclarativeProcess fdap_m2_without_audit_ordering();

/// FDAP, M1, M2, M3 in that order.
std::vector<NamedModel> fdap_models();

namespace stakeholders {

/// Any review or assessment activity (4, 5, 8 or 11) occurs.
Stakeholder lightweight();
/// The three-atom form of lightweight() for 10-activity processes.
Stakeholder lightweight_without_audit();
/// Every review or assessment activity occurs; `with_audit` adds 11.
Stakeholder strong(bool with_audit);
/// State direction (6 or 7), and with `with_audit` the audit (11), happens
/// after a review by 4 or 5.
Stakeholder reasonable(bool with_audit);

} // namespace stakeholders

} // namespace dproc
