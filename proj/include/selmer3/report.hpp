#pragma once

// JSON rendering of reports, family members, density results and class groups.

#include "json.hpp"

#include "selmer3/descent.hpp"
#include "selmer3/families.hpp"
#include "selmer3/formclass.hpp"

namespace selmer3::report {

using nlohmann::json;

/// Field names follow SelmerReport; absent values are null. The reference-table
/// column names sl_psi, su_psi, sl3, su3 are included as well.
json to_json(const SelmerReport& r);
/// Inverse of to_json. Throws ParseError on a malformed document.
SelmerReport from_json(const json& j);

json to_json(const FamilyMember& m);
json to_json(const DensityResult& d);
json to_json(const formclass::ClassGroup& G);

}  // namespace selmer3::report
