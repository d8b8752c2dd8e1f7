#pragma once

#include <json.hpp>

#include "anvm/a2.hpp"
#include "anvm/bethe.hpp"
#include "anvm/lattice.hpp"

namespace anvm {
namespace io {

using json = nlohmann::ordered_json;

/// Rationals serialize as "p/q" (q > 0, lowest terms, "p" when q = 1);
/// floats as {"decimal": "...", "precision_bits": n}.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, unsigned defaultPrec = BigFloat::kDefaultPrec);
std::vector<Scalar> scalars_from_json(const json& arr, unsigned defaultPrec = BigFloat::kDefaultPrec);
json scalars_to_json(const std::vector<Scalar>& v);

json model_to_json(const ModelParams& p);
ModelParams model_from_json(const json& j);

std::string norm_to_string(Norm n);         // "unit_a" | "unit_b"
Norm norm_from_string(const std::string&);  // throws on anything else

/// Full lattice schema:
/// {"rows":[{"rapidity":"p/q"}...], "cols":[{"rapidity":..,"antifund":bool?}...],
///  "model":{...}, "norm":"unit_a",
///  "boundary":{"left":[...],"right":[...],"top":[...],"bottom":[...],
///              "constraint":{...}?}}
/// with each edge {"fixed":c} or {"weighted":{"0":"1","1":"-1",...}}.
Lattice lattice_from_json(const json& j);
json lattice_to_json(const Lattice& lat);

json partition_value_to_json(const PartitionValue& pv);

a2::Spec a2_spec_from_json(const json& j);

bethe::Variant bethe_variant_from_string(const std::string& s);
json bethe_system_to_json(const bethe::System& sys);

}  // namespace io
}  // namespace anvm
