#pragma once

#include <string>

#include "json.hpp"
#include "tci/cones.hpp"
#include "tci/errors.hpp"
#include "tci/ideal.hpp"
#include "tci/linalg.hpp"
#include "tci/projections.hpp"
#include "tci/witness.hpp"

namespace tci {

using json = nlohmann::json;

// ---- loading (all throw input_error with the offending key in the message)

json load_json_file(const std::string& path);

// {"vars": [names], "generators": [polynomial strings], "claimed_dim"?: int}
Variety variety_from_json(const json& j, Budget& budget);

// {"ambient": m, "basis": [[constant strings, one inner array per vector]]}
LinearSubspace subspace_from_json(const json& j);

// {"V": subspace, "W": subspace}
Splitting splitting_from_json(const json& j);

// {"vars": [names], "parameter": name, "components": [strings]};
// vars must match the variety's context.
WitnessArc arc_from_json(const json& j, const Variety& X);

// A single constant in the polynomial grammar, e.g. "1/2", "3+1/2*i".
GaussianRational constant_from_string(const std::string& text);

// ---- serialization (deterministic: sorted keys, reduced monic bases)

json cone_to_json(const ConeResult& cone, const MonomialOrder& ord,
                  Budget& budget);
json inclusions_to_json(const InclusionReport& rep);
json theorem_to_json(const TheoremReport& rep);
json subspace_to_json(const LinearSubspace& S);
json membership_to_json(const MembershipReport& rep);
json region_to_json(const RegionReport& rep);

// Ideal generators as strings: reduced basis in `ord`, primitive scaling.
std::vector<std::string> basis_strings(const Ideal& I, const MonomialOrder& ord,
                                       Budget& budget);

}  // namespace tci
