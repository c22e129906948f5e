#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "connective/conncat.hpp"
#include "connective/conndyn.hpp"
#include "connective/dynamics.hpp"
#include "connective/foliation.hpp"
#include "connective/representation.hpp"
#include "connective/space.hpp"

namespace connective::io {

using json = nlohmann::json;

// Subsets are arrays of point indices; empty sets are implicit in families.
json subset_to_json(Subset s);
Subset subset_from_json(const json& j, int n);
json family_to_json(const Family& fam);  // display order, ∅ omitted
Family family_from_json(const json& j, int n);

// Unvalidated space data, so that invalid families can be reported.
struct RawSpace {
  int points = 0;
  Family connected;
};
RawSpace raw_space_from_json(const json& j);
Space space_from_json(const json& j);
json to_json(const Space& sp);

Foliation foliation_from_json(const json& j);
json to_json(const Foliation& z);

Representation representation_from_json(const json& j);
json to_json(const Representation& rho);
json to_json(const RepMorphism& m);
RepMorphism rep_morphism_from_json(const json& j);

PartialEquiv partial_equiv_from_json(const json& j);
json to_json(const PartialEquiv& pe);

SeparationDevice device_from_json(const json& j);
json to_json(const SeparationDevice& dev);

// Either a bare array or {"map": [...]}.
PointMap point_map_from_json(const json& j);

FinCat category_from_json(const json& j);
json to_json(const FinCat& c);

// "category" may be inline or a path, resolved against base_dir first.
Dynamics dynamics_from_json(const json& j, const std::filesystem::path& base_dir = {});
json to_json(const Dynamics& a);

Functor functor_from_json(const json& j, const FinCat& src, const FinCat& dst);
Dynamorphism dynamorphism_from_json(const json& j, const Dynamics& src, const Dynamics& dst);
json to_json(const Dynamorphism& m, const Dynamics& src, const Dynamics& dst);
json to_json(const Functor& f, const FinCat& src, const FinCat& dst);

ConnCat conncat_from_json(const json& j, const std::filesystem::path& base_dir = {});
json to_json(const ConnCat& cc);

ConnDynamics conndyn_from_json(const json& j, const std::filesystem::path& base_dir = {});
json to_json(const ConnDynamics& cd);

struct MonoidInput {
  Monoid monoid;
  Family connected;
};
// {"table": [[...]], "unit": e, "connected": [[...]], "integral": bool}
MonoidInput monoid_from_json(const json& j);

// Reports produced by the CLI wrap their payload; inputs accept both forms.
const json& unwrap_report(const json& j);

}  // namespace connective::io
