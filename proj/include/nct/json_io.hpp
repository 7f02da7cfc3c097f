#pragma once

#include <nlohmann/json_fwd.hpp>

#include "nct/bundles.hpp"
#include "nct/cocycle.hpp"
#include "nct/dim2.hpp"
#include "nct/finite_twisted.hpp"
#include "nct/transversality.hpp"

// JSON encodings of the domain types. Rationals are strings "p/q" in
// lowest terms with q > 0; matrices are row-major arrays of such strings;
// complex coefficients are pairs of decimal strings.

namespace nct {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const RMatrix& m);
RMatrix rmatrix_from_json(const Json& j);

Json to_json(const CocycleClass& c);
CocycleClass cocycle_from_json(const Json& j);

Json to_json(const TorusClass& t);
TorusClass torus_from_json(const Json& j);

Json to_json(const TransversePair& p);
TransversePair pair_from_json(const Json& j);

Json to_json(const System2D& s);

Json to_json(const ClassPath& p);
ClassPath path_from_json(const Json& j);

Json to_json(const Chart& c);
Chart chart_from_json(const Json& j);

Json to_json(const TransverseAtlas& a);
TransverseAtlas atlas_from_json(const Json& j);

Json to_json(const BundleDescriptor& d);
Json to_json(const ExampleBundles& e);

Json to_json(const FiniteAlgebraElement& f);
FiniteAlgebraElement element_from_json(const Json& j);

Json to_json(const VerificationReport& r);

}  // namespace nct
